"""H-represented polyhedra ``P = {x : A x <= b}`` with integer data."""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .budget import default_budgets
from .errors import DimensionError, InfeasibleError, ParameterError, RankError
from .linalg import det, matvec, rank, shape, solve_square, submatrix
from .lp import LinearProgram, Status, lp_feasible, lp_solve


@dataclass(frozen=True)
class Polyhedron:
    """Integer system ``a x <= b``.

    With ``strict=True`` (the default) the constructor insists on
    ``rank(a) = n``; relaxed instances record the violation in
    ``full_rank`` instead.
    """

    a: tuple
    b: tuple
    full_rank: bool = True

    def __init__(self, a, b, strict=True):
        a = tuple(tuple(int(x) for x in row) for row in a)
        b = tuple(int(x) for x in b)
        if not a:
            raise DimensionError("a polyhedron needs at least one inequality")
        m, n = shape(a)
        if n < 1:
            raise DimensionError("a polyhedron needs at least one variable")
        if len(b) != m:
            raise DimensionError(f"b has {len(b)} entries for {m} rows")
        full = rank(a) == n
        if strict and not full:
            raise RankError(f"rank(A) < n = {n}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "full_rank", full)

    @property
    def m(self):
        return len(self.a)

    @property
    def n(self):
        return len(self.a[0])

    def slacks(self, x):
        """Slack vector ``b - A x``."""
        return [bi - s for bi, s in zip(self.b, matvec(self.a, x))]

    def contains(self, x):
        return all(s >= 0 for s in self.slacks(x))

    def rows(self, idx):
        return [list(self.a[i]) for i in idx]


@dataclass(frozen=True)
class RealVertex:
    point: tuple  # Fractions
    tight_rows: tuple


def is_feasible(P):
    ok, _ = lp_feasible([list(r) for r in P.a], list(P.b), n=P.n)
    return ok


def real_vertices(P, budgets=None):
    """Vertices of P by basis enumeration, sorted lexicographically."""
    budgets = budgets or default_budgets()
    if not P.full_rank:
        raise RankError("real_vertices needs rank(A) = n")
    m, n = P.m, P.n
    budgets.check("bases", math.comb(m, n))
    found = {}
    for B in combinations(range(m), n):
        AB = P.rows(B)
        if det(AB) == 0:
            continue
        x = tuple(solve_square(AB, [P.b[i] for i in B]))
        if x in found:
            continue
        sl = P.slacks(x)
        if all(s >= 0 for s in sl):
            found[x] = tuple(i for i, s in enumerate(sl) if s == 0)
    return [RealVertex(x, found[x]) for x in sorted(found)]


def coordinate_bounds(P, i):
    """Exact ``(min, max)`` of ``x_i`` over P; infinite ends are ``-inf`` / ``inf``."""
    if not 0 <= i < P.n:
        raise ParameterError(f"coordinate {i} out of range for n = {P.n}")
    A = [list(r) for r in P.a]
    e = [int(j == i) for j in range(P.n)]
    out = []
    for sense, inf in (("min", -math.inf), ("max", math.inf)):
        res = lp_solve(LinearProgram(e, A, list(P.b), sense=sense))
        if res.status is Status.INFEASIBLE:
            raise InfeasibleError("polyhedron is empty")
        out.append(inf if res.status is Status.UNBOUNDED else res.value)
    return tuple(out)


def is_bounded(P):
    return all(lo != -math.inf and hi != math.inf
               for lo, hi in (coordinate_bounds(P, i) for i in range(P.n)))


def tight_rank(P, rows):
    return rank(submatrix(P.a, rows)) if rows else 0
