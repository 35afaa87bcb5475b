"""Delta-deep bases of ``P = {x : A x <= b}``.

A row set ``B`` with ``|B| = n`` and ``det(A_B) != 0`` is Delta-deep when the
band system

    b_B - (Delta - 1) <= A_B x <= b_B,    A_rest x <= b_rest

has a real solution.
"""

import math
from dataclasses import dataclass
from itertools import combinations

from .budget import default_budgets
from .errors import IntvertError, ParameterError, RankError
from .linalg import det
from .lp import lp_feasible


class TheoremViolation(IntvertError):
    """No near-tight base exists for a hull vertex.

    This would contradict the structural theorem being tested, so it is
    raised instead of being folded into a report silently.
    """


@dataclass(frozen=True)
class DeepBase:
    rows_b: tuple
    det_abs: int
    witness: tuple


def band_system(P, B, delta):
    """Inequality rows and rhs of the band system for base ``B``."""
    if delta < 1:
        raise ParameterError(f"Delta must be a positive integer, got {delta}")
    G = [list(r) for r in P.a]
    h = list(P.b)
    for i in B:
        G.append([-x for x in P.a[i]])
        h.append(-(P.b[i] - (delta - 1)))
    return G, h


def satisfies_band(P, B, delta, x):
    sl = P.slacks(x)
    inB = set(B)
    return all(s >= 0 for s in sl) and all(sl[i] <= delta - 1 for i in inB)


def _nonsingular_bases(P, budgets):
    if not P.full_rank:
        raise RankError("deep bases need rank(A) = n")
    budgets.check("bases", math.comb(P.m, P.n))
    for B in combinations(range(P.m), P.n):
        d = det(P.rows(B))
        if d != 0:
            yield B, abs(d)


def enumerate_deep_bases(P, delta, budgets=None):
    """All Delta-deep bases of P, sorted by index set."""
    budgets = budgets or default_budgets()
    out = []
    for B, d in _nonsingular_bases(P, budgets):
        G, h = band_system(P, B, delta)
        ok, x = lp_feasible(G, h, n=P.n)
        if ok:
            out.append(DeepBase(rows_b=B, det_abs=d, witness=tuple(x)))
    return out


def beta(P, delta, budgets=None):
    return len(enumerate_deep_bases(P, delta, budgets))


def near_tight_rows(P, x, delta):
    return tuple(i for i, s in enumerate(P.slacks(x)) if s <= delta - 1)


def deep_base_for_vertex(P, delta, v):
    """Lexicographically first nonsingular base whose slacks at ``v`` are all <= Delta-1.

    ``v`` itself witnesses the band system, so the base is Delta-deep.
    Raises TheoremViolation when no such base exists.
    """
    T = near_tight_rows(P, v, delta)
    for B in combinations(T, P.n):
        d = det(P.rows(B))
        if d != 0:
            return DeepBase(rows_b=B, det_abs=abs(d), witness=tuple(v))
    raise TheoremViolation(
        f"vertex {tuple(v)} has near-tight rows {T} containing no nonsingular {P.n}-subset")
