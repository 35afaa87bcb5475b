"""Lattice points of a polytope, the vertices of their convex hull, and its faces.

Faces are located combinatorially and then certified: each face carries a
vector ``c``, offset ``d`` and ``margin > 0`` with ``c.v = d`` on its vertices,
``c.w <= d - margin`` on every other hull vertex and ``|c_j| <= 1``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .budget import default_budgets
from .errors import EmptySetError, InfeasibleError, ParameterError, UnboundedError
from .linalg import dot, nullspace, rank
from .lp import LinearProgram, Status, lp_feasible, lp_solve
from .polyhedron import coordinate_bounds


@dataclass(frozen=True)
class HullFace:
    vertex_indices: tuple
    lattice_members: tuple
    dim_k: int
    c: tuple
    d: Fraction
    margin: Fraction
    improper: bool = False


def lattice_points(P, budgets=None):
    """All integer points of a bounded P, in lexicographic order.

    Coordinates are fixed one at a time; at each depth the exact LP range of
    the next coordinate, given the fixed prefix, bounds the integer loop.
    """
    budgets = budgets or default_budgets()
    n = P.n
    try:
        for i in range(n):
            lo, hi = coordinate_bounds(P, i)
            if lo == -math.inf or hi == math.inf:
                raise UnboundedError(f"P is unbounded in coordinate {i}")
    except InfeasibleError:
        return []
    A = P.a
    out = []

    def rec(prefix):
        i = len(prefix)
        resid = [bi - sum(a * x for a, x in zip(row, prefix)) for row, bi in zip(A, P.b)]
        if i == n - 1:
            lo, hi = -math.inf, math.inf
            for row, r in zip(A, resid):
                a = row[i]
                if a > 0:
                    hi = min(hi, Fraction(r, a))
                elif a < 0:
                    lo = max(lo, Fraction(r, a))
                elif r < 0:
                    return
            if lo == -math.inf or hi == math.inf:
                raise UnboundedError(f"P is unbounded in coordinate {i}")
        else:
            sub = [list(row[i:]) for row in A]
            e = [1] + [0] * (n - i - 1)
            lo_res = lp_solve(LinearProgram(e, sub, resid, sense="min"))
            if lo_res.status is Status.INFEASIBLE:
                return
            hi_res = lp_solve(LinearProgram(e, sub, resid, sense="max"))
            if Status.UNBOUNDED in (lo_res.status, hi_res.status):
                raise UnboundedError(f"P is unbounded in coordinate {i}")
            lo, hi = lo_res.value, hi_res.value
        for v in range(math.ceil(lo), math.floor(hi) + 1):
            if i == n - 1:
                out.append(tuple(prefix) + (v,))
                budgets.check("points", len(out))
            else:
                rec(prefix + [v])

    rec([])
    return out


def in_convex_hull(p, pts):
    """True iff ``p`` is a convex combination of ``pts`` (exact LP)."""
    if not pts:
        return False
    k = len(pts)
    n = len(p)
    eq_a = [[q[j] for q in pts] for j in range(n)] + [[1] * k]
    eq_b = list(p) + [1]
    ineq_a = [[-int(i == j) for j in range(k)] for i in range(k)]
    ok, _ = lp_feasible(ineq_a, [0] * k, eq_a, eq_b, n=k)
    return ok


def hull_vertices(S):
    """Points of ``S`` that are not convex combinations of the others; sorted."""
    S = sorted(set(tuple(p) for p in S))
    if not S:
        raise EmptySetError("hull_vertices needs a nonempty point set")
    return [v for i, v in enumerate(S) if not in_convex_hull(v, S[:i] + S[i + 1:])]


def face_dim(members):
    """Dimension of the affine hull of a nonempty point list."""
    if not members:
        raise EmptySetError("face_dim needs at least one point")
    p0 = members[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in members[1:]]
    return rank(diffs) if diffs else 0


def _certify(W, V, n):
    """Max-margin LP over (c, d, eps); returns (c, d, eps) with eps the optimum."""
    inside = set(W)
    nv = n + 2  # c_1..c_n, d, eps
    eq_a = [list(V[i]) + [-1, 0] for i in W]
    eq_b = [0] * len(eq_a)
    ineq_a, ineq_b = [], []
    for i, w in enumerate(V):
        if i not in inside:
            ineq_a.append(list(w) + [-1, 1])
            ineq_b.append(0)
    for j in range(n):
        row = [0] * nv
        row[j] = 1
        ineq_a.append(row)
        ineq_b.append(1)
        row = [0] * nv
        row[j] = -1
        ineq_a.append(row)
        ineq_b.append(1)
    cap = [0] * nv
    cap[-1] = 1
    ineq_a.append(cap)
    ineq_b.append(1)
    res = lp_solve(LinearProgram(cap, ineq_a, ineq_b, eq_a, eq_b, "max"))
    x = res.point
    return tuple(x[:n]), x[n], res.value


def _facet_vertex_sets(V):
    """Vertex-index sets of the facets of conv(V), V its own vertex set."""
    dim = face_dim(V)
    if dim == 0:
        return set()
    p0 = V[0]
    diffs = [[a - b for a, b in zip(v, p0)] for v in V[1:]]
    n = len(p0)
    # An affine chart: ``dim`` coordinates on which aff(V) projects injectively.
    chart = next(J for J in combinations(range(n), dim)
                 if rank([[d[j] for j in J] for d in diffs]) == dim)
    W = [[v[j] for j in chart] for v in V]
    facets = set()
    for sub in combinations(range(len(V)), dim):
        base = W[sub[0]]
        dirs = [[a - b for a, b in zip(W[i], base)] for i in sub[1:]]
        normals = nullspace(dirs, dim)
        if len(normals) != 1:
            continue
        c = normals[0]
        t = dot(c, base)
        vals = [dot(c, w) for w in W]
        if all(x <= t for x in vals) or all(x >= t for x in vals):
            facets.add(frozenset(i for i, x in enumerate(vals) if x == t))
    return facets


def _face_sets_by_facets(V):
    full = frozenset(range(len(V)))
    facets = _facet_vertex_sets(V)
    found = set(facets) | {full}
    frontier = list(facets)
    while frontier:
        nxt = []
        for F in frontier:
            for G in facets:
                I = F & G
                if I and I not in found:
                    found.add(I)
                    nxt.append(I)
        frontier = nxt
    return found


def _face_sets_by_subsets(V):
    n = len(V[0])
    out = set()
    for size in range(1, len(V) + 1):
        for W in combinations(range(len(V)), size):
            _, _, eps = _certify(W, V, n)
            if eps > 0:
                out.add(frozenset(W))
    return out


def faces(S, vertices=None, method="facets", budgets=None):
    """All nonempty faces of conv(S), including the improper one.

    ``method="facets"`` finds facets in an affine chart and closes them under
    intersection; ``method="subsets"`` tests every vertex subset with the
    margin LP.  Both return the same list, certified by the margin LP and
    ordered by (dimension, vertex indices).
    """
    budgets = budgets or default_budgets()
    S = sorted(set(tuple(p) for p in S))
    V = list(vertices) if vertices is not None else hull_vertices(S)
    if not V:
        raise EmptySetError("faces needs a nonempty point set")
    budgets.check("face_vertices", len(V))
    n = len(V[0])
    if method == "facets":
        sets = _face_sets_by_facets(V)
    elif method == "subsets":
        sets = _face_sets_by_subsets(V)
    else:
        raise ParameterError(f"unknown face method {method!r}")
    out = []
    for W in sets:
        idx = tuple(sorted(W))
        c, d, eps = _certify(idx, V, n)
        if eps <= 0:
            raise AssertionError(f"vertex set {idx} has no separating certificate")
        members = tuple(s for s in S if dot(c, s) == d)
        out.append(HullFace(
            vertex_indices=idx,
            lattice_members=members,
            dim_k=face_dim(list(members)),
            c=c,
            d=d,
            margin=eps,
            improper=len(idx) == len(V),
        ))
    out.sort(key=lambda F: (F.dim_k, F.vertex_indices))
    return out
