"""Checks of the near-tightness theorem and the vertex-count bounds for P_I.

Everything is computed in exact arithmetic; a failed check is reported, never
rounded away.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .budget import default_budgets
from .deep_bases import TheoremViolation, beta, deep_base_for_vertex
from .errors import ParameterError, UnboundedError
from .hull import faces, hull_vertices, in_convex_hull, lattice_points
from .linalg import max_norm, rank, submatrix
from .polyhedron import is_bounded
from .subdet import delta as delta_of, delta_ext as delta_ext_of


@dataclass(frozen=True)
class SupportProfile:
    threshold: int
    supp_set: tuple
    zeros_set: tuple


def support_profile(u, threshold):
    """Split indices of ``u`` into ``|u_i| >= threshold`` and the rest."""
    supp = tuple(i for i, x in enumerate(u) if abs(x) >= threshold)
    zeros = tuple(i for i, x in enumerate(u) if abs(x) < threshold)
    return SupportProfile(threshold, supp, zeros)


@dataclass(frozen=True)
class FaceCheck:
    vertex_indices: tuple
    face_dim: int
    near_tight_rows: tuple
    rank_t: int
    rank_ok: bool
    supp_ok: bool
    max_supp: int  # largest |supp_Delta(b - A x)| over the face's lattice points
    n_members: int = 0
    improper: bool = False

    @property
    def ok(self):
        return self.rank_ok and self.supp_ok


def check_face(P, delta, face):
    n, m, k = P.n, P.m, face.dim_k
    slack_rows = [P.slacks(x) for x in face.lattice_members]
    worst = [max(col) for col in zip(*slack_rows)]
    T = tuple(i for i, s in enumerate(worst) if s <= delta - 1)
    r = rank(submatrix(P.a, T)) if T else 0
    max_supp = max(len(support_profile(u, delta).supp_set) for u in slack_rows)
    return FaceCheck(
        vertex_indices=face.vertex_indices,
        face_dim=k,
        near_tight_rows=T,
        rank_t=r,
        rank_ok=r >= n - k,
        supp_ok=max_supp <= m - n + k,
        max_supp=max_supp,
        n_members=len(face.lattice_members),
        improper=face.improper,
    )


def check_theorem1(P, delta=None, face_list=None, budgets=None):
    """One FaceCheck per face of P_I (faces computed unless supplied)."""
    if delta is None:
        delta = delta_of([list(r) for r in P.a], budgets)
    if face_list is None:
        face_list = faces(lattice_points(P, budgets), budgets=budgets)
    return [check_face(P, delta, F) for F in face_list]


# ---------------------------------------------------------------- gamma


def is_convex_independent(points):
    pts = [tuple(p) for p in points]
    return all(not in_convex_hull(p, pts[:i] + pts[i + 1:]) for i, p in enumerate(pts))


def _can_add(cur, p):
    if in_convex_hull(p, cur):
        return False
    for i, q in enumerate(cur):
        if in_convex_hull(q, cur[:i] + cur[i + 1:] + [p]):
            return False
    return True


@lru_cache(maxsize=None)
def _gamma_search(n, delta):
    grid = list(product(range(delta), repeat=n))
    best = []

    def extend(cur, start):
        nonlocal best
        if len(cur) > len(best):
            best = list(cur)
        for idx in range(start, len(grid)):
            if len(cur) + len(grid) - idx <= len(best):
                return
            p = grid[idx]
            if _can_add(cur, p):
                extend(cur + [p], idx + 1)

    extend([], 0)
    return len(best), tuple(best)


def gamma_bruteforce(n, delta, budgets=None):
    """Largest convex-independent subset of ``{0..delta-1}^n``; returns (size, witness).

    Depth-first search over grid points in lexicographic order, pruned when
    the remaining points cannot beat the best set found so far.
    """
    budgets = budgets or default_budgets()
    if n < 1 or delta < 1:
        raise ParameterError("gamma needs n >= 1 and Delta >= 1")
    budgets.check("gamma_grid", delta**n)
    return _gamma_search(n, delta)


def gamma_for_lemma(n, delta, budgets=None):
    """gamma value for the beta * gamma vertex bound: (value, "exact" | "brass")."""
    budgets = budgets or default_budgets()
    if n == 1:
        return (1 if delta == 1 else 2), "exact"
    if delta**n <= budgets.gamma_exact:
        return gamma_bruteforce(n, delta, budgets)[0], "exact"
    return brass(n, delta), "brass"


# ---------------------------------------------------------------- bounds


def main_bound(n, m, delta):
    return 2 * comb(m, n) * delta ** (n - 1)


def brass(n, delta):
    return 2 * delta ** (n - 1)


def erdos_furedi(n, delta):
    return Fraction(4, n) * Fraction(delta) ** (n - 2)


def xi(n, m):
    """Maximum vertex count of an n-polytope with m facets (dual cyclic polytope)."""
    s, odd = divmod(n, 2)
    if odd:
        return 2 * comb(m - s - 1, s)
    val = Fraction(m, m - s) * comb(m - s, s)
    return int(val) if val.denominator == 1 else val


@dataclass(frozen=True)
class BoundValues:
    main_bound: int
    xi: object
    brass: int
    erdos_furedi: Fraction


def bound_formulas(n, m, delta):
    if not (m >= n >= 1 and delta >= 1):
        raise ParameterError(f"need m >= n >= 1 and Delta >= 1, got n={n}, m={m}, Delta={delta}")
    return BoundValues(main_bound(n, m, delta), xi(n, m), brass(n, delta), erdos_furedi(n, delta))


# ---------------------------------------------------------------- per-vertex checks


@dataclass(frozen=True)
class VertexCheck:
    vertex: tuple
    slacks: tuple
    base: tuple  # rows of a near-tight nonsingular base, or None
    supp_literal: int  # |{i : slack_i >= Delta - 1}|
    supp_derived: int  # |{i : slack_i >= Delta}|


def check_corollary1(P, delta, vertices):
    """Per-vertex near-tight base and slack support counts at both thresholds."""
    out = []
    for v in vertices:
        sl = P.slacks(v)
        try:
            base = deep_base_for_vertex(P, delta, v).rows_b
        except TheoremViolation:
            base = None
        out.append(VertexCheck(
            vertex=tuple(v),
            slacks=tuple(sl),
            base=base,
            supp_literal=len(support_profile(sl, delta - 1).supp_set),
            supp_derived=len(support_profile(sl, delta).supp_set),
        ))
    return out


@dataclass
class VerificationReport:
    instance_id: str
    m: int
    n: int
    delta: int
    delta_1: int
    delta_ext: int
    lattice_count: int = 0
    vertices: list = field(default_factory=list)
    faces_per_dim: dict = field(default_factory=dict)
    face_checks: list = field(default_factory=list)
    vertex_checks: list = field(default_factory=list)
    beta: int = 0
    gamma: int = 0
    gamma_source: str = "exact"
    bounds: BoundValues = None

    @property
    def theorem1_ok(self):
        return all(fc.ok for fc in self.face_checks)

    @property
    def prop1_ok(self):
        return all(vc.base is not None for vc in self.vertex_checks)

    @property
    def prop2_literal_failures(self):
        return [vc.vertex for vc in self.vertex_checks if vc.supp_literal > self.m - self.n]

    @property
    def prop2_derived_failures(self):
        return [vc.vertex for vc in self.vertex_checks if vc.supp_derived > self.m - self.n]

    @property
    def prop2_ok(self):
        return not self.prop2_derived_failures

    @property
    def main_ok(self):
        return len(self.vertices) <= self.bounds.main_bound

    @property
    def main_ratio(self):
        return Fraction(len(self.vertices), self.bounds.main_bound)

    @property
    def lemma1_bound(self):
        return self.beta * self.gamma

    @property
    def lemma1_ok(self):
        return len(self.vertices) <= self.lemma1_bound

    @property
    def all_ok(self):
        return (self.theorem1_ok and self.prop1_ok and self.prop2_ok
                and self.main_ok and self.lemma1_ok)


def verify_instance(P, instance_id="", budgets=None):
    """Run every check on one bounded instance."""
    budgets = budgets or default_budgets()
    A = [list(r) for r in P.a]
    d = delta_of(A, budgets)
    rep = VerificationReport(
        instance_id=instance_id, m=P.m, n=P.n, delta=d,
        delta_1=max_norm(A), delta_ext=delta_ext_of(A, list(P.b), budgets),
    )
    rep.bounds = bound_formulas(P.n, P.m, d)
    rep.gamma, rep.gamma_source = gamma_for_lemma(P.n, d, budgets)
    if not is_bounded(P):
        raise UnboundedError("verification needs a bounded polyhedron")
    S = lattice_points(P, budgets)
    rep.lattice_count = len(S)
    rep.beta = beta(P, d, budgets)
    if not S:
        return rep
    V = hull_vertices(S)
    rep.vertices = V
    F = faces(S, vertices=V, budgets=budgets)
    per_dim = {}
    for face in F:
        per_dim[face.dim_k] = per_dim.get(face.dim_k, 0) + 1
    rep.faces_per_dim = dict(sorted(per_dim.items()))
    rep.face_checks = [check_face(P, d, face) for face in F]
    rep.vertex_checks = check_corollary1(P, d, V)
    return rep
