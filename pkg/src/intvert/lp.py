"""Exact rational linear programming with certificates.

The solver is a two-phase primal simplex with Bland's rule on an
integer-preserving tableau: every row is scaled to integers up front, and
all tableau entries are kept as integers over a common denominator ``D``
(the current basis determinant), so each pivot is a Bareiss-style update
with exact integer division.  No floating point is involved anywhere.

Every result carries a certificate that can be checked by substitution:

* optimal: multipliers ``y`` with ``y_ineq >= 0``, ``y^T [G; E] = s c`` and
  ``y^T [h; f] = s * value`` where ``s = +1`` for max and ``-1`` for min;
* infeasible: Farkas multipliers with ``y_ineq >= 0``, ``y^T [G; E] = 0``
  and ``y^T [h; f] < 0``;
* unbounded: a ray ``r`` with ``G r <= 0``, ``E r = 0`` and ``c r`` improving.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import DimensionError, ParameterError


class Status(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class DualCertificate:
    ineq: list
    eq: list


@dataclass(frozen=True)
class FarkasCertificate:
    ineq: list
    eq: list


@dataclass(frozen=True)
class RayCertificate:
    direction: list


@dataclass(frozen=True)
class LinearProgram:
    """Optimize ``objective . x`` subject to ``G x <= h`` and ``E x = f``; x is free."""

    objective: list
    ineq_a: list = field(default_factory=list)
    ineq_b: list = field(default_factory=list)
    eq_a: list = field(default_factory=list)
    eq_b: list = field(default_factory=list)
    sense: str = "max"

    @property
    def n(self):
        return len(self.objective)

    def validate(self):
        if self.sense not in ("max", "min"):
            raise ParameterError(f"sense must be 'max' or 'min', got {self.sense!r}")
        n = self.n
        for name, rows, rhs in (("ineq", self.ineq_a, self.ineq_b), ("eq", self.eq_a, self.eq_b)):
            if len(rows) != len(rhs):
                raise DimensionError(f"{name}: {len(rows)} rows but {len(rhs)} right-hand sides")
            for r in rows:
                if len(r) != n:
                    raise DimensionError(f"{name}: row of length {len(r)}, expected {n}")


@dataclass(frozen=True)
class LpResult:
    status: Status
    point: list = None
    value: Fraction = None
    certificate: object = None


def _exact(x):
    return x if isinstance(x, int) else Fraction(x)


def _int_row(row, rhs):
    """Scale a rational row and rhs to integers; return (ints, rhs, scale)."""
    if isinstance(rhs, int) and all(isinstance(x, int) for x in row):
        return list(row), rhs, 1
    den = lcm(*(Fraction(x).denominator for x in row), Fraction(rhs).denominator)
    return [int(Fraction(x) * den) for x in row], int(Fraction(rhs) * den), den


class _Tableau:
    def __init__(self, rows, rhs, ncols):
        self.R = len(rows)
        self.ncols = ncols  # excludes the rhs column
        self.t = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.t.append([0] * (ncols + 1))
        self.D = 1
        self.basis = [None] * self.R

    def pivot(self, r, c):
        t = self.t
        p = t[r][c]
        D = self.D
        pr = t[r]
        for i, row in enumerate(t):
            if i == r:
                continue
            a = row[c]
            if a == 0:
                if p != D:
                    t[i] = [(x * p) // D for x in row]
            else:
                t[i] = [(x * p - a * y) // D for x, y in zip(row, pr)]
        self.D = p
        self.basis[r] = c
        if p < 0:
            self.t = [[-x for x in row] for row in self.t]
            self.D = -p

    def run(self, allowed):
        """Bland-rule simplex on the objective row; return None or an unbounded column."""
        t = self.t
        obj = self.R
        while True:
            t = self.t
            objrow = t[obj]
            c = next((j for j in allowed if objrow[j] < 0), None)
            if c is None:
                return None
            best = None
            for i in range(self.R):
                a = t[i][c]
                if a > 0:
                    if best is None:
                        best = i
                        continue
                    # compare rhs_i / a with rhs_best / a_best
                    lhs = t[i][-1] * t[best][c]
                    rhs = t[best][-1] * a
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                        best = i
            if best is None:
                return c
            self.pivot(best, c)


def lp_solve(lp):
    """Solve ``lp`` exactly; see the module docstring for certificate semantics."""
    lp.validate()
    n = lp.n
    G = [[_exact(x) for x in r] for r in lp.ineq_a]
    h = [_exact(x) for x in lp.ineq_b]
    E = [[_exact(x) for x in r] for r in lp.eq_a]
    f = [_exact(x) for x in lp.eq_b]
    c = [_exact(x) for x in lp.objective]
    s = 1 if lp.sense == "max" else -1

    # Presolve: drop exact duplicate rows; they get multiplier 0.
    seen = set()
    ineq_keep = []
    for i, (r, b) in enumerate(zip(G, h)):
        key = (tuple(r), b)
        if key not in seen:
            seen.add(key)
            ineq_keep.append(i)
    seen = set()
    eq_keep = []
    for i, (r, b) in enumerate(zip(E, f)):
        key = (tuple(r), b)
        if key not in seen:
            seen.add(key)
            eq_keep.append(i)

    # Rows of the form -a x_j <= 0 make x_j a nonnegative column instead of a row.
    bound_row = {}
    for i in ineq_keep:
        nz = [j for j in range(n) if G[i][j] != 0]
        if len(nz) == 1 and G[i][nz[0]] < 0 and h[i] == 0 and nz[0] not in bound_row:
            bound_row[nz[0]] = i
    bound_rows = set(bound_row.values())
    regular = [i for i in ineq_keep if i not in bound_rows]

    # Column layout: structural (x+ and, for free vars, x-), slacks, artificials.
    col_of = []  # per variable: (plus column, minus column or None)
    k = 0
    for j in range(n):
        if j in bound_row:
            col_of.append((k, None))
            k += 1
        else:
            col_of.append((k, k + 1))
            k += 2
    n_struct = k
    slack0 = n_struct
    n_rows = len(regular) + len(eq_keep)
    art0 = slack0 + len(regular)
    ncols = art0 + n_rows

    rows, rhs, flips, scales, origin = [], [], [], [], []
    for k_row, (kind, i) in enumerate([("ineq", i) for i in regular] + [("eq", i) for i in eq_keep]):
        src = G[i] if kind == "ineq" else E[i]
        b = h[i] if kind == "ineq" else f[i]
        ints, bi, den = _int_row(src, b)
        sigma = -1 if bi < 0 else 1
        row = [0] * ncols
        for j in range(n):
            p, m = col_of[j]
            row[p] = sigma * ints[j]
            if m is not None:
                row[m] = -sigma * ints[j]
        if kind == "ineq":
            row[slack0 + k_row] = sigma
        row[art0 + k_row] = 1
        rows.append(row)
        rhs.append(sigma * bi)
        flips.append(sigma)
        scales.append(den)
        origin.append((kind, i))

    tab = _Tableau(rows, rhs, ncols)
    tab.basis = [art0 + i for i in range(n_rows)]
    R = n_rows
    struct_cols = list(range(art0))

    # Phase I: minimize the sum of artificials.
    obj = tab.t[R]
    for j in range(art0):
        obj[j] = -sum(tab.t[i][j] for i in range(R))
    obj[-1] = -sum(tab.t[i][-1] for i in range(R))
    tab.run(struct_cols)

    def multipliers(y_int, obj_scale, s_obj):
        """Map internal row duals back to the caller's rows (y = -t convention)."""
        y_ineq = [Fraction(0)] * len(G)
        y_eq = [Fraction(0)] * len(E)
        for k_row, (kind, i) in enumerate(origin):
            val = -flips[k_row] * y_int[k_row] * scales[k_row] / obj_scale
            if kind == "ineq":
                y_ineq[i] = val
            else:
                y_eq[i] = val
        for j, i in bound_row.items():
            total = sum(y_ineq[r] * G[r][j] for r in range(len(G)) if r != i and G[r][j])
            total += sum(y_eq[r] * E[r][j] for r in range(len(E)) if E[r][j])
            y_ineq[i] = (total - s_obj[j]) / (-G[i][j])
        return y_ineq, y_eq

    if tab.t[R][-1] != 0:
        D = tab.D
        y_int = [1 - Fraction(tab.t[R][art0 + k], D) for k in range(R)]
        y_ineq, y_eq = multipliers(y_int, 1, [0] * n)
        return LpResult(Status.INFEASIBLE, certificate=FarkasCertificate(y_ineq, y_eq))

    # Drive zero-level artificials out of the basis where possible.
    for r in range(R):
        if tab.basis[r] >= art0:
            j = next((j for j in range(art0) if tab.t[r][j] != 0), None)
            if j is not None:
                tab.pivot(r, j)

    # Phase II: minimize c' = -s c (integer-scaled).
    cden = lcm(*(Fraction(x).denominator for x in c)) if c else 1
    cprime = [0] * ncols
    for j in range(n):
        cj = int(-s * c[j] * cden)
        p, m = col_of[j]
        cprime[p] = cj
        if m is not None:
            cprime[m] = -cj
    t = tab.t
    D = tab.D
    new_obj = [D * cprime[j] for j in range(ncols)] + [0]
    for i in range(R):
        cb = cprime[tab.basis[i]]
        if cb:
            row = t[i]
            for j in range(ncols + 1):
                new_obj[j] -= cb * row[j]
    t[R] = new_obj
    ray_col = tab.run(struct_cols)

    t, D = tab.t, tab.D
    z = [Fraction(0)] * ncols
    for i in range(R):
        z[tab.basis[i]] = Fraction(t[i][-1], D)

    def to_x(vec):
        return [vec[p] - (vec[m] if m is not None else 0) for p, m in col_of]

    point = to_x(z)
    value = sum(ci * xi for ci, xi in zip(c, point))
    if ray_col is not None:
        d = [Fraction(0)] * ncols
        d[ray_col] = Fraction(D)
        for i in range(R):
            d[tab.basis[i]] = Fraction(-t[i][ray_col])
        return LpResult(Status.UNBOUNDED, point=point, value=value,
                        certificate=RayCertificate(to_x(d)))

    y_int = [-Fraction(t[R][art0 + k], D) for k in range(R)]
    y_ineq, y_eq = multipliers(y_int, cden, [s * cj for cj in c])
    return LpResult(Status.OPTIMAL, point=point, value=value,
                    certificate=DualCertificate(y_ineq, y_eq))


def lp_feasible(ineq_a, ineq_b, eq_a=None, eq_b=None, n=None):
    """Decide feasibility of ``G x <= h, E x = f``.

    Returns ``(True, point)`` or ``(False, FarkasCertificate)``.
    """
    eq_a = eq_a or []
    eq_b = eq_b or []
    if n is None:
        rows = ineq_a or eq_a
        if not rows:
            raise ParameterError("cannot infer the number of variables from an empty system")
        n = len(rows[0])
    lp = LinearProgram([0] * n, ineq_a, ineq_b, eq_a, eq_b, "max")
    res = lp_solve(lp)
    if res.status is Status.INFEASIBLE:
        return False, res.certificate
    return True, res.point


def verify_result(lp, res):
    """Check a result's point, value and certificate by exact substitution."""
    G, h, E, f, c = lp.ineq_a, lp.ineq_b, lp.eq_a, lp.eq_b, lp.objective
    n = lp.n
    s = 1 if lp.sense == "max" else -1

    def feasible(x):
        return (all(sum(a * xi for a, xi in zip(r, x)) <= b for r, b in zip(G, h))
                and all(sum(a * xi for a, xi in zip(r, x)) == b for r, b in zip(E, f)))

    def combo(cert):
        return [sum(y * r[j] for y, r in zip(cert.ineq, G)) + sum(y * r[j] for y, r in zip(cert.eq, E))
                for j in range(n)]

    def rhs(cert):
        return sum(y * b for y, b in zip(cert.ineq, h)) + sum(y * b for y, b in zip(cert.eq, f))

    if res.status is Status.OPTIMAL:
        cert = res.certificate
        return (feasible(res.point)
                and res.value == sum(a * b for a, b in zip(c, res.point))
                and all(y >= 0 for y in cert.ineq)
                and combo(cert) == [s * cj for cj in c]
                and rhs(cert) == s * res.value)
    if res.status is Status.INFEASIBLE:
        cert = res.certificate
        return (all(y >= 0 for y in cert.ineq)
                and all(v == 0 for v in combo(cert))
                and rhs(cert) < 0)
    r = res.certificate.direction
    return (feasible(res.point)
            and all(sum(a * x for a, x in zip(row, r)) <= 0 for row in G)
            and all(sum(a * x for a, x in zip(row, r)) == 0 for row in E)
            and s * sum(a * x for a, x in zip(c, r)) > 0)
