"""Independent reference implementations used to check the library.

None of these import the code paths they are used to check.
"""

from fractions import Fraction
from itertools import combinations, product


def cofactor_det(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * M[0][j] * cofactor_det(minor)
    return total


def max_minor(A, k):
    """Largest |k x k minor|, enumerating column sets in the outer loop."""
    m, n = len(A), len(A[0])
    best = 0
    for cols in combinations(range(n), k):
        for rows in combinations(range(m), k):
            best = max(best, abs(cofactor_det([[A[i][j] for j in cols] for i in rows])))
    return best


def cramer_vertices(A, b):
    """Vertices of {Ax <= b}: feasible points whose tight rows contain a nonsingular n-set."""
    m, n = len(A), len(A[0])
    out = set()
    for B in combinations(range(m), n):
        AB = [A[i] for i in B]
        d = cofactor_det(AB)
        if d == 0:
            continue
        x = []
        for j in range(n):
            Aj = [row[:j] + [b[i]] + row[j + 1:] for row, i in zip(AB, B)]
            x.append(Fraction(cofactor_det(Aj), d))
        if all(sum(a * xi for a, xi in zip(row, x)) <= bi for row, bi in zip(A, b)):
            out.add(tuple(x))
    return out


def box_lattice(A, b, lo, hi):
    n = len(A[0])
    return sorted(p for p in product(range(lo, hi + 1), repeat=n)
                  if all(sum(a * x for a, x in zip(row, p)) <= bi for row, bi in zip(A, b)))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def gift_wrap(points):
    """Strict corners of the planar convex hull (Jarvis march)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    start = pts[0]
    hull = []
    p = start
    while True:
        hull.append(p)
        q = pts[0] if pts[0] != p else pts[1]
        for r in pts:
            if r == p:
                continue
            c = _cross(p, q, r)
            # r is more clockwise, or collinear and farther
            if c < 0 or (c == 0 and _dist2(p, r) > _dist2(p, q)):
                q = r
        p = q
        if p == start:
            break
    # drop collinear middle points
    k = len(hull)
    if k <= 2:
        return sorted(hull)
    corners = [hull[i] for i in range(k) if _cross(hull[i - 1], hull[i], hull[(i + 1) % k]) != 0]
    return sorted(corners)


def _dist2(a, b):
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


def planar_edges(corners):
    """Pairs of hull corners with every other corner strictly on one side."""
    edges = set()
    for a, b in combinations(corners, 2):
        sides = [_cross(a, b, c) for c in corners if c not in (a, b)]
        if all(s > 0 for s in sides) or all(s < 0 for s in sides):
            edges.add(frozenset((a, b)))
    return edges


def is_lower_hermite(H):
    """Column-style HNF: pivots move strictly down, positive, row-reduced to their left."""
    if not H or not H[0]:
        return True
    rows, r = len(H), len(H[0])
    prev = -1
    for j in range(r):
        col = [H[i][j] for i in range(rows)]
        nz = [i for i, x in enumerate(col) if x != 0]
        if not nz:
            return False
        i = nz[0]
        if i <= prev or H[i][j] <= 0:
            return False
        for jj in range(j):
            if H[i][jj] < 0 or H[i][jj] >= H[i][j]:
                return False
        prev = i
    return True


def check_lp(lp, res):
    """Certificate check written against the problem data only."""
    G, h, E, f, c = lp.ineq_a, lp.ineq_b, lp.eq_a, lp.eq_b, lp.objective
    n = len(c)
    sign = 1 if lp.sense == "max" else -1
    status = res.status.value

    def row_dot(row, x):
        return sum(Fraction(a) * x_ for a, x_ in zip(row, x))

    def combo(yi, ye):
        return [sum(y * Fraction(r[j]) for y, r in zip(yi, G)) + sum(y * Fraction(r[j]) for y, r in zip(ye, E))
                for j in range(n)]

    def rhs(yi, ye):
        return sum(y * Fraction(v) for y, v in zip(yi, h)) + sum(y * Fraction(v) for y, v in zip(ye, f))

    if status in ("optimal", "unbounded"):
        x = res.point
        if any(row_dot(r, x) > v for r, v in zip(G, h)) or any(row_dot(r, x) != v for r, v in zip(E, f)):
            return False
    if status == "optimal":
        yi, ye = res.certificate.ineq, res.certificate.eq
        return (res.value == row_dot(c, res.point) and all(y >= 0 for y in yi)
                and combo(yi, ye) == [sign * Fraction(v) for v in c]
                and rhs(yi, ye) == sign * res.value)
    if status == "infeasible":
        yi, ye = res.certificate.ineq, res.certificate.eq
        return all(y >= 0 for y in yi) and all(v == 0 for v in combo(yi, ye)) and rhs(yi, ye) < 0
    r = res.certificate.direction
    return (all(row_dot(g, r) <= 0 for g in G) and all(row_dot(e, r) == 0 for e in E)
            and sign * row_dot(c, r) > 0)
