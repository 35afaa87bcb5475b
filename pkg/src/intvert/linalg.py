"""Exact integer and rational linear algebra on dense nested lists.

Integers are Python ``int`` (arbitrary precision) and rationals are
``fractions.Fraction``.  A matrix is a list of equal-length rows; nothing here
mutates its arguments.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionError, SingularMatrixError

Matrix = list  # list[list[int | Fraction]]
Vector = list  # list[int | Fraction]


def shape(M):
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for r in M:
        if len(r) != cols:
            raise DimensionError("ragged matrix")
    return rows, cols


def _square(M):
    rows, cols = shape(M)
    if rows != cols:
        raise DimensionError(f"expected a square matrix, got {rows}x{cols}")
    return rows


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    _, k = shape(A)
    k2, _ = shape(B)
    if k != k2:
        raise DimensionError(f"cannot multiply {len(A)}x{k} by {k2}x{len(B[0]) if B else 0}")
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, x):
    return [sum(a * xi for a, xi in zip(row, x)) for row in A]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def submatrix(M, rows, cols=None):
    if cols is None:
        return [list(M[i]) for i in rows]
    return [[M[i][j] for j in cols] for i in rows]


def max_norm(M):
    """Largest absolute entry, 0 for an empty matrix."""
    return max((abs(x) for row in M for x in row), default=0)


def det(M):
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of ``M``, so for integer input the
    divisions are exact and all arithmetic stays in ``int``.
    """
    n = _square(M)
    if n == 0:
        return 1
    a = [list(r) for r in M]
    exact_int = all(isinstance(x, int) for r in a for x in r)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                num = ri[j] * pk - aik * rk[j]
                ri[j] = num // prev if exact_int else num / prev
        prev = pk
    return sign * a[n - 1][n - 1]


def _echelon(M):
    """Row-reduce a Fraction copy of ``M``; return (reduced rows, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in M]
    rows, cols = shape(M)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(M):
    """Rank over the rationals; the empty matrix has rank 0."""
    if not M or not M[0]:
        return 0
    return len(_echelon(M)[1])


def solve_square(M, rhs):
    """Unique solution of ``M x = rhs`` as a list of Fractions."""
    n = _square(M)
    if len(rhs) != n:
        raise DimensionError(f"rhs has length {len(rhs)}, expected {n}")
    aug = [list(row) + [v] for row, v in zip(M, rhs)]
    red, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        raise SingularMatrixError("matrix is singular")
    return [red[i][n] for i in range(n)]


def nullspace(M, ncols=None):
    """Integer basis of the right null space of ``M`` (primitive vectors)."""
    if not M:
        n = ncols or 0
        return identity(n)
    rows, n = shape(M)
    red, pivots = _echelon(M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(primitive(v))
    return basis


def primitive(v):
    """Scale a rational vector to the primitive integer vector on its ray."""
    den = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * den) for x in v]
    g = gcd(*ints) if ints else 0
    return [x // g for x in ints] if g > 1 else ints


def is_unimodular(Q):
    _square(Q)
    return abs(det(Q)) == 1


@dataclass(frozen=True)
class HnfDecomposition:
    """``M = (H | 0) Q`` with ``Q`` unimodular and ``H`` of rank ``rank_r``."""

    h: Matrix  # rows(M) x r
    q: Matrix  # n x n
    rank_r: int


def hnf_decompose(M, ncols=None):
    """Column-style Hermite normal form ``M = (H | 0) Q``.

    ``H`` is lower echelon: its pivot rows i_1 < ... < i_r carry a positive
    pivot ``H[i_j][j]``, everything above a pivot is zero, and the entries to
    the left of a pivot in its row lie in ``[0, pivot)``.  The reduction is
    a deterministic sequence of unimodular column operations on ``M``; the
    inverse operations are applied as row operations to ``Q``.
    """
    rows, n = shape(M)
    if ncols is not None:
        if rows and n != ncols:
            raise DimensionError(f"matrix has {n} columns, expected {ncols}")
        n = ncols
    w = [[int(x) for x in r] for r in M]
    q = identity(n)

    def add_col(dst, src, t):
        # col_dst += t * col_src on w; its inverse on q is row_src -= t * row_dst
        for r in w:
            r[dst] += t * r[src]
        q[src] = [a - t * b for a, b in zip(q[src], q[dst])]

    def swap_col(j, k):
        for r in w:
            r[j], r[k] = r[k], r[j]
        q[j], q[k] = q[k], q[j]

    def negate_col(j):
        for r in w:
            r[j] = -r[j]
        q[j] = [-x for x in q[j]]

    pc = 0
    for i in range(rows):
        if pc == n:
            break
        row = w[i]
        while True:
            nz = [j for j in range(pc, n) if row[j] != 0]
            if not nz:
                break
            best = min(nz, key=lambda j: (abs(row[j]), j))
            if best != pc:
                swap_col(pc, best)
            if len(nz) == 1:
                break
            p = row[pc]
            for j in range(pc + 1, n):
                if row[j] != 0:
                    add_col(j, pc, -(row[j] // p))
        if row[pc] == 0:
            continue
        if row[pc] < 0:
            negate_col(pc)
        p = row[pc]
        for j in range(pc):
            t = row[j] // p
            if t:
                add_col(j, pc, -t)
        pc += 1
    h = [r[:pc] for r in w]
    return HnfDecomposition(h=h, q=q, rank_r=pc)


def is_hermite(H):
    """Check the lower-echelon Hermite conditions used by ``hnf_decompose``."""
    rows, r = shape(H) if H else (0, 0)
    last = -1
    for j in range(r):
        piv = next((i for i in range(rows) if H[i][j] != 0), None)
        if piv is None or piv <= last or H[piv][j] <= 0:
            return False
        if any(not 0 <= H[piv][k] < H[piv][j] for k in range(j)):
            return False
        last = piv
    return True
