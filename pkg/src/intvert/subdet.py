"""Subdeterminant parameters of an integer matrix.

``delta_k(A, k)`` is the largest absolute k x k minor; ``delta(A)`` is that
value at k = n for a full-column-rank A, and ``delta_ext(A, b)`` applies the
same to the augmented matrix ``(A | b)``.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .budget import default_budgets
from .errors import ParameterError, RankError
from .linalg import det, max_norm, rank, shape


@dataclass(frozen=True)
class DeltaProfile:
    delta_1: int
    delta_rank: int
    delta_ext: int
    per_k: tuple = None  # ((k, delta_k), ...) when requested


def delta_k(A, k, budgets=None):
    """Maximum |det| over all k x k submatrices, by exhaustive enumeration."""
    budgets = budgets or default_budgets()
    m, n = shape(A)
    if not 1 <= k <= min(m, n):
        raise ParameterError(f"k must lie in [1, {min(m, n)}], got {k}")
    budgets.check("minors", comb(m, k) * comb(n, k))
    if k == 1:
        return max_norm(A)
    col_sets = list(combinations(range(n), k))
    best = 0
    for rows in combinations(range(m), k):
        sub = [A[i] for i in rows]
        for cols in col_sets:
            d = abs(det([[r[j] for j in cols] for r in sub]))
            if d > best:
                best = d
    return best


def _require_full_column_rank(A):
    m, n = shape(A)
    if rank(A) != n:
        raise RankError(f"A must have rank {n} (number of columns)")
    return n


def delta(A, budgets=None):
    """Delta(A) = Delta_n(A) for A of full column rank n."""
    n = _require_full_column_rank(A)
    return delta_k(A, n, budgets)


def delta_ext(A, b, budgets=None):
    """Delta_n of the augmented matrix (A | b)."""
    n = _require_full_column_rank(A)
    if len(b) != len(A):
        raise ParameterError("b must have one entry per row of A")
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    return delta_k(aug, n, budgets)


def delta_profile(A, b, ks=None, budgets=None):
    """Collect Delta_1, Delta at rank(A), Delta_ext and optionally a Delta_k table."""
    r = rank(A)
    if r == 0:
        raise RankError("A is the zero matrix")
    per_k = tuple((k, delta_k(A, k, budgets)) for k in ks) if ks else None
    return DeltaProfile(
        delta_1=max_norm(A),
        delta_rank=delta_k(A, r, budgets),
        delta_ext=delta_ext(A, b, budgets),
        per_k=per_k,
    )
