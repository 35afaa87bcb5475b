import random

import pytest
from hypothesis import given, strategies as st

from intvert.budget import Budgets
from intvert.errors import BudgetError, ParameterError, RankError
from intvert.linalg import identity, rank, transpose
from intvert.subdet import delta, delta_ext, delta_k, delta_profile
from oracles import max_minor


def test_delta_examples():
    assert delta_k([[1, 1], [-1, 1], [0, -1]], 2) == 2
    assert delta(identity(3)) == 1
    assert delta_ext(identity(2), [3, 5]) == 5


def test_delta_1_is_max_entry():
    assert delta_k([[1, -7], [3, 2]], 1) == 7


def test_k_out_of_range():
    with pytest.raises(ParameterError):
        delta_k([[1, 2]], 2)
    with pytest.raises(ParameterError):
        delta_k([[1, 2]], 0)


def test_rank_deficient_rejected():
    with pytest.raises(RankError):
        delta([[1, 2], [2, 4]])


def test_budget_exceeded():
    A = [[1] * 6 for _ in range(12)]
    with pytest.raises(BudgetError) as exc:
        delta_k(A, 3, Budgets(minors=100))
    assert exc.value.name == "minors"


def test_profile():
    prof = delta_profile([[2, 2], [-1, 0], [0, -1]], [3, 0, 0], ks=[1, 2])
    assert (prof.delta_1, prof.delta_rank, prof.delta_ext) == (2, 2, 3)
    assert prof.per_k == ((1, 2), (2, 2))


mats = st.tuples(st.integers(1, 5), st.integers(1, 4)).flatmap(
    lambda rc: st.lists(st.lists(st.integers(-5, 5), min_size=rc[1], max_size=rc[1]),
                        min_size=rc[0], max_size=rc[0]))


@given(mats, st.integers(1, 4))
def test_matches_oracle_and_transpose(A, k):
    k = min(k, len(A), len(A[0]))
    assert delta_k(A, k) == max_minor(A, k) == delta_k(transpose(A), k)


def test_row_deletion_never_increases():
    rng = random.Random(3)
    for _ in range(30):
        A = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(6)]
        if rank(A) < 3:
            continue
        full = delta_k(A, 3)
        for i in range(6):
            B = A[:i] + A[i + 1:]
            assert delta_k(B, 3) <= full
