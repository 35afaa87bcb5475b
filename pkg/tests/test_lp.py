import random
from fractions import Fraction

import pytest

from intvert.errors import ParameterError
from intvert.lp import LinearProgram, Status, lp_feasible, lp_solve, verify_result
from oracles import check_lp


def test_box_maximum():
    lp = LinearProgram([1, 1], [[1, 0], [0, 1], [-1, 0], [0, -1]], [1, 1, 0, 0])
    res = lp_solve(lp)
    assert res.status is Status.OPTIMAL
    assert res.value == 2
    assert res.point == [1, 1]
    assert check_lp(lp, res) and verify_result(lp, res)


def test_farkas_example():
    lp = LinearProgram([0], [[1], [-1]], [0, -1])
    res = lp_solve(lp)
    assert res.status is Status.INFEASIBLE
    y = res.certificate.ineq
    assert y[0] * 1 + y[1] * -1 == 0
    assert y[0] * 0 + y[1] * -1 < 0
    assert [y_ / y[0] for y_ in y] == [1, 1]
    assert check_lp(lp, res)


def test_unbounded_ray():
    lp = LinearProgram([1], [[-1]], [0])
    res = lp_solve(lp)
    assert res.status is Status.UNBOUNDED
    assert res.certificate.direction[0] > 0
    assert check_lp(lp, res)


def test_minimize_with_equality():
    lp = LinearProgram([1, 2], [[-1, 0], [0, -1]], [0, 0], [[1, 1]], [3], sense="min")
    res = lp_solve(lp)
    assert res.status is Status.OPTIMAL and res.value == 3 and res.point == [3, 0]
    assert check_lp(lp, res)


def test_rational_data():
    lp = LinearProgram([1], [[Fraction(2, 3)]], [Fraction(1, 2)])
    res = lp_solve(lp)
    assert res.value == Fraction(3, 4)
    assert check_lp(lp, res)


def test_dimension_mismatch():
    with pytest.raises(ParameterError):
        lp_solve(LinearProgram([1, 1], [[1]], [0]))
    with pytest.raises(ParameterError):
        lp_solve(LinearProgram([1], [[1]], [0, 1]))


def test_deterministic():
    lp = LinearProgram([1, 1], [[1, 1], [1, -1], [-1, 0]], [2, 0, 0])
    assert lp_solve(lp) == lp_solve(lp)


def test_feasible_unit_square_band():
    # rows x1 <= 1, x2 <= 1 as a Delta = 1 band: A_B x >= b_B
    G = [[1, 0], [0, 1], [-1, 0], [0, -1], [-1, 0], [0, -1]]
    h = [1, 1, 0, 0, -1, -1]
    ok, x = lp_feasible(G, h, n=2)
    assert ok and x == [1, 1]


def test_feasible_witness_is_exact():
    rng = random.Random(17)
    for _ in range(50):
        x0 = [rng.randint(-5, 5) for _ in range(3)]
        G = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(6)]
        h = [sum(a * x for a, x in zip(r, x0)) + rng.randint(0, 3) for r in G]
        ok, x = lp_feasible(G, h, n=3)
        assert ok
        assert all(sum(a * xi for a, xi in zip(r, x)) <= hi for r, hi in zip(G, h))


def test_infeasible_returns_farkas():
    ok, cert = lp_feasible([[1, 1], [-1, -1]], [1, -2], n=2)
    assert not ok
    assert all(y >= 0 for y in cert.ineq)


def random_lp(rng):
    n = rng.randint(1, 4)
    m = rng.randint(1, 6)
    G = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
    h = [rng.randint(-5, 5) for _ in range(m)]
    k = rng.randint(0, 2)
    E = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)]
    f = [rng.randint(-3, 3) for _ in range(k)]
    c = [rng.randint(-3, 3) for _ in range(n)]
    return LinearProgram(c, G, h, E, f, sense=rng.choice(["max", "min"]))


def test_random_certificates():
    rng = random.Random(2024)
    seen = set()
    for _ in range(300):
        lp = random_lp(rng)
        res = lp_solve(lp)
        seen.add(res.status)
        assert check_lp(lp, res), lp
        assert verify_result(lp, res)
    assert seen == set(Status)
