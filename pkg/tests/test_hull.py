import random
from fractions import Fraction

import pytest

from intvert.budget import Budgets
from intvert.errors import BudgetError, EmptySetError, UnboundedError
from intvert.hull import face_dim, faces, hull_vertices, in_convex_hull, lattice_points
from intvert.linalg import dot
from intvert.polyhedron import Polyhedron
from oracles import box_lattice, gift_wrap, planar_edges

TRI2 = Polyhedron([[-1, 0], [0, -1], [1, 1]], [0, 0, 2])


def test_lattice_examples(square):
    assert lattice_points(square) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(lattice_points(TRI2)) == 6
    half = Polyhedron([[1], [-1], [2], [-2]], [1, 0, 1, -1])
    assert lattice_points(half) == []
    assert lattice_points(Polyhedron([[1], [-1]], [0, -1])) == []


def test_lattice_errors():
    with pytest.raises(UnboundedError):
        lattice_points(Polyhedron([[-1, 0], [0, -1]], [0, 0]))
    big = Polyhedron([[1, 0], [0, 1], [-1, 0], [0, -1]], [100, 100, 0, 0])
    with pytest.raises(BudgetError):
        lattice_points(big, Budgets(points=1000))


def test_lattice_matches_box_oracle():
    rng = random.Random(41)
    done = 0
    while done < 40:
        n = rng.choice([2, 3])
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n + 3)]
        b = [rng.randint(0, 6) for _ in range(n + 3)]
        box = [[int(i == j) for j in range(n)] for i in range(n)]
        A += box + [[-x for x in r] for r in box]
        b += [4] * n + [4] * n
        P = Polyhedron(A, b)
        assert lattice_points(P) == box_lattice(A, b, -4, 4)
        done += 1


def test_hull_examples():
    sq = [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert hull_vertices(sq) == sq
    assert hull_vertices([(0, 0), (1, 0), (2, 0)]) == [(0, 0), (2, 0)]
    assert hull_vertices(lattice_points(TRI2)) == [(0, 0), (0, 2), (2, 0)]
    with pytest.raises(EmptySetError):
        hull_vertices([])


def test_hull_covers_every_point():
    rng = random.Random(8)
    for _ in range(20):
        S = sorted({(rng.randint(0, 5), rng.randint(0, 5), rng.randint(0, 5)) for _ in range(12)})
        V = hull_vertices(S)
        assert set(V) <= set(S)
        for s in S:
            assert s in V or in_convex_hull(s, V)


def test_hull_matches_gift_wrap():
    rng = random.Random(12)
    for _ in range(30):
        S = [(rng.randint(0, 9), rng.randint(0, 9)) for _ in range(rng.randint(1, 20))]
        assert hull_vertices(S) == gift_wrap(S)


def test_face_dim_examples():
    assert face_dim([(3, 4)]) == 0
    assert face_dim([(0, 0), (1, 0), (2, 0)]) == 1
    assert face_dim([(0, 0), (1, 0), (0, 1)]) == 2
    with pytest.raises(EmptySetError):
        face_dim([])


def counts(F):
    out = {}
    for f in F:
        out[f.dim_k] = out.get(f.dim_k, 0) + 1
    return out


def test_faces_square():
    F = faces([(0, 0), (0, 1), (1, 0), (1, 1)])
    assert counts(F) == {0: 4, 1: 4, 2: 1}
    assert [f.improper for f in F] == [False] * 8 + [True]


def test_faces_segment():
    F = faces([(0, 0), (1, 0), (2, 0)])
    (edge,) = [f for f in F if f.dim_k == 1]
    assert edge.lattice_members == ((0, 0), (1, 0), (2, 0))
    assert edge.improper


def test_faces_triangle():
    F = faces(lattice_points(TRI2))
    c = counts(F)
    assert c == {0: 3, 1: 3, 2: 1}
    assert c[0] - c[1] == 0


def test_face_budget():
    S = [(x, y) for x in range(10) for y in range(10) if x * x + y * y <= 81]
    with pytest.raises(BudgetError):
        faces(S, budgets=Budgets(face_vertices=3))


def _check_certificates(S, F):
    V = hull_vertices(S)
    for f in F:
        on = {V[i] for i in f.vertex_indices}
        assert all(abs(x) <= 1 for x in f.c)
        assert f.margin > 0
        for v in V:
            if v in on:
                assert dot(f.c, v) == f.d
            else:
                assert dot(f.c, v) <= f.d - f.margin
        assert set(f.lattice_members) == {s for s in S if dot(f.c, s) == f.d}


def _random_sets(rng, count, n, side, size):
    out = []
    while len(out) < count:
        S = sorted({tuple(rng.randint(0, side) for _ in range(n)) for _ in range(size)})
        if len(hull_vertices(S)) <= 9:
            out.append(S)
    return out


@pytest.mark.parametrize("n", [2, 3])
def test_facets_method_matches_subsets(n):
    rng = random.Random(100 + n)
    for S in _random_sets(rng, 12, n, 3, 7):
        a = faces(S)
        b = faces(S, method="subsets")
        assert [f.vertex_indices for f in a] == [f.vertex_indices for f in b]
        _check_certificates(S, a)
        listed = {f.vertex_indices for f in a}
        for f in a:
            for g in a:
                common = tuple(sorted(set(f.vertex_indices) & set(g.vertex_indices)))
                assert not common or common in listed


def test_planar_edges_match_oracle():
    rng = random.Random(5)
    for S in _random_sets(rng, 15, 2, 6, 10):
        V = hull_vertices(S)
        F = faces(S)
        edges = {frozenset(V[i] for i in f.vertex_indices) for f in F if f.dim_k == 1}
        if len(V) >= 3:
            assert edges == planar_edges(V)


def test_face_lattice_members_in_degenerate_set():
    S = [(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0)]
    F = faces(S)
    assert counts(F) == {0: 3, 1: 3, 2: 1}
    top = F[-1]
    assert top.improper and len(top.lattice_members) == 4
    assert isinstance(top.d, (int, Fraction))
