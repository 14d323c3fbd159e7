import pytest
from hypothesis import given
from hypothesis import strategies as st

from enhcube import (
    DomainError,
    EnhancedHypercube,
    bfs_distance,
    diameter,
    distance,
    hamming_split,
    predicted_wide_diameter,
    shortest_path,
)
from enhcube.metric import breakpoint_omega, distance_matrix
from enhcube.oracle import bfs_distance_matrix
from enhcube.pathgen import realize

from conftest import all_params


def test_hamming_split_examples():
    g5 = EnhancedHypercube(5, 3)
    assert hamming_split(g5, 0b00000, 0b01101) == (2, 1)
    assert hamming_split(g5, 0b01101, 0b01101) == (0, 0)
    g4 = EnhancedHypercube(4, 3)
    assert hamming_split(g4, 0b0000, 0b1001) == (1, 1)


def test_distance_examples():
    g4 = EnhancedHypercube(4, 3)
    assert distance(g4, 0b0000, 0b0111) == 1
    g5 = EnhancedHypercube(5, 3)
    assert distance(g5, 0b00000, 0b10101) == 3
    assert distance(g5, 0b00110, 0b00110) == 0


@pytest.mark.parametrize(
    "n,k,expected",
    [(3, 3, 2), (4, 3, 3), (4, 4, 2), (5, 2, 4), (6, 5, 4)],
)
def test_diameter_formula(n, k, expected):
    assert diameter(EnhancedHypercube(n, k)) == expected


@pytest.mark.parametrize("n,k", all_params(5))
def test_distance_matches_bfs_exhaustively(n, k):
    g = EnhancedHypercube(n, k)
    assert (distance_matrix(g) == bfs_distance_matrix(g)).all()


@pytest.mark.parametrize("n,k", all_params(4))
def test_scalar_distance_matches_matrix(n, k):
    g = EnhancedHypercube(n, k)
    mat = distance_matrix(g)
    for u in range(g.num_vertices):
        for v in range(g.num_vertices):
            assert distance(g, u, v) == mat[u, v]


@pytest.mark.parametrize("n,k", all_params(5))
def test_diameter_attained(n, k):
    g = EnhancedHypercube(n, k)
    assert int(distance_matrix(g).max()) == diameter(g)


@given(st.data())
def test_metric_axioms(data):
    n = data.draw(st.integers(3, 7))
    k = data.draw(st.integers(2, n))
    g = EnhancedHypercube(n, k)
    verts = st.integers(0, g.num_vertices - 1)
    u, v, w = data.draw(verts), data.draw(verts), data.draw(verts)
    assert distance(g, u, v) == distance(g, v, u)
    assert distance(g, u, w) <= distance(g, u, v) + distance(g, v, w)
    assert (distance(g, u, v) == 0) == (u == v)


def test_shortest_path_single_complement_edge():
    g = EnhancedHypercube(4, 3)
    assert shortest_path(g, 0b0000, 0b0111) == (0,)


def test_shortest_path_complement_beats_hamming():
    g = EnhancedHypercube(3, 2)
    assert shortest_path(g, 0b000, 0b011) == (0,)


def test_shortest_path_tie_prefers_hamming():
    # r == k - r + 1: deterministic choice avoids the complementary edge
    g = EnhancedHypercube(5, 3)
    dims = shortest_path(g, 0b00000, 0b10101)
    assert dims == (1, 3, 5)
    assert 0 not in dims


@pytest.mark.parametrize("n,k", all_params(4))
def test_shortest_path_realizes_distance(n, k):
    g = EnhancedHypercube(n, k)
    for u in range(g.num_vertices):
        for v in range(g.num_vertices):
            if u == v:
                continue
            dims = shortest_path(g, u, v)
            assert len(dims) == distance(g, u, v)
            assert realize(g, u, dims)[-1] == v
            assert sum(1 for d in dims if d == 0) <= 1


def test_shortest_path_degenerate_pair():
    g = EnhancedHypercube(4, 3)
    with pytest.raises(DomainError):
        shortest_path(g, 3, 3)


@pytest.mark.parametrize(
    "n,k,values",
    [
        (4, 3, [3, 3, 4, 4, 4]),
        (3, 3, [2, 3, 3, 3]),
        (5, 2, [4, 4, 4, 5, 5, 5]),
    ],
)
def test_predicted_wide_diameter_table(n, k, values):
    g = EnhancedHypercube(n, k)
    assert [predicted_wide_diameter(g, w) for w in range(1, n + 2)] == values


def test_breakpoint_location():
    g = EnhancedHypercube(4, 3)
    bp = breakpoint_omega(g)
    assert bp == 3
    assert predicted_wide_diameter(g, bp - 1) == diameter(g)
    assert predicted_wide_diameter(g, bp) == diameter(g) + 1
    with pytest.raises(DomainError):
        predicted_wide_diameter(g, 0)
    with pytest.raises(DomainError):
        predicted_wide_diameter(g, g.n + 2)


def test_no_fault_bfs_matches_distance_spot():
    g = EnhancedHypercube(4, 3)
    assert bfs_distance(g, 0b0000, 0b0111) == 1
