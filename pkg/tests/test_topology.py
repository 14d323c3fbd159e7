import pytest
from hypothesis import given
from hypothesis import strategies as st

from enhcube import (
    DomainError,
    EnhancedHypercube,
    apply_dimension,
    edge_class,
    format_vertex,
    neighbors,
    parse_vertex,
)
from enhcube.topology import edges

from conftest import all_params


def test_rejects_k4_with_explanation():
    with pytest.raises(DomainError, match="K4"):
        EnhancedHypercube(2, 2)


@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (3, 1), (3, 4), (63, 5)])
def test_rejects_bad_parameters(n, k):
    with pytest.raises(DomainError):
        EnhancedHypercube(n, k)


def test_apply_dimension_flips_single_bit():
    g = EnhancedHypercube(5, 3)
    assert apply_dimension(g, 0b00000, 2) == 0b00010


def test_apply_dimension_complements_low_block():
    g = EnhancedHypercube(5, 3)
    assert apply_dimension(g, 0b00010, 0) == 0b00101


@given(st.data())
def test_apply_dimension_involution(data):
    n = data.draw(st.integers(3, 8))
    k = data.draw(st.integers(2, n))
    g = EnhancedHypercube(n, k)
    u = data.draw(st.integers(0, g.num_vertices - 1))
    d = data.draw(st.integers(0, n))
    assert apply_dimension(g, apply_dimension(g, u, d), d) == u


def test_apply_dimension_domain_errors():
    g = EnhancedHypercube(4, 3)
    with pytest.raises(DomainError):
        apply_dimension(g, 0, 5)
    with pytest.raises(DomainError):
        apply_dimension(g, 16, 1)


def test_neighbors_q33_matches_figure():
    g = EnhancedHypercube(3, 3)
    got = {v for _, v in neighbors(g, 0b000)}
    assert got == {0b001, 0b010, 0b100, 0b111}


def test_neighbors_q43_top_dimension():
    g = EnhancedHypercube(4, 3)
    assert (4, 0b1000) in neighbors(g, 0b0000)


@pytest.mark.parametrize("n,k", all_params(5))
def test_degree_and_no_duplicates(n, k):
    g = EnhancedHypercube(n, k)
    for u in (0, g.num_vertices // 2, g.num_vertices - 1):
        nbrs = neighbors(g, u)
        assert len(nbrs) == n + 1
        assert len({v for _, v in nbrs}) == n + 1
        for d, v in nbrs:
            assert apply_dimension(g, u, d) == v


def test_edge_class_examples():
    g3 = EnhancedHypercube(3, 3)
    assert edge_class(g3, 0b000, 0b111) == 0
    assert edge_class(g3, 0b000, 0b011) is None
    g4 = EnhancedHypercube(4, 3)
    assert edge_class(g4, 0b0000, 0b0111) == 0
    assert edge_class(g4, 0b0000, 0b0000) is None


@pytest.mark.parametrize("n,k", all_params(5))
def test_adjacency_symmetric_irreflexive(n, k):
    g = EnhancedHypercube(n, k)
    for u in range(g.num_vertices):
        assert edge_class(g, u, u) is None
        for d, v in neighbors(g, u):
            assert v != u
            assert edge_class(g, u, v) == d
            assert edge_class(g, v, u) == d


@pytest.mark.parametrize("n,k", all_params(6))
def test_cartesian_product_structure(n, k):
    """Edge set equals hypercube(n - k) x folded-hypercube(k) under identity labels."""
    g = EnhancedHypercube(n, k)
    low_mask = g.low_mask
    product_edges = set()
    for x in range(g.num_vertices):
        for p in range(1, n + 1):
            product_edges.add(frozenset((x, x ^ (1 << (p - 1)))))
        product_edges.add(frozenset((x, x ^ low_mask)))
    direct = {frozenset((u, v)) for u, v, _ in edges(g)}
    assert direct == product_edges
    assert len(direct) == g.num_vertices * (n + 1) // 2


def test_folded_hypercube_complement_edges():
    g = EnhancedHypercube(4, 4)
    full = g.num_vertices - 1
    for u in range(g.num_vertices):
        assert edge_class(g, u, u ^ full) == 0


@pytest.mark.parametrize("n,k", [(5, 3), (4, 4), (6, 2)])
def test_vertex_text_round_trip(n, k):
    g = EnhancedHypercube(n, k)
    for u in range(0, g.num_vertices, 7):
        assert parse_vertex(g, format_vertex(g, u)) == u


def test_vertex_text_display_order():
    g = EnhancedHypercube(5, 3)
    assert format_vertex(g, 0b00010) == "00010"
    assert parse_vertex(g, "00010") == 2


@pytest.mark.parametrize("text", ["0001", "000100", "00a10", ""])
def test_parse_vertex_rejects(text):
    g = EnhancedHypercube(5, 3)
    with pytest.raises(DomainError):
        parse_vertex(g, text)
