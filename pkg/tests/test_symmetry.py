import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from enhcube import (
    DomainError,
    EnhancedHypercube,
    edge_class,
    normalize_pair,
)
from enhcube.symmetry import (
    Automorphism,
    apply,
    apply_inverse,
    identity,
    map_path_back,
)
from enhcube.topology import edges, neighbors

from conftest import all_params


def _random_automorphism(g: EnhancedHypercube, rng: random.Random) -> Automorphism:
    low = list(range(1, g.k + 1))
    high = list(range(g.k + 1, g.n + 1))
    rng.shuffle(low)
    rng.shuffle(high)
    mask = rng.randrange(g.num_vertices)
    return Automorphism(g.n, g.k, mask, tuple(low), tuple(high))


def test_identity_fixes_everything():
    g = EnhancedHypercube(4, 3)
    a = identity(g)
    for x in range(g.num_vertices):
        assert apply(a, x) == x
        assert apply_inverse(a, x) == x


def test_mask_only_sends_u_to_zero():
    g = EnhancedHypercube(4, 2)
    u = 0b1010
    a = Automorphism(g.n, g.k, u, (1, 2), (3, 4))
    assert apply(a, u) == 0


@given(st.data())
def test_apply_round_trip(data):
    n = data.draw(st.integers(3, 7))
    k = data.draw(st.integers(2, n))
    g = EnhancedHypercube(n, k)
    rng = random.Random(data.draw(st.integers(0, 2**30)))
    a = _random_automorphism(g, rng)
    x = data.draw(st.integers(0, g.num_vertices - 1))
    assert apply_inverse(a, apply(a, x)) == x
    assert apply(a, apply_inverse(a, x)) == x


@pytest.mark.parametrize("n,k", all_params(5))
def test_random_automorphisms_preserve_edges_and_class_blocks(n, k):
    g = EnhancedHypercube(n, k)
    rng = random.Random(n * 100 + k)
    for _ in range(3):
        a = _random_automorphism(g, rng)
        for u, v, d in edges(g):
            d2 = edge_class(g, apply(a, u), apply(a, v))
            assert d2 is not None
            # class 0 is preserved exactly; dimension classes stay in their block
            if d == 0:
                assert d2 == 0
            elif d <= k:
                assert 1 <= d2 <= k
            else:
                assert d2 > k


def test_translation_commutes_with_complement():
    g = EnhancedHypercube(5, 3)
    rng = random.Random(7)
    for _ in range(50):
        mask = rng.randrange(g.num_vertices)
        x = rng.randrange(g.num_vertices)
        assert (x ^ mask) ^ g.low_mask == (x ^ g.low_mask) ^ mask


def test_automorphism_validation():
    with pytest.raises(DomainError):
        Automorphism(4, 3, 0, (1, 1, 2), (4,))
    with pytest.raises(DomainError):
        Automorphism(4, 3, 0, (1, 2, 3), (5,))
    with pytest.raises(DomainError):
        Automorphism(4, 3, 1 << 10, (1, 2, 3), (4,))


def test_normalize_pair_examples():
    g4 = EnhancedHypercube(4, 3)
    a, i, j = normalize_pair(g4, 0b0110, 0b0000)
    assert a.mask == 0b0110
    assert (i, j) == (2, 0)
    assert apply(a, 0b0110) == 0
    assert apply(a, 0b0000) == 0b0011

    g5 = EnhancedHypercube(5, 3)
    a, i, j = normalize_pair(g5, 0b00000, 0b01101)
    assert (i, j) == (2, 1)
    assert apply(a, 0b01101) == 0b01011


def test_normalize_pair_canonical_already():
    g = EnhancedHypercube(5, 3)
    v = 0b01011  # bits 1..2 and 4: already packed
    a, i, j = normalize_pair(g, 0, v)
    assert a.mask == 0
    assert a.perm_low == (1, 2, 3)
    assert a.perm_high == (4, 5)
    assert (i, j) == (2, 1)


@pytest.mark.parametrize("n,k", all_params(5))
def test_normalize_pair_packs_low_and_high_bits(n, k):
    g = EnhancedHypercube(n, k)
    rng = random.Random(n * 31 + k)
    for _ in range(40):
        u = rng.randrange(g.num_vertices)
        v = rng.randrange(g.num_vertices)
        if u == v:
            continue
        a, i, j = normalize_pair(g, u, v)
        assert apply(a, u) == 0
        image = apply(a, v)
        assert image & g.low_mask == (1 << i) - 1
        assert image >> k == (1 << j) - 1


def test_normalize_pair_degenerate():
    g = EnhancedHypercube(4, 3)
    with pytest.raises(DomainError):
        normalize_pair(g, 5, 5)


def test_map_path_back_round_trip():
    g = EnhancedHypercube(4, 3)
    a, _, _ = normalize_pair(g, 0b0110, 0b1001)
    path = (0b0110, 0b1110, 0b1001)
    for x, y in zip(path, path[1:]):
        assert edge_class(g, x, y) is not None
    forward = tuple(apply(a, x) for x in path)
    assert map_path_back(g, a, forward) == path


def test_map_path_back_rejects_non_path():
    g = EnhancedHypercube(4, 3)
    a = identity(g)
    with pytest.raises(DomainError, match="malformed"):
        map_path_back(g, a, (0b0000, 0b0011))


def test_map_path_back_preserves_length_and_validity():
    g = EnhancedHypercube(5, 3)
    rng = random.Random(11)
    a = _random_automorphism(g, rng)
    path = [0]
    for _ in range(4):
        path.append(rng.choice([v for _, v in neighbors(g, path[-1])]))
    mapped = map_path_back(g, a, tuple(path))
    assert len(mapped) == len(path)
    for x, y in zip(mapped, mapped[1:]):
        assert edge_class(g, x, y) is not None
