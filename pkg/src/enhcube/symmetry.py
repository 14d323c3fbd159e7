"""Label automorphisms used to put a vertex pair into canonical position.

The group generated here is: XOR-translation by any mask, any permutation
of positions 1..k, and any permutation of positions k+1..n.  Translations
and block permutations preserve adjacency, map dimension edges to
dimension edges (relabelled inside their block) and k-complementary edges
to k-complementary edges.  This subgroup is all the construction needs:
any pair (u, v) can be moved so that u = 0 and the differing positions of
v are packed as 1..i and k+1..k+j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .metric import hamming_split
from .topology import EnhancedHypercube, edge_class, validate_vertex


@dataclass(frozen=True)
class Automorphism:
    """XOR by mask, then permute positions block-wise.

    perm_low[p - 1] is the image of position p for p in 1..k, a
    permutation of 1..k; perm_high[t] is the image of position k+1+t, a
    permutation of k+1..n.
    """

    n: int
    k: int
    mask: int
    perm_low: tuple[int, ...]
    perm_high: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm_low) != list(range(1, self.k + 1)):
            raise DomainError("perm_low is not a permutation of 1..k")
        if sorted(self.perm_high) != list(range(self.k + 1, self.n + 1)):
            raise DomainError("perm_high is not a permutation of k+1..n")
        if not 0 <= self.mask < (1 << self.n):
            raise DomainError("mask out of range")


def identity(g: EnhancedHypercube) -> Automorphism:
    return Automorphism(
        g.n,
        g.k,
        0,
        tuple(range(1, g.k + 1)),
        tuple(range(g.k + 1, g.n + 1)),
    )


def _permute(a: Automorphism, y: int) -> int:
    out = 0
    for p in range(1, a.k + 1):
        if y >> (p - 1) & 1:
            out |= 1 << (a.perm_low[p - 1] - 1)
    for t in range(a.n - a.k):
        if y >> (a.k + t) & 1:
            out |= 1 << (a.perm_high[t] - 1)
    return out


def _unpermute(a: Automorphism, y: int) -> int:
    out = 0
    for p in range(1, a.k + 1):
        if y >> (a.perm_low[p - 1] - 1) & 1:
            out |= 1 << (p - 1)
    for t in range(a.n - a.k):
        if y >> (a.perm_high[t] - 1) & 1:
            out |= 1 << (a.k + t)
    return out


def apply(a: Automorphism, x: int) -> int:
    """sigma(x): XOR the mask, then move bits block-wise."""
    return _permute(a, x ^ a.mask)


def apply_inverse(a: Automorphism, y: int) -> int:
    return _unpermute(a, y) ^ a.mask


def normalize_pair(
    g: EnhancedHypercube, u: int, v: int
) -> tuple[Automorphism, int, int]:
    """Automorphism sigma with sigma(u) = 0 and sigma(v) in packed form.

    Returns (sigma, i, j) where i and j count the differing positions of
    (u, v) in the low and high blocks; sigma(v) has exactly bits 1..i and
    k+1..k+j set.  Differing positions are relabelled ascending, so the
    result is deterministic.
    """
    validate_vertex(g, u)
    validate_vertex(g, v)
    if u == v:
        raise DomainError("degenerate pair: u == v cannot be normalized")
    x = u ^ v
    i, j = hamming_split(g, u, v)

    perm_low = [0] * g.k
    nxt_diff, nxt_same = 1, i + 1
    for p in range(1, g.k + 1):
        if x >> (p - 1) & 1:
            perm_low[p - 1] = nxt_diff
            nxt_diff += 1
        else:
            perm_low[p - 1] = nxt_same
            nxt_same += 1

    perm_high = [0] * (g.n - g.k)
    nxt_diff, nxt_same = g.k + 1, g.k + j + 1
    for t in range(g.n - g.k):
        if x >> (g.k + t) & 1:
            perm_high[t] = nxt_diff
            nxt_diff += 1
        else:
            perm_high[t] = nxt_same
            nxt_same += 1

    return Automorphism(g.n, g.k, u, tuple(perm_low), tuple(perm_high)), i, j


def map_path_back(
    g: EnhancedHypercube, a: Automorphism, path: tuple[int, ...]
) -> tuple[int, ...]:
    """Pull a vertex path through sigma inverse, validating it is a path."""
    for x, y in zip(path, path[1:]):
        if edge_class(g, x, y) is None:
            raise DomainError(f"malformed path: {x} and {y} are not adjacent")
    return tuple(apply_inverse(a, x) for x in path)
