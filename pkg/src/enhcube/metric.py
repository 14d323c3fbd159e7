"""Closed-form distance, diameter, and a deterministic shortest-path router.

The distance between u and v splits the differing positions at the
complement boundary: with r differences among positions 1..k and s among
positions k+1..n,

    d(u, v) = s + min(r, k - r + 1)

because a shortest walk either fixes the low block one bit at a time
(r steps) or takes the k-complementary edge once and fixes the k - r
agreeing low positions (k - r + 1 steps).  The diameter is n - floor(k/2).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .topology import EnhancedHypercube, validate_vertex


class HammingSplit(NamedTuple):
    """Differing-position counts: r in the low block 1..k, s in k+1..n."""

    r: int
    s: int


def hamming_split(g: EnhancedHypercube, u: int, v: int) -> HammingSplit:
    validate_vertex(g, u)
    validate_vertex(g, v)
    x = u ^ v
    return HammingSplit((x & g.low_mask).bit_count(), (x >> g.k).bit_count())


def distance(g: EnhancedHypercube, u: int, v: int) -> int:
    r, s = hamming_split(g, u, v)
    return s + min(r, g.k - r + 1)


def diameter(g: EnhancedHypercube) -> int:
    return g.n - g.k // 2


def breakpoint_omega(g: EnhancedHypercube) -> int:
    """Path-count threshold where the wide and fault diameters step up by one."""
    return g.n - g.k // 2


def predicted_wide_diameter(g: EnhancedHypercube, omega: int) -> int:
    """Closed-form target value for both the omega-wide and (omega-1)-fault
    diameters: the diameter below breakpoint_omega, diameter + 1 from it on."""
    if not 1 <= omega <= g.n + 1:
        raise DomainError(f"omega={omega} out of range 1..{g.n + 1}")
    d = diameter(g)
    return d if omega < breakpoint_omega(g) else d + 1


def shortest_path(g: EnhancedHypercube, u: int, v: int) -> tuple[int, ...]:
    """One shortest u,v-walk as a list of edge classes, deterministic.

    Prefers the plain Hamming route (differing positions ascending) and
    uses the complementary edge only when strictly shorter, in which case
    the low-block part is class 0 followed by the agreeing low positions
    ascending.  Length always equals distance(g, u, v).
    """
    validate_vertex(g, u)
    validate_vertex(g, v)
    if u == v:
        raise DomainError("u == v: no edges to emit for a degenerate pair")
    x = u ^ v
    low_diff = [p for p in range(1, g.k + 1) if x >> (p - 1) & 1]
    high_diff = [p for p in range(g.k + 1, g.n + 1) if x >> (p - 1) & 1]
    r = len(low_diff)
    if r <= g.k - r + 1:
        dims = low_diff
    else:
        dims = [0] + [p for p in range(1, g.k + 1) if not x >> (p - 1) & 1]
    return tuple(dims + high_diff)


def distance_matrix(g: EnhancedHypercube) -> np.ndarray:
    """All-pairs closed-form distances as an int16 matrix (same formula as
    distance(), evaluated vectorised for exhaustive cross-checks)."""
    n_vert = g.num_vertices
    labels = np.arange(n_vert, dtype=np.uint64)
    x = labels[:, None] ^ labels[None, :]
    r = np.bitwise_count(x & np.uint64(g.low_mask)).astype(np.int16)
    s = np.bitwise_count(x >> np.uint64(g.k)).astype(np.int16)
    return s + np.minimum(r, g.k - r + 1)
