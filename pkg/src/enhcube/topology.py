"""Enhanced hypercube Q(n, k) as an implicit graph over n-bit labels.

Conventions used everywhere in this package:

- A vertex is a plain int bitmask with 0 <= bits < 2**n.
- Bit positions are 1-based and position 1 is the least significant bit,
  so position p corresponds to ``1 << (p - 1)``.
- Text I/O prints the positions left to right from position n down to
  position 1 ("00010" in Q(5, 3) means only position 2 is set), which is
  the reverse of the internal indexing.
- Edge classes: class j with 1 <= j <= n flips bit j (an ordinary
  hypercube dimension edge); class 0 flips bits 1..k at once (the
  k-complementary edge).  Every vertex has exactly one incident edge of
  each class, hence degree n + 1.

Q(n, n) is the folded hypercube; Q(2, 2) is the complete graph K4 and is
rejected at construction.  All operations are pure functions of immutable
values and safe for unrestricted parallel use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError

# Single-word bitmask arithmetic; exhaustive oracles have their own, much
# smaller cap enforced in the oracle module.
MAX_DIMENSION = 62


@dataclass(frozen=True)
class EnhancedHypercube:
    """Topology parameters: n dimensions, complement width k with 2 <= k <= n."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise DomainError(
                f"need n >= 3, got n={self.n}: the excluded Q(2,2) is the "
                "complete graph K4, where fault and wide diameter differ"
            )
        if self.n > MAX_DIMENSION:
            raise DomainError(f"n={self.n} exceeds the bitmask limit {MAX_DIMENSION}")
        if not 2 <= self.k <= self.n:
            raise DomainError(f"need 2 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def num_vertices(self) -> int:
        return 1 << self.n

    @property
    def degree(self) -> int:
        return self.n + 1

    @property
    def low_mask(self) -> int:
        """Mask of the complemented block, bits 1..k."""
        return (1 << self.k) - 1

    @property
    def classes(self) -> range:
        """All edge-class indices, 0..n."""
        return range(self.n + 1)


def validate_vertex(g: EnhancedHypercube, u: int) -> None:
    if not isinstance(u, int) or not 0 <= u < g.num_vertices:
        raise DomainError(f"vertex {u!r} out of range for n={g.n}")


def apply_dimension(g: EnhancedHypercube, u: int, d: int) -> int:
    """Move along the unique class-d edge at u.

    Class d >= 1 flips bit d; class 0 flips bits 1..k.  Involutive:
    applying the same class twice returns to u.
    """
    validate_vertex(g, u)
    if not isinstance(d, int) or not 0 <= d <= g.n:
        raise DomainError(f"edge class {d!r} out of range for n={g.n}")
    if d == 0:
        return u ^ g.low_mask
    return u ^ (1 << (d - 1))


def neighbors(g: EnhancedHypercube, u: int) -> list[tuple[int, int]]:
    """All n + 1 neighbors of u as (edge class, vertex) pairs, classes 1..n then 0."""
    validate_vertex(g, u)
    out = [(d, u ^ (1 << (d - 1))) for d in range(1, g.n + 1)]
    out.append((0, u ^ g.low_mask))
    return out


def edge_class(g: EnhancedHypercube, u: int, v: int) -> int | None:
    """Class of the edge uv, or None when u and v are not adjacent.

    Unambiguous for k >= 2: a single-bit difference can never equal the
    complemented block.
    """
    validate_vertex(g, u)
    validate_vertex(g, v)
    x = u ^ v
    if x == 0:
        return None
    if x == g.low_mask:
        return 0
    if x & (x - 1) == 0:
        return x.bit_length()
    return None


def all_vertices(g: EnhancedHypercube) -> range:
    return range(g.num_vertices)


def edges(g: EnhancedHypercube) -> Iterator[tuple[int, int, int]]:
    """Every edge once, as (u, v, class) with u < v, in a fixed deterministic order."""
    for u in range(g.num_vertices):
        for d, v in neighbors(g, u):
            if u < v:
                yield u, v, d


def format_vertex(g: EnhancedHypercube, u: int) -> str:
    """Render a vertex in display order, position n first."""
    validate_vertex(g, u)
    return format(u, f"0{g.n}b")


def parse_vertex(g: EnhancedHypercube, text: str) -> int:
    """Parse the display form: exactly n characters of 0/1, position n first."""
    if len(text) != g.n or any(c not in "01" for c in text):
        raise DomainError(
            f"vertex string {text!r} must be exactly {g.n} characters of 0/1"
        )
    return int(text, 2)
