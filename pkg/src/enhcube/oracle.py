"""Brute-force ground truth: BFS metrics, exhaustive fault and wide
diameters, vertex connectivity, and the path-set checker.

Everything here is independent of the closed-form formulas and of the
path constructor, so it can certify them.  The exhaustive sweeps
enumerate fault sets of size exactly omega - 1 (distances between
surviving vertices only grow under further deletions, and the chain
property is re-checked empirically in the tests).  Enumeration order is
lexicographic and reductions keep the first maximum, so reported
witnesses are deterministic and independent of the worker count.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Literal, Sequence

import numpy as np

from . import kernels
from .errors import DomainError, ResourceLimitError
from .pathgen import PathSet, disjoint_paths
from .topology import (
    EnhancedHypercube,
    edge_class,
    neighbors,
    validate_vertex,
)

FaultKind = Literal["vertex", "edge"]

DEFAULT_ORACLE_CAP = 5
HARD_ORACLE_WALL = 6
CAP_ENV_VAR = "ENHCUBE_ORACLE_CAP"


def oracle_cap(override: int | None = None) -> int:
    """Exhaustive-search dimension cap: override > environment > default 5."""
    if override is not None:
        cap = override
    else:
        cap = int(os.environ.get(CAP_ENV_VAR, DEFAULT_ORACLE_CAP))
    return min(cap, HARD_ORACLE_WALL)


def _check_cap(g: EnhancedHypercube, cap: int | None, what: str) -> None:
    limit = oracle_cap(cap)
    if g.n > limit:
        raise ResourceLimitError(
            f"{what} is exhaustive and capped at n <= {limit} "
            f"(hard wall {HARD_ORACLE_WALL}); got n={g.n}"
        )


def _check_omega(g: EnhancedHypercube, omega: int) -> None:
    if not 1 <= omega <= g.n + 1:
        raise DomainError(f"omega={omega} out of range 1..{g.n + 1}")


# ---------------------------------------------------------------------------
# BFS ground truth
# ---------------------------------------------------------------------------


def bfs_distance(
    g: EnhancedHypercube,
    u: int,
    v: int,
    faults: Iterable[int] | Iterable[tuple[int, int]] = (),
    fault_kind: FaultKind = "vertex",
) -> int | None:
    """Exact shortest-path length in the faulted graph, None if unreachable."""
    validate_vertex(g, u)
    validate_vertex(g, v)
    if fault_kind == "vertex":
        dead = set(faults)
        if u in dead or v in dead:
            raise DomainError("endpoint deleted: u and v must survive the faults")
        blocked = frozenset()
    elif fault_kind == "edge":
        dead = set()
        blocked = frozenset(frozenset(e) for e in faults)
    else:
        raise DomainError(f"unknown fault kind {fault_kind!r}")
    if u == v:
        return 0
    seen = {u}
    queue = deque([(u, 0)])
    while queue:
        x, dist = queue.popleft()
        for _, y in neighbors(g, x):
            if y in seen or y in dead:
                continue
            if blocked and frozenset((x, y)) in blocked:
                continue
            if y == v:
                return dist + 1
            seen.add(y)
            queue.append((y, dist + 1))
    return None


def bfs_distance_matrix(g: EnhancedHypercube) -> np.ndarray:
    """All-pairs BFS distances via the selected kernel backend."""
    return kernels.all_pairs_distances(kernels.neighbor_masks(g))


# ---------------------------------------------------------------------------
# Exhaustive fault diameter
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaultDiameterReport:
    omega: int
    fault_kind: FaultKind
    worst_value: int
    witness_faults: tuple
    witness_pair: tuple[int, int]


def _chunked(
    kernel: Callable[[np.ndarray], np.ndarray], work: np.ndarray, workers: int
) -> np.ndarray:
    """Run a kernel over row chunks; concatenation order keeps the result
    independent of the worker count."""
    if workers <= 1 or work.shape[0] < 2 * workers:
        return kernel(work)
    chunks = np.array_split(work, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(kernel, chunks))
    return np.concatenate(parts)


def _combo_array(universe: int, size: int) -> np.ndarray:
    """All size-subsets of range(universe), lexicographic, as an (m, size) array."""
    if size == 0:
        return np.zeros((1, 0), np.int64)
    return np.array(list(combinations(range(universe), size)), np.int64)


def _vertex_fault_masks(n_vert: int, size: int) -> tuple[np.ndarray, np.ndarray]:
    combos = _combo_array(n_vert, size)
    if size == 0:
        return combos, np.zeros(1, np.uint64)
    masks = np.bitwise_or.reduce(
        np.uint64(1) << combos.astype(np.uint64), axis=1
    )
    return combos, masks


def fault_diameter_exact(
    g: EnhancedHypercube,
    omega: int,
    fault_kind: FaultKind = "vertex",
    cap: int | None = None,
    workers: int = 1,
) -> FaultDiameterReport:
    """Worst diameter over every fault set of size omega - 1, with witness.

    The witness is the lexicographically least fault set attaining the
    maximum, and within it the least surviving pair at that distance.
    """
    _check_omega(g, omega)
    _check_cap(g, cap, "fault diameter search")
    nbrs = kernels.neighbor_masks(g)
    size = omega - 1

    if fault_kind == "vertex":
        combos, masks = _vertex_fault_masks(g.num_vertices, size)
        diams = _chunked(
            lambda chunk: kernels.vertex_fault_diameters(nbrs, chunk), masks, workers
        )
        if (diams < 0).any():
            raise RuntimeError(
                "a fault set disconnected the graph; omega exceeds the connectivity"
            )
        worst = int(diams.max())
        best = int(diams.argmax())
        witness = tuple(int(x) for x in combos[best])
        pair = _witness_pair(g, witness, "vertex", worst)
    elif fault_kind == "edge":
        eu, ev, pairs = kernels.edge_arrays(g)
        combos = _combo_array(len(pairs), size)
        diams = _chunked(
            lambda chunk: kernels.edge_fault_diameters(nbrs, eu, ev, chunk),
            combos,
            workers,
        )
        if (diams < 0).any():
            raise RuntimeError(
                "a fault set disconnected the graph; omega exceeds the connectivity"
            )
        worst = int(diams.max())
        best = int(diams.argmax())
        witness = tuple(pairs[e] for e in combos[best])
        pair = _witness_pair(g, witness, "edge", worst)
    else:
        raise DomainError(f"unknown fault kind {fault_kind!r}")

    return FaultDiameterReport(
        omega=omega,
        fault_kind=fault_kind,
        worst_value=worst,
        witness_faults=witness,
        witness_pair=pair,
    )


def _witness_pair(
    g: EnhancedHypercube, faults: tuple, fault_kind: FaultKind, target: int
) -> tuple[int, int]:
    dead = set(faults) if fault_kind == "vertex" else set()
    for u in range(g.num_vertices):
        if u in dead:
            continue
        for v in range(u + 1, g.num_vertices):
            if v in dead:
                continue
            if bfs_distance(g, u, v, faults, fault_kind) == target:
                return (u, v)
    raise RuntimeError("witness pair not found; kernel and BFS disagree")


# ---------------------------------------------------------------------------
# Deletion witness for the diameter jump
# ---------------------------------------------------------------------------


def fault_diameter_witness(g: EnhancedHypercube) -> tuple[int, int, tuple[int, ...]]:
    """The closed-form deletion witness (u, v, W).

    u = 0; v has ones exactly in positions 1..i and k+1..n with
    i = ceil(k/2) - 1; W holds the neighbors of u whose single one sits
    where v has a one, so |W| = n - floor(k/2) - 1.  Removing W is meant
    to force every surviving u,v-route over a longest detour.  Note the
    construction degenerates (v itself lands in W) exactly when v has a
    single one, i.e. when n = floor(k/2) + 2.
    """
    i = (g.k + 1) // 2 - 1
    v = 0
    for p in range(1, i + 1):
        v |= 1 << (p - 1)
    for p in range(g.k + 1, g.n + 1):
        v |= 1 << (p - 1)
    w = tuple(1 << (p - 1) for p in range(1, g.n + 1) if v >> (p - 1) & 1)
    return 0, v, w


# ---------------------------------------------------------------------------
# Wide diameter
# ---------------------------------------------------------------------------

EXACT_WIDE_VERTEX_LIMIT = 16


@dataclass(frozen=True)
class WideDiameterReport:
    omega: int
    value: int
    method: Literal["exact-search", "sandwich-bound"]
    exact: bool
    lower: int
    upper: int


def _simple_path_interiors(
    g: EnhancedHypercube, u: int, v: int, limit: int
) -> list[int]:
    """Interior-vertex masks of every simple u,v-path with length <= limit."""
    out: set[int] = set()
    stack = [(u, 1 << u, 0, 0)]
    while stack:
        x, visited, interior, depth = stack.pop()
        for _, y in neighbors(g, x):
            if y == v:
                out.add(interior)
                continue
            if depth + 2 > limit or visited >> y & 1:
                continue
            stack.append((y, visited | 1 << y, interior | 1 << y, depth + 1))
    return sorted(out)


def _has_disjoint_selection(masks: Sequence[int], need: int) -> bool:
    """Exact set packing: can `need` pairwise disjoint masks be chosen?"""
    masks = sorted(masks, key=lambda m: m.bit_count())

    def search(start: int, used: int, left: int) -> bool:
        if left == 0:
            return True
        if len(masks) - start < left:
            return False
        for idx in range(start, len(masks)):
            if masks[idx] & used == 0 and search(idx + 1, used | masks[idx], left - 1):
                return True
        return False

    return search(0, 0, need)


def wide_diameter_exact(
    g: EnhancedHypercube,
    omega: int,
    method: Literal["auto", "exact", "sandwich"] = "auto",
    cap: int | None = None,
    workers: int = 1,
) -> WideDiameterReport:
    """Least length bound admitting omega disjoint routes between every pair.

    Exact search enumerates simple paths and solves the disjoint-set
    packing per pair; it is limited to 16-vertex instances.  Sandwich mode
    brackets the value between the exhaustive fault diameter (lower) and
    the constructor's omega-th path length maximised over pairs (upper)
    and is exact whenever the two meet.
    """
    _check_omega(g, omega)
    if method == "auto":
        method = "exact" if g.num_vertices <= EXACT_WIDE_VERTEX_LIMIT else "sandwich"

    if method == "exact":
        if g.num_vertices > EXACT_WIDE_VERTEX_LIMIT:
            raise ResourceLimitError(
                f"exact wide-diameter search is capped at "
                f"{EXACT_WIDE_VERTEX_LIMIT} vertices; got {g.num_vertices}"
            )
        worst = 0
        for u in range(g.num_vertices):
            for v in range(u + 1, g.num_vertices):
                ell = bfs_distance(g, u, v)
                while not _has_disjoint_selection(
                    _simple_path_interiors(g, u, v, ell), omega
                ):
                    ell += 1
                    if ell > g.num_vertices:
                        raise RuntimeError("no bound found; graph under-connected")
                worst = max(worst, ell)
        return WideDiameterReport(omega, worst, "exact-search", True, worst, worst)

    if method != "sandwich":
        raise DomainError(f"unknown method {method!r}")
    lower = fault_diameter_exact(g, omega, "vertex", cap=cap, workers=workers).worst_value
    upper = 0
    for u in range(g.num_vertices):
        for v in range(u + 1, g.num_vertices):
            lengths = disjoint_paths(g, u, v).lengths
            upper = max(upper, lengths[omega - 1])
    return WideDiameterReport(
        omega, upper, "sandwich-bound", lower == upper, lower, upper
    )


# ---------------------------------------------------------------------------
# Vertex connectivity (max-flow on the vertex-split digraph)
# ---------------------------------------------------------------------------


def _max_disjoint_path_count(
    g: EnhancedHypercube, s: int, t: int, stop_at: int
) -> int:
    """Internally disjoint s,t-path count via unit-capacity augmentation.

    Nodes are split: 2x is the in-copy, 2x+1 the out-copy of vertex x.
    """
    residual: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {}

    def arc(a: int, b: int, capacity: int) -> None:
        residual[(a, b)] = capacity
        residual.setdefault((b, a), 0)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for x in range(g.num_vertices):
        arc(2 * x, 2 * x + 1, 1)
        for _, y in neighbors(g, x):
            arc(2 * x + 1, 2 * y, 1)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < stop_at:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in adj[a]:
                if b not in parent and residual[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            residual[(a, b)] -= 1
            residual[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: EnhancedHypercube, cap: int | None = None) -> int:
    """Exact connectivity: min over nonadjacent pairs of the disjoint-path count."""
    _check_cap(g, cap, "connectivity search")
    best = g.num_vertices - 1
    for u in range(g.num_vertices):
        for v in range(u + 1, g.num_vertices):
            if edge_class(g, u, v) is not None:
                continue
            best = min(best, _max_disjoint_path_count(g, u, v, best + 1))
            if best == 0:
                return 0
    return best


# ---------------------------------------------------------------------------
# Path-set checker
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathViolation:
    kind: str
    paths: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    violations: tuple[PathViolation, ...]
    num_paths: int
    lengths: tuple[int, ...]

    @property
    def first_violation(self) -> PathViolation | None:
        return self.violations[0] if self.violations else None


def verify_path_set(g: EnhancedHypercube, ps: PathSet) -> VerificationResult:
    """Check edge validity, endpoints, simplicity, pairwise internal and
    edge disjointness, and the recorded length guarantees."""
    u, v = ps.endpoints
    found: list[PathViolation] = []

    def flag(kind: str, idxs: tuple[int, ...], detail: str) -> None:
        found.append(PathViolation(kind, idxs, detail))

    interiors: list[set[int]] = []
    seen_edges: dict[frozenset, int] = {}
    for idx, path in enumerate(ps.paths):
        if len(path) < 2 or path[0] != u or path[-1] != v:
            flag("endpoint-mismatch", (idx,), f"path {idx} does not run from u to v")
            interiors.append(set())
            continue
        if len(set(path)) != len(path):
            flag("self-intersection", (idx,), f"path {idx} repeats a vertex")
        bad_edge = False
        for x, y in zip(path, path[1:]):
            if edge_class(g, x, y) is None:
                flag("not-an-edge", (idx,), f"path {idx} uses non-edge {x}-{y}")
                bad_edge = True
                break
            key = frozenset((x, y))
            if key in seen_edges:
                flag(
                    "edge-overlap",
                    (seen_edges[key], idx),
                    f"edge {x}-{y} appears in paths {seen_edges[key]} and {idx}",
                )
            else:
                seen_edges[key] = idx
        interiors.append(set() if bad_edge else set(path[1:-1]))
        if len(path) - 1 != ps.lengths[idx]:
            flag("length-record", (idx,), f"recorded length wrong for path {idx}")

    for a in range(len(ps.paths)):
        for b in range(a + 1, len(ps.paths)):
            common = interiors[a] & interiors[b]
            if common:
                flag(
                    "internal-overlap",
                    (a, b),
                    f"paths {a} and {b} share interior vertices {sorted(common)}",
                )

    guar = ps.guarantee
    for idx, ell in enumerate(ps.lengths):
        if ell > guar.bound_all:
            flag("length-bound", (idx,), f"path {idx} has length {ell} > {guar.bound_all}")
    short = sum(1 for ell in ps.lengths if ell <= guar.bound_short)
    if short < guar.count_short:
        flag(
            "short-count",
            tuple(range(len(ps.paths))),
            f"only {short} paths of length <= {guar.bound_short}, "
            f"promised {guar.count_short}",
        )

    return VerificationResult(
        ok=not found,
        violations=tuple(found),
        num_paths=len(ps.paths),
        lengths=ps.lengths,
    )
