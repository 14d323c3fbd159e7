"""Pure-numpy sweep kernels, the fallback backend.

Same contracts and bit encoding as the numba backend, but BFS runs level
synchronously and vectorised across every fault set and every source at
once: reach[m, s] is the uint64 mask of vertices reached from source s in
faulted graph m.  Frontier expansion uses 16-bit lookup tables (the OR of
neighbor masks for every 16-bit frontier word), so one level costs a few
table gathers instead of a loop over all vertices.
"""

import numpy as np

_ONE = np.uint64(1)
_ZERO = np.uint64(0)
_WORD = np.uint64(0xFFFF)

BACKEND = "numpy"


def _full_mask(n_vert: int) -> np.uint64:
    return np.uint64(2**n_vert - 1)


def _expansion_tables(nbrs: np.ndarray) -> list[tuple[np.uint64, np.ndarray]]:
    """For each 16-bit word of the vertex space, table[w] = OR of nbrs[v]
    over the set bits v of w."""
    n_vert = nbrs.shape[0]
    tables = []
    for lo in range(0, n_vert, 16):
        width = min(16, n_vert - lo)
        table = np.zeros(1 << width, np.uint64)
        idx = np.arange(1 << width)
        for b in range(width):
            table[(idx >> b) & 1 == 1] |= nbrs[lo + b]
        tables.append((np.uint64(lo), table))
    return tables


def _expand(frontier: np.ndarray, tables) -> np.ndarray:
    acc = np.zeros_like(frontier)
    for shift, table in tables:
        acc |= table[((frontier >> shift) & _WORD).astype(np.int64)]
    return acc


def all_pairs_distances(nbrs: np.ndarray) -> np.ndarray:
    # single sweep over at most 64 sources: the plain per-vertex loop beats
    # building expansion tables here
    nbrs = np.ascontiguousarray(nbrs, dtype=np.uint64)
    n_vert = nbrs.shape[0]
    reach = _ONE << np.arange(n_vert, dtype=np.uint64)
    frontier = reach.copy()
    dist = np.full((n_vert, n_vert), -1, np.int16)
    np.fill_diagonal(dist, 0)
    level = 0
    while frontier.any():
        level += 1
        acc = np.zeros_like(reach)
        for v in range(n_vert):
            hasv = ((frontier >> np.uint64(v)) & _ONE).astype(bool)
            acc |= np.where(hasv, nbrs[v], _ZERO)
        new = acc & ~reach
        for t in range(n_vert):
            hit = ((new >> np.uint64(t)) & _ONE).astype(bool)
            dist[hit, t] = level
        reach |= new
        frontier = new
    return dist


def vertex_fault_diameters(nbrs: np.ndarray, fault_masks: np.ndarray) -> np.ndarray:
    nbrs = np.ascontiguousarray(nbrs, dtype=np.uint64)
    fault_masks = np.ascontiguousarray(fault_masks, dtype=np.uint64)
    n_vert = nbrs.shape[0]
    if fault_masks.shape[0] == 0:
        return np.empty(0, np.int16)
    tables = _expansion_tables(nbrs)
    alive = (_full_mask(n_vert) & ~fault_masks)[:, None]
    return _sweep_diameters(
        lambda frontier: _expand(frontier, tables), alive, n_vert
    )


def edge_fault_diameters(
    nbrs: np.ndarray,
    edge_u: np.ndarray,
    edge_v: np.ndarray,
    combos: np.ndarray,
) -> np.ndarray:
    nbrs = np.ascontiguousarray(nbrs, dtype=np.uint64)
    n_vert = nbrs.shape[0]
    n_sets, n_faults = combos.shape
    if n_sets == 0:
        return np.empty(0, np.int16)
    nbrm = np.broadcast_to(nbrs, (n_sets, n_vert)).copy()
    if n_faults:
        rows = np.repeat(np.arange(n_sets), n_faults)
        picked = combos.ravel()
        a = edge_u[picked]
        b = edge_v[picked]
        # ufunc.at accumulates correctly when one row loses several edges
        np.bitwise_and.at(nbrm, (rows, a), ~(_ONE << b.astype(np.uint64)))
        np.bitwise_and.at(nbrm, (rows, b), ~(_ONE << a.astype(np.uint64)))

    def expand(frontier: np.ndarray) -> np.ndarray:
        # neighbor masks differ per fault set, so expand column by column
        acc = np.zeros_like(frontier)
        for v in range(n_vert):
            hasv = ((frontier >> np.uint64(v)) & _ONE).astype(bool)
            acc |= np.where(hasv, nbrm[:, v : v + 1], _ZERO)
        return acc

    alive = np.full((n_sets, 1), _full_mask(n_vert), np.uint64)
    return _sweep_diameters(expand, alive, n_vert)


def _sweep_diameters(expand, alive: np.ndarray, n_vert: int) -> np.ndarray:
    m = alive.shape[0]
    src = (_ONE << np.arange(n_vert, dtype=np.uint64))[None, :]
    src_alive = (alive & src) != _ZERO
    reach = np.where(src_alive, src, _ZERO)
    frontier = reach.copy()
    ecc = np.zeros((m, n_vert), np.int16)
    level = 0
    while frontier.any():
        level += 1
        new = expand(frontier) & alive & ~reach
        ecc[new != _ZERO] = level
        reach |= new
        frontier = new
    connected = (reach == alive) | ~src_alive
    out = ecc.max(axis=1).astype(np.int16)
    out[~connected.all(axis=1)] = np.int16(-1)
    return out
