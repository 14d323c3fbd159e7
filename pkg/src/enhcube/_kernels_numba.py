"""JIT-compiled sweep kernels (numba backend).

Graphs are handed over as an array of neighbor bitmasks: nbrs[v] has bit w
set iff vw is an edge.  All BFS work is frontier expansion on uint64
masks, so graphs are limited to 64 vertices, which covers every size the
exhaustive oracles accept.  Outputs are int16; -1 flags a disconnected
surviving graph.
"""

import numpy as np
from numba import njit

_ONE = np.uint64(1)
_ZERO = np.uint64(0)

BACKEND = "numba"


@njit(cache=True, nogil=True)
def all_pairs_distances(nbrs):
    n_vert = nbrs.shape[0]
    dist = np.full((n_vert, n_vert), -1, np.int16)
    for s in range(n_vert):
        dist[s, s] = 0
        reach = _ONE << np.uint64(s)
        frontier = reach
        level = 0
        while frontier != _ZERO:
            acc = _ZERO
            for v in range(n_vert):
                if (frontier >> np.uint64(v)) & _ONE:
                    acc |= nbrs[v]
            nxt = acc & ~reach
            if nxt == _ZERO:
                break
            level += 1
            for t in range(n_vert):
                if (nxt >> np.uint64(t)) & _ONE:
                    dist[s, t] = level
            reach |= nxt
            frontier = nxt
    return dist


@njit(cache=True, nogil=True)
def _diameter_of(nbrs, alive, n_vert):
    # Max eccentricity over alive vertices; -1 when some alive pair is cut off.
    worst = 0
    for s in range(n_vert):
        if not (alive >> np.uint64(s)) & _ONE:
            continue
        reach = _ONE << np.uint64(s)
        frontier = reach
        ecc = 0
        while frontier != _ZERO:
            acc = _ZERO
            for v in range(n_vert):
                if (frontier >> np.uint64(v)) & _ONE:
                    acc |= nbrs[v]
            nxt = acc & alive & ~reach
            if nxt == _ZERO:
                break
            ecc += 1
            reach |= nxt
            frontier = nxt
        if reach != alive:
            return -1
        if ecc > worst:
            worst = ecc
    return worst


@njit(cache=True, nogil=True)
def vertex_fault_diameters(nbrs, fault_masks):
    n_vert = nbrs.shape[0]
    full = _ZERO
    for v in range(n_vert):
        full |= _ONE << np.uint64(v)
    out = np.empty(fault_masks.shape[0], np.int16)
    for m in range(fault_masks.shape[0]):
        out[m] = _diameter_of(nbrs, full & ~fault_masks[m], n_vert)
    return out


@njit(cache=True, nogil=True)
def edge_fault_diameters(nbrs, edge_u, edge_v, combos):
    n_vert = nbrs.shape[0]
    full = _ZERO
    for v in range(n_vert):
        full |= _ONE << np.uint64(v)
    n_sets = combos.shape[0]
    n_faults = combos.shape[1]
    out = np.empty(n_sets, np.int16)
    local = np.empty(n_vert, np.uint64)
    for m in range(n_sets):
        for v in range(n_vert):
            local[v] = nbrs[v]
        for t in range(n_faults):
            e = combos[m, t]
            a = edge_u[e]
            b = edge_v[e]
            local[a] &= ~(_ONE << np.uint64(b))
            local[b] &= ~(_ONE << np.uint64(a))
        out[m] = _diameter_of(local, full, n_vert)
    return out
