"""Backend selection and graph encoding for the sweep kernels.

The hot loops (all-pairs BFS and the exhaustive fault-diameter sweeps)
exist twice: a numba @njit version and a vectorised pure-numpy version
with identical outputs.  Selection happens once at import time:

    ENHCUBE_BACKEND=numba   require the JIT kernels (ImportError if absent)
    ENHCUBE_BACKEND=numpy   force the fallback
    unset                   numba when importable, numpy otherwise

``python benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os

import numpy as np

from .topology import EnhancedHypercube, edges, neighbors

_REQUESTED = os.environ.get("ENHCUBE_BACKEND", "").strip().lower()
if _REQUESTED not in ("", "auto", "numba", "numpy"):
    raise ImportError(
        f"ENHCUBE_BACKEND={_REQUESTED!r} not recognised; use 'numba' or 'numpy'"
    )

if _REQUESTED == "numpy":
    from . import _kernels_numpy as _impl
elif _REQUESTED == "numba":
    from . import _kernels_numba as _impl
else:
    try:
        from . import _kernels_numba as _impl
    except ImportError:
        from . import _kernels_numpy as _impl

BACKEND: str = _impl.BACKEND

all_pairs_distances = _impl.all_pairs_distances
vertex_fault_diameters = _impl.vertex_fault_diameters
edge_fault_diameters = _impl.edge_fault_diameters


def neighbor_masks(g: EnhancedHypercube) -> np.ndarray:
    """Adjacency as uint64 bitmasks, the kernels' graph encoding."""
    if g.num_vertices > 64:
        raise ValueError("mask encoding supports at most 64 vertices")
    out = np.zeros(g.num_vertices, np.uint64)
    for u in range(g.num_vertices):
        m = 0
        for _, v in neighbors(g, u):
            m |= 1 << v
        out[u] = m
    return out


def edge_arrays(g: EnhancedHypercube) -> tuple[np.ndarray, np.ndarray, list[tuple[int, int]]]:
    """Edge endpoints in the canonical enumeration order, plus the pair list."""
    pairs = [(u, v) for u, v, _ in edges(g)]
    eu = np.array([p[0] for p in pairs], np.int64)
    ev = np.array([p[1] for p in pairs], np.int64)
    return eu, ev, pairs
