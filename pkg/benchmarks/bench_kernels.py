#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the three sweep kernels on representative instances and prints the
per-backend wall time plus speedup.  The numba path is warmed once so JIT
compilation is not billed to the measurement.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from enhcube import EnhancedHypercube
from enhcube import _kernels_numpy as knp
from enhcube.kernels import edge_arrays, neighbor_masks
from enhcube.oracle import _combo_array, _vertex_fault_masks

try:
    from enhcube import _kernels_numba as knb
except ImportError:
    knb = None


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(name, make_args, numba_fn, numpy_fn, repeat):
    args = make_args()
    if knb is not None:
        numba_fn(*args)  # warm the JIT
        t_nb, out_nb = _time(lambda: numba_fn(*args), repeat)
    t_np, out_np = _time(lambda: numpy_fn(*args), repeat)
    if knb is not None:
        assert (out_nb == out_np).all(), f"{name}: backends disagree"
        print(
            f"{name:<42} numba {t_nb * 1e3:9.1f} ms   numpy {t_np * 1e3:9.1f} ms"
            f"   speedup {t_np / t_nb:6.1f}x"
        )
    else:
        print(f"{name:<42} numba       n/a   numpy {t_np * 1e3:9.1f} ms")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if knb is None:
        print("numba not importable; timing the numpy fallback only\n")

    g6 = EnhancedHypercube(6, 4)
    nbrs6 = neighbor_masks(g6)
    bench(
        "all-pairs BFS, Q(6,4), 64 vertices",
        lambda: (nbrs6,),
        None if knb is None else knb.all_pairs_distances,
        knp.all_pairs_distances,
        args.repeat,
    )

    g5 = EnhancedHypercube(5, 3)
    nbrs5 = neighbor_masks(g5)
    _, masks = _vertex_fault_masks(g5.num_vertices, 5)
    bench(
        f"vertex-fault sweep, Q(5,3), {len(masks)} sets",
        lambda: (nbrs5, masks),
        None if knb is None else knb.vertex_fault_diameters,
        knp.vertex_fault_diameters,
        args.repeat,
    )

    g4 = EnhancedHypercube(4, 3)
    nbrs4 = neighbor_masks(g4)
    eu, ev, pairs = edge_arrays(g4)
    combos = _combo_array(len(pairs), 4)
    bench(
        f"edge-fault sweep, Q(4,3), {len(combos)} sets",
        lambda: (nbrs4, eu, ev, combos),
        None if knb is None else knb.edge_fault_diameters,
        knp.edge_fault_diameters,
        args.repeat,
    )


if __name__ == "__main__":
    main()
