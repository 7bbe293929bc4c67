#!/usr/bin/env python3
"""Compare the numba and pure-numpy rendering backends on the hot loop
(a full-size basin portrait) and confirm they produce identical labels.

Usage: python bench/benchmark_backends.py [--res 720] [--max-iter 60]
"""
import argparse
import os
import time

import numpy as np


def run(res: int, max_iter: int):
    from quintic_flow import basins as bs
    from quintic_flow import _kernels as kx
    from quintic_flow.equivariants import restricted_map, f6

    grid1 = bs.GridSpec(0j, 4.0, 4.0, (res, res))
    grid2 = bs.GridSpec(0j, 2.5, 2.5, (res, res))
    oct5 = restricted_map("octahedral5")
    oct_attr = bs.octahedral_attractors()
    plane_attr = bs.f6_plane_attractors()

    results = {}
    for backend in ("numba", "numpy"):
        if backend == "numba" and not kx._HAVE_NUMBA:
            print("numba not installed; skipping")
            continue
        os.environ["QUINTIC_FLOW_NUMBA"] = "1" if backend == "numba" else "0"
        # warm up compilation so timings measure the loop, not the jit
        if backend == "numba":
            tiny = bs.GridSpec(0j, 4.0, 4.0, (8, 8))
            bs.render_1d(oct5, tiny, oct_attr, max_iter=5)
            bs.render_plane(f6, bs.GridSpec(0j, 2.5, 2.5, (8, 8)), plane_attr,
                            max_iter=5)
        t0 = time.time()
        p1 = bs.render_1d(oct5, grid1, oct_attr, max_iter=max_iter)
        t1 = time.time()
        p2 = bs.render_plane(f6, grid2, plane_attr, max_iter=max_iter)
        t2 = time.time()
        results[backend] = (t1 - t0, t2 - t1, p1.labels, p2.labels)
        print(f"{backend:6s}  1d portrait {t1 - t0:7.2f}s   "
              f"plane portrait {t2 - t1:7.2f}s")
    os.environ.pop("QUINTIC_FLOW_NUMBA", None)

    if len(results) == 2:
        same1 = np.array_equal(results["numba"][2], results["numpy"][2])
        same2 = np.array_equal(results["numba"][3], results["numpy"][3])
        print(f"label agreement: 1d {same1}, plane {same2}")
        s1 = results["numpy"][0] / max(results["numba"][0], 1e-9)
        s2 = results["numpy"][1] / max(results["numba"][1], 1e-9)
        print(f"numba speedup: 1d {s1:.1f}x, plane {s2:.1f}x")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--res", type=int, default=720)
    ap.add_argument("--max-iter", type=int, default=60)
    args = ap.parse_args()
    run(args.res, args.max_iter)
