#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the pure numpy fallback.

Usage:  python benchmarks/bench_kernels.py [--repeat N]

Times the three hot kernels on representative workloads plus two end-to-end
operations.  Runs fine without the compiled extension (reports fallback
timings only).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from lunekit._kernels import pure
from lunekit.bodies import boundary_sample_array, edge_table, make_reuleaux_odd_gon
from lunekit.sphere import SpherePoint
from lunekit.width import polar

try:
    from lunekit._kernels import _core
except ImportError:
    _core = None

NORTH = SpherePoint(0, 0, 1)


def timeit(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    body = make_reuleaux_odd_gon(NORTH, 3, 1.0)
    dual = polar(body)
    dual_table = edge_table(dual)
    body_table = edge_table(body)
    poles = boundary_sample_array(dual, 4096)
    rng = np.random.default_rng(0)
    probes = rng.normal(size=(50_000, 3))
    probes /= np.linalg.norm(probes, axis=1)[:, None]
    determiners = boundary_sample_array(body, 256)

    def farthest(mod):
        mod.farthest_on_edges(
            dual_table.q, dual_table.s, dual_table.e1, dual_table.e2,
            dual_table.span, poles,
        )

    def radial(mod):
        mod.radial_crossings(
            body_table.q, body_table.s, body_table.e1, body_table.e2,
            body_table.span, body_table.anchor, body_table.f1, body_table.f2,
            body_table.breaks, probes,
        )

    def min_cap(mod):
        mod.min_cap_of_points(determiners)

    return [
        ("farthest_on_edges (4096 poles x 6 edges)", farthest),
        ("radial_crossings (50k probes)", radial),
        ("min_cap_of_points (256 determiners)", min_cap),
    ]


def end_to_end(repeat: int):
    from lunekit.covering import min_enclosing_cap
    from lunekit.width import thickness

    body = make_reuleaux_odd_gon(NORTH, 3, 1.0)
    rows = []
    rows.append(
        ("min_enclosing_cap(reuleaux)", timeit(lambda: min_enclosing_cap(body), repeat))
    )
    rows.append(("thickness(reuleaux)", timeit(lambda: thickness(body), repeat)))
    return rows


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'kernel':45s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, fn in workloads():
        t_pure = timeit(lambda: fn(pure), args.repeat)
        if _core is not None:
            t_core = timeit(lambda: fn(_core), args.repeat)
            print(f"{name:45s} {t_pure*1e3:9.2f}ms {t_core*1e3:9.2f}ms {t_pure/t_core:7.1f}x")
        else:
            print(f"{name:45s} {t_pure*1e3:9.2f}ms {'n/a':>10s} {'':>8s}")
    if _core is None:
        print("\ncompiled core not built; rebuild with `pip install -e .` to compare")
        return

    print("\nend-to-end (active backend)")
    for name, t in end_to_end(args.repeat):
        print(f"{name:45s} {t*1e3:9.2f}ms")


if __name__ == "__main__":
    main()
