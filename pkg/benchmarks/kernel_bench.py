"""Benchmark: pure-Python search kernels vs. the compiled extension.

Runs the same game-value and packing computations on both backends and
reports wall-clock times and the speedup factor.  Usage::

    python3 benchmarks/kernel_bench.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from matchgame import _kernel_py, families

try:
    from matchgame import _speed
except ImportError:  # pragma: no cover - build-env dependent
    _speed = None


def _time_solver(mod, adj, variant: int, max_init: bool, full: int) -> tuple[float, int, int]:
    t0 = time.perf_counter()
    kern = mod.P3Solver(adj, variant, max_init)
    val = kern.value(full)
    return time.perf_counter() - t0, val, kern.states


def _time_packing(mod, adj, full: int) -> tuple[float, int]:
    t0 = time.perf_counter()
    kern = mod.P3Packing(adj)
    val = kern.mu(full)
    return time.perf_counter() - t0, val


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller instances")
    args = parser.parse_args()

    if args.quick:
        cases = [
            ("grid:2x8 stripe max", families.parse_family("grid:2x8").graph, 1, True),
            ("path:20 star max", families.parse_family("path:20").graph, 0, True),
        ]
        pack_graph = families.parse_family("grid:2x7").graph
        pack_name = "grid:2x7"
    else:
        cases = [
            ("grid:2x10 stripe max", families.parse_family("grid:2x10").graph, 1, True),
            ("grid:3x6 star min", families.parse_family("grid:3x6").graph, 0, False),
            ("path:26 star max", families.parse_family("path:26").graph, 0, True),
        ]
        pack_graph = families.parse_family("grid:2x9").graph
        pack_name = "grid:2x9"

    if _speed is None:
        print("compiled extension not importable; showing pure backend only")

    print(f"{'case':<26} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, g, variant, max_init in cases:
        full = (1 << g.n) - 1
        tp, vp, sp = _time_solver(_kernel_py, g.adj, variant, max_init, full)
        if _speed is None:
            print(f"{name:<26} {tp:>10.3f} {'-':>13} {'-':>8}")
            continue
        tc, vc, sc = _time_solver(_speed, g.adj, variant, max_init, full)
        assert vp == vc and sp == sc, f"backend mismatch on {name}: {vp}/{sp} vs {vc}/{sc}"
        print(f"{name:<26} {tp:>10.3f} {tc:>13.3f} {tp / tc:>7.1f}x")

    full = (1 << pack_graph.n) - 1
    tp, vp = _time_packing(_kernel_py, pack_graph.adj, full)
    if _speed is not None:
        tc, vc = _time_packing(_speed, pack_graph.adj, full)
        assert vp == vc
        print(f"{'packing mu ' + pack_name:<26} {tp:>10.3f} {tc:>13.3f} {tp / tc:>7.1f}x")
    else:
        print(f"{'packing mu ' + pack_name:<26} {tp:>10.3f} {'-':>13} {'-':>8}")


if __name__ == "__main__":
    main()
