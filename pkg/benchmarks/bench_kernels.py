"""Compiled kernels versus their plain-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

The fallback is the same source (``kernel.py_func``), which is what runs
when TORCHROMA_DISABLE_NUMBA=1 or numba is missing.
"""

import argparse
import time

import numpy as np

from torchroma import kernels
from torchroma._accel import HAVE_NUMBA
from torchroma.coloring_engine import color_by_vertical_tiling
from torchroma.torus_graph import build_graph, underlying_simple_graph


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def search(impl, sg, k):
    state = kernels.new_search_state(sg.n, k)
    status = impl(sg.nbr, sg.deg, k, *state, 10**9)
    return status, int(state[-1][1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba unavailable or disabled; both columns run the fallback")

    rows = []
    # refutations of 4-colourability: the whole tree is walked
    for triple, k in (((1, 33, 6), 4), ((1, 37, 10), 4), ((1, 34, 16), 4)):
        sg = underlying_simple_graph(build_graph(triple))
        fast = kernels.dsatur_search
        slow = getattr(fast, "py_func", fast)
        search(fast, sg, k)  # compile outside the timing
        tf, (status, nodes) = best_of(lambda: search(fast, sg, k), args.repeat)
        ts, (status2, nodes2) = best_of(lambda: search(slow, sg, k), args.repeat)
        assert (status, nodes) == (status2, nodes2)
        rows.append((f"dsatur T{triple} k={k}".replace(", ", ","), nodes, tf, ts))

    c = color_by_vertical_tiling((10, 990, 100))
    sg = underlying_simple_graph(build_graph((10, 990, 100)))
    fast = kernels.count_conflicts
    slow = getattr(fast, "py_func", fast)
    fast(sg.nbr, sg.deg, c.colors)
    tf, bad = best_of(lambda: fast(sg.nbr, sg.deg, c.colors), args.repeat)
    ts, bad2 = best_of(lambda: slow(sg.nbr, sg.deg, c.colors), args.repeat)
    assert bad == bad2 == 0
    rows.append(("verify T(10,990,100)", sg.n, tf, ts))

    print(f"{'kernel':32} {'work':>9} {'numba s':>10} {'python s':>10} {'speedup':>8}")
    for name, work, tf, ts in rows:
        print(f"{name:32} {work:9d} {tf:10.5f} {ts:10.5f} {ts / max(tf, 1e-9):8.1f}x")


if __name__ == "__main__":
    main()
