"""Compare the numba and numpy graph kernels on snake level sets.

    python3 benchmarks/bench_kernels.py --levels 2 3 --repeat 3

Times BFS from the top exit, the path trace to the bottom exit and the
leaf pruning used by core(). Both backends must agree on every result.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from labyrinth import _kernels
from labyrinth.generators import snake_cross
from labyrinth.grid import compose_sequence
from labyrinth.props import PatternGraph, exit_set


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_level(n, repeat):
    pattern = compose_sequence([snake_cross(k) for k in range(1, n + 1)]).pattern
    graph = PatternGraph(pattern)
    exits = exit_set(pattern)
    s = graph.index_of(exits.top)
    t = graph.index_of(exits.bottom)
    keep = np.zeros(graph.n_vertices, dtype=bool)
    keep[[graph.index_of(exits[name]) for name in ("top", "bottom", "left", "right")]] = True

    results = {}
    for name in ("numba", "numpy"):
        be = _kernels.get_backend(name)
        # first call compiles (numba) or warms caches (numpy)
        be.trace(*be.bfs(graph.nbr, s)[::-1], t)
        be.prune(graph.nbr, keep)
        t_bfs, (dist, parent) = best_of(lambda: be.bfs(graph.nbr, s), repeat)
        t_trace, path = best_of(lambda: be.trace(parent, dist, t), repeat)
        t_prune, alive = best_of(lambda: be.prune(graph.nbr, keep), repeat)
        results[name] = (t_bfs, t_trace, t_prune, dist, path, alive)

    a, b = results["numba"], results["numpy"]
    assert np.array_equal(a[3], b[3]), "BFS distances differ"
    assert np.array_equal(a[4], b[4]), "traced paths differ"
    assert np.array_equal(a[5], b[5]), "pruned sets differ"
    print(f"level {n}: width {pattern.width}, {graph.n_vertices} white squares, path {a[4].size}")
    for i, op in enumerate(("bfs", "trace", "prune")):
        speedup = b[i] / a[i] if a[i] > 0 else float("inf")
        print(f"  {op:<6} numba {a[i] * 1e3:10.2f} ms   numpy {b[i] * 1e3:10.2f} ms   x{speedup:6.1f}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--levels", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    for n in args.levels:
        bench_level(n, args.repeat)


if __name__ == "__main__":
    main()
