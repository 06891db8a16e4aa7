#!/usr/bin/env python3
"""Timing comparison of the compiled and pure ordered-copy kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Counts are asserted equal across backends before any timing is reported.
"""

import argparse
import time

from edgeind import BlowupSpec, Graph, blow_up, kernels
from edgeind import _kernels_py
from edgeind.search import _level

try:
    from edgeind import _kernels as compiled
except ImportError:
    compiled = None


def kernel_cases():
    cases = [
        ("C4 in K(20,20)", Graph.complete_bipartite(20, 20), Graph.cycle(4)),
        ("C4 in K(32,32)", Graph.complete_bipartite(32, 32), Graph.cycle(4)),
        ("C5 in C5[4,4,4,4,4]", blow_up(BlowupSpec(Graph.cycle(5), (4,) * 5)), Graph.cycle(5)),
        ("C6 in C6[3,3,3,3,3,3]", blow_up(BlowupSpec(Graph.cycle(6), (3,) * 6)), Graph.cycle(6)),
        ("P7 in C7[2,...,2]", blow_up(BlowupSpec(Graph.cycle(7), (2,) * 7)), Graph.path(7)),
        ("K4 in K12", Graph.complete(12), Graph.complete(4)),
        ("P5 in G(24, .5)", _gnp(24, 0.5), Graph.path(5)),
    ]
    return cases


def _gnp(n, p):
    import random

    rng = random.Random(1234)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def time_one(backend, g, h, repeat):
    order = kernels.visit_order(h)
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = backend.count_ordered(g.adj, h.adj, order, [])
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def scan_case(backend, patterns, hosts, repeat):
    best = None
    total = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        total = 0
        for g in hosts:
            for h in patterns:
                if g.n >= h.n:
                    order = kernels.visit_order(h)
                    total += backend.count_ordered(g.adj, h.adj, order, [])
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return total, best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if compiled is None:
        print("compiled kernel unavailable; only the pure backend is timed")
    backends = [("pure", _kernels_py)] + ([("cython", compiled)] if compiled else [])

    print(f"{'case':34} " + " ".join(f"{name:>12}" for name, _ in backends)
          + ("      speedup" if compiled else ""))
    for label, g, h, in kernel_cases():
        row = []
        values = []
        for _, backend in backends:
            value, dt = time_one(backend, g, h, args.repeat)
            values.append(value)
            row.append(dt)
        assert len(set(values)) == 1, f"backends disagree on {label}"
        line = f"{label:34} " + " ".join(f"{dt * 1e3:10.2f}ms" for dt in row)
        if compiled:
            line += f"   {row[0] / row[1]:8.1f}x"
        print(line)

    hosts = [g for _, g in _level(8)]
    patterns = [Graph.path(4), Graph.path(5), Graph.cycle(4), Graph.cycle(5), Graph.cycle(6)]
    row = []
    values = []
    for _, backend in backends:
        value, dt = scan_case(backend, patterns, hosts, args.repeat)
        values.append(value)
        row.append(dt)
    assert len(set(values)) == 1
    label = f"grid scan: 5 patterns x {len(hosts)} hosts"
    line = f"{label:34} " + " ".join(f"{dt * 1e3:10.2f}ms" for dt in row)
    if compiled:
        line += f"   {row[0] / row[1]:8.1f}x"
    print(line)


if __name__ == "__main__":
    main()
