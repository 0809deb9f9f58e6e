#!/usr/bin/env python3
"""Time the compiled search kernel against the numpy fallback.

Runs the full-space line-coloring scan on catalog configurations with both
backends and prints a table of wall times and speedups.  Both must return
identical tuples; a mismatch aborts the run.

Usage: python benchmarks/compare_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import sys
import time

from monotri import SumSpec, builtin, connected_sum, triangle_line_index_triples
from monotri._kernels import (
    available_backends,
    build_disjoint_structures,
    build_triangle_masks,
    coloring_space,
)
from monotri.ramsey import _triangle_structures

CASES = ("fano", "mobius_kantor", "pappus", "desargues", "example_14_3", "example_16_3")


def fano_triple():
    """21-line case (2^20 codes): a chain of two incidence switches on fano."""
    fano = builtin("fano")
    pair = connected_sum(SumSpec(fano, fano, p1=1, l1=0, p2=1, l2=0)).configuration
    return connected_sum(SumSpec(pair, fano, p1=2, l1=0, p2=1, l2=0)).configuration


def time_backend(module, fixed, free, space, repeat):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = tuple(module.line_min_range(fixed, free, 0, space))
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timed repetitions, best-of")
    args = parser.parse_args(argv)

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; timing the fallback only", file=sys.stderr)

    header = f"{'configuration':<16} {'lines':>5} {'codes':>9}"
    for name in backends:
        header += f" {name + ' (s)':>14}"
    if len(backends) > 1:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))

    for case in CASES + ("fano_triple",):
        cfg = fano_triple() if case == "fano_triple" else builtin(case)
        m = cfg.line_count
        fixed, free = build_triangle_masks(triangle_line_index_triples(cfg), m)
        space = coloring_space(m)
        row = f"{case:<16} {m:>5} {space:>9}"
        times = {}
        results = {}
        for name, module in backends.items():
            times[name], results[name] = time_backend(module, fixed, free, space, args.repeat)
            row += f" {times[name]:>14.6f}"
        if len(results) > 1 and len(set(results.values())) != 1:
            print(row)
            print(f"backend mismatch on {case}: {results}", file=sys.stderr)
            return 1
        if "pure" in times and "compiled" in times:
            row += f" {times['pure'] / times['compiled']:>8.1f}x"
        print(row)

    print()
    print("disjoint-packing scan (all edge colorings of K_n, packing cut at 2):")
    for n in (6, 7):
        m = n * (n - 1) // 2
        edge_triples, vert_triples = _triangle_structures(n)
        fixed, free, disj = build_disjoint_structures(edge_triples, vert_triples, m)
        space = coloring_space(m)
        row = f"{'K_' + str(n):<16} {m:>5} {space:>9}"
        times = {}
        values = {}
        for name, module in backends.items():
            best = None
            for _ in range(args.repeat):
                start = time.perf_counter()
                values[name] = module.disjoint_min_small_range(fixed, free, disj, 0, space, 3)
                elapsed = time.perf_counter() - start
                best = elapsed if best is None else min(best, elapsed)
            times[name] = best
            row += f" {times[name]:>14.6f}"
        if len(set(values.values())) != 1:
            print(row)
            print(f"backend mismatch on K_{n}: {values}", file=sys.stderr)
            return 1
        if "pure" in times and "compiled" in times:
            row += f" {times['pure'] / times['compiled']:>8.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
