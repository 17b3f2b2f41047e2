"""Measure pipeline scaling on generated cacti.

For each size, generates a random cactus and times the full analysis
pipeline (decompose, screen, cactus recognition, cactus decision),
reporting the best of a few repeats and the ratio between successive
sizes. Cyclic GC is disabled around the timed sections — the pipeline
allocates millions of small objects and collector pauses would otherwise
dominate the variance.

Usage: python scripts/benchmark_scaling.py [--sizes 100000,200000,...]
       [--repeats 3] [--cycle-fraction 0.5] [--seed 42]
"""

from __future__ import annotations

import argparse
import gc
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tracescreen import (  # noqa: E402
    cactus_traceable,
    decompose,
    gen_cactus,
    is_cactus,
    screen,
)


def run_pipeline(graph):
    d = decompose(graph)
    verdict = screen(graph, decomposition=d)
    cactus = is_cactus(graph, d)
    decision = cactus_traceable(graph, d) if cactus else None
    return verdict, cactus, decision


def time_pipeline(graph, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        run_pipeline(graph)
        elapsed = time.perf_counter() - t0
        if elapsed < best:
            best = elapsed
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="100000,200000,400000,800000")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--cycle-fraction", type=float, default=0.5)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    gc.disable()
    try:
        print("n\tedges\tblocks\tseconds\tratio")
        previous = None
        for n in sizes:
            graph = gen_cactus(n, args.cycle_fraction, args.seed)
            gc.collect()
            best = time_pipeline(graph, args.repeats)
            blocks = decompose(graph).block_count
            ratio = "" if previous is None else f"{best / previous:.2f}"
            print(f"{n}\t{graph.edge_count}\t{blocks}\t{best:.3f}\t{ratio}")
            previous = best
    finally:
        gc.enable()
    return 0


if __name__ == "__main__":
    sys.exit(main())
