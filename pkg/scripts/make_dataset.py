"""Build the bundled synthetic screening dataset.

Writes a mixed database of cacti, random connected graphs, trees, named
families, disconnected graphs, and degenerate records (all with at most
20 vertices), plus a JSON file with the expected counters. Every record
is small enough for the exact oracle, which supplies the ground truth for
T and double-checks the screen and the cactus decision along the way.

Regenerating with the same seed reproduces the files byte for byte.

Usage: python scripts/make_dataset.py [--count 1000] [--seed 20240807]
       [--out data/synth1000.gdb] [--expected data/synth1000.expected.json]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tracescreen import (  # noqa: E402
    Graph,
    SplitMix64,
    build_graph,
    decide_cactus,
    decompose,
    exact_traceable,
    gen_cactus,
    gen_connected,
    is_cactus,
    is_connected,
    screen,
    write_records,
)

MAX_VERTICES = 20


def disjoint_union(a: Graph, b: Graph) -> Graph:
    off = a.vertex_count
    edges = list(a.edges) + [(u + off, v + off) for u, v in b.edges]
    graph, _ = build_graph(a.vertex_count + b.vertex_count, edges)
    return graph


def family_graph(which: int, n: int) -> Graph:
    if which == 0:  # path
        edges = [(i, i + 1) for i in range(n - 1)]
    elif which == 1:  # cycle
        n = max(n, 3)
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif which == 2:  # star
        edges = [(0, i) for i in range(1, n)]
    else:  # complete
        n = min(n, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    graph, _ = build_graph(n, edges)
    return graph


def make_graph(i: int, rng: SplitMix64) -> Graph:
    kind = i % 10
    if kind <= 2:
        n = 2 + rng.below(MAX_VERTICES - 1)
        frac = rng.below(101) / 100.0
        return gen_cactus(n, frac, rng.next_u64())
    if kind == 3:
        # sparse random: the oracle stays fast up to 20 vertices here
        n = 2 + rng.below(MAX_VERTICES - 1)
        max_m = n * (n - 1) // 2
        m = min(n - 1 + rng.below(6), max_m)
        return gen_connected(n, m, rng.next_u64())
    if kind == 4:
        # dense random: keep small, subset-DP cost explodes with density
        n = 2 + rng.below(11)
        max_m = n * (n - 1) // 2
        m = n - 1 + rng.below(max_m - (n - 1) + 1)
        return gen_connected(n, m, rng.next_u64())
    if kind == 5:
        n = 2 + rng.below(MAX_VERTICES - 1)
        return gen_connected(n, n - 1, rng.next_u64())
    if kind == 6:
        return family_graph(rng.below(4), 3 + rng.below(10))
    if kind <= 8:
        n1 = 1 + rng.below(9)
        n2 = 1 + rng.below(MAX_VERTICES - n1 - 1) if n1 < MAX_VERTICES - 1 else 1
        a = gen_cactus(n1, 0.5, rng.next_u64())
        b = gen_connected(n2, n2 - 1, rng.next_u64())
        return disjoint_union(a, b)
    pick = rng.below(3)
    if pick == 0:
        return build_graph(0, [])[0]
    if pick == 1:
        return build_graph(1, [])[0]
    return build_graph(2, [])[0]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=20240807)
    parser.add_argument("--out", default="data/synth1000.gdb")
    parser.add_argument("--expected", default="data/synth1000.expected.json")
    args = parser.parse_args()

    rng = SplitMix64(args.seed)
    pairs = []
    n_total = n_cactus = n_ruled_out = n_traceable = 0
    for i in range(args.count):
        g = make_graph(i, rng)
        assert g.vertex_count <= MAX_VERTICES
        pairs.append((f"r{i:04d}", g))

        n_total += 1
        n = g.vertex_count
        connected = is_connected(g)
        d = decompose(g) if connected and n >= 2 else None
        cactus = connected and (n == 1 or is_cactus(g, d))
        n_cactus += cactus

        verdict = screen(g, decomposition=d) if d is not None else screen(g)
        n_ruled_out += verdict.ruled_out

        truth = exact_traceable(g).traceable if n >= 1 else False
        if verdict.ruled_out:
            assert not truth, f"record {i}: screen contradicted the oracle"
        if cactus:
            decision = decide_cactus(g, decomposition=d)
            assert decision.traceable == truth, \
                f"record {i}: cactus decision contradicted the oracle"
            n_traceable += truth

    out_path = Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", encoding="utf-8") as handle:
        write_records(handle, pairs)

    expected = {
        "N": n_total,
        "C": n_cactus,
        "X": n_ruled_out,
        "T": n_traceable,
        "count": args.count,
        "seed": args.seed,
    }
    Path(args.expected).write_text(
        json.dumps(expected, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote {out_path} ({out_path.stat().st_size} bytes)")
    print(json.dumps(expected))
    return 0


if __name__ == "__main__":
    sys.exit(main())
