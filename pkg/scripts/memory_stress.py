"""Streaming-memory stress run: big dataset file, bounded resident set.

Builds a dataset file of the requested size by repeating a seeded batch
of molecular-scale records, then runs `stats` over it in a child process
that reports its own peak resident set size at exit. The parser holds one
record at a time, so the peak should stay flat no matter how large the
file grows.

Usage: python scripts/memory_stress.py [--size-mb 1024] [--limit-mb 64]
       [--keep-file]
"""

from __future__ import annotations

import argparse
import io
import subprocess
import sys
import tempfile
import time
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
sys.path.insert(0, str(SRC))

from tracescreen import build_graph, gen_cactus, gen_connected, write_records  # noqa: E402

_CHILD = """
import resource, sys
sys.path.insert(0, {src!r})
from tracescreen.cli import cli_main
rc = cli_main(["stats", {path!r}])
kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
print(f"MAXRSS_KB {{kb}}", file=sys.stderr)
sys.exit(rc)
"""


def build_batch(batch_records: int = 120, seed: int = 99) -> str:
    """One reusable text block of mixed records around 30-60 vertices."""
    pairs = []
    for i in range(batch_records):
        n = 30 + (i * 7) % 31
        if i % 5 == 0:
            # a traceable cactus (plain cycle) so T stays non-trivial
            g, _ = build_graph(n, [(k, (k + 1) % n) for k in range(n)])
        elif i % 3 == 0:
            g = gen_connected(n, n + i % 5, seed + i)
        else:
            g = gen_cactus(n, 0.5, seed + i)
        pairs.append((str(i), g))
    buf = io.StringIO()
    write_records(buf, pairs)
    return buf.getvalue()


def write_big_file(path: Path, size_bytes: int, batch: str) -> int:
    """Repeat the batch until the file passes size_bytes; returns records."""
    batch_records = batch.count("t # ")
    records = 0
    with path.open("w", encoding="utf-8") as handle:
        written = 0
        while written < size_bytes:
            handle.write(batch)
            written += len(batch)
            records += batch_records
    return records


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size-mb", type=int, default=1024)
    parser.add_argument("--limit-mb", type=int, default=64)
    parser.add_argument("--keep-file", action="store_true")
    args = parser.parse_args()

    batch = build_batch()
    tmp = Path(tempfile.mkstemp(suffix=".gdb")[1])
    try:
        t0 = time.perf_counter()
        records = write_big_file(tmp, args.size_mb * 1024 * 1024, batch)
        size = tmp.stat().st_size
        print(f"wrote {size / 1e9:.2f} GB, {records} records, "
              f"{time.perf_counter() - t0:.1f}s")

        child = _CHILD.format(src=str(SRC), path=str(tmp))
        t0 = time.perf_counter()
        result = subprocess.run(
            [sys.executable, "-c", child], capture_output=True, text=True
        )
        elapsed = time.perf_counter() - t0
        print(result.stdout, end="")
        maxrss_kb = None
        for line in result.stderr.splitlines():
            if line.startswith("MAXRSS_KB "):
                maxrss_kb = int(line.split()[1])
            else:
                print(line, file=sys.stderr)
        if result.returncode != 0 or maxrss_kb is None:
            print("stats run failed", file=sys.stderr)
            return 1
        print(f"peak resident set {maxrss_kb / 1024:.1f} MB in {elapsed:.1f}s "
              f"(limit {args.limit_mb} MB)")
        return 0 if maxrss_kb <= args.limit_mb * 1024 else 1
    finally:
        if not args.keep_file:
            tmp.unlink(missing_ok=True)


if __name__ == "__main__":
    sys.exit(main())
