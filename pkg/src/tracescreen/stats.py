"""Dataset statistics: counters N, C, X, T with per-stage timings.

For a stream of records,

    N  — records parsed,
    C  — connected cactus graphs,
    X  — graphs provably without a Hamiltonian path (disconnected or
         failing a necessary condition),
    T  — connected cactus graphs that are traceable.

Timings are cumulative: t_N covers parsing alone, t_C adds the cactus
recognition work, t_X the screening checks, t_T the exact cactus
decision, so t_N <= t_C <= t_X <= t_T. Each record is decomposed once
and the stages share that decomposition.

The parallel runner fans fixed-size chunks of raw record text out to
worker processes; counters merge commutatively, so the result is
identical to a sequential run (stage times become summed worker time,
which is the one thing that may differ).
"""

from __future__ import annotations

import io
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from time import perf_counter
from typing import IO, Iterable, Iterator

from .blocks import decompose
from .cactus import cactus_traceable, is_cactus
from .conditions import screen
from .gdbio import GraphRecord, ParseError, parse_stream
from .graph import Graph, is_connected


@dataclass(frozen=True)
class DatasetStats:
    N: int
    C: int
    X: int
    T: int
    t_N: float
    t_C: float
    t_X: float
    t_T: float

    def format_table(self) -> str:
        return "\n".join(
            [
                "metric\tvalue",
                f"N\t{self.N}",
                f"C\t{self.C}",
                f"X\t{self.X}",
                f"T\t{self.T}",
                f"t_N\t{self.t_N:.2f}",
                f"t_C\t{self.t_C:.2f}",
                f"t_X\t{self.t_X:.2f}",
                f"t_T\t{self.t_T:.2f}",
            ]
        )


def classify_record(graph: Graph) -> tuple[bool, bool, bool, float, float, float]:
    """Flags (is connected cactus, screened out, traceable cactus) plus
    the wall-clock seconds spent on each of the three stages."""
    t0 = perf_counter()
    n = graph.vertex_count
    d = None
    if n == 0:
        connected = False
    elif n == 1:
        connected = True
    else:
        connected = is_connected(graph)
        if connected:
            d = decompose(graph)
    cactus = connected and (n == 1 or is_cactus(graph, d))
    t1 = perf_counter()

    verdict = screen(graph, decomposition=d) if d is not None else screen(graph)
    ruled_out = verdict.ruled_out
    t2 = perf_counter()

    if cactus:
        traceable = True if n == 1 else bool(cactus_traceable(graph, d).traceable)
    else:
        traceable = False
    t3 = perf_counter()
    return cactus, ruled_out, traceable, t1 - t0, t2 - t1, t3 - t2


_DONE = object()


def run_stats(records: Iterable[GraphRecord]) -> DatasetStats:
    """Sequential counter pass over an already-parsing record stream.

    Time spent pulling the next record out of ``records`` is what t_N
    measures, so hand this a lazy parse_stream, not a list.
    """
    it = iter(records)
    n_total = n_cactus = n_ruled_out = n_traceable = 0
    parse_s = c_s = x_s = t_s = 0.0
    while True:
        t0 = perf_counter()
        rec = next(it, _DONE)
        parse_s += perf_counter() - t0
        if rec is _DONE:
            break
        n_total += 1
        cactus, ruled_out, traceable, cs, xs, ts = classify_record(rec.graph)
        n_cactus += cactus
        n_ruled_out += ruled_out
        n_traceable += traceable
        c_s += cs
        x_s += xs
        t_s += ts
    return DatasetStats(
        n_total,
        n_cactus,
        n_ruled_out,
        n_traceable,
        parse_s,
        parse_s + c_s,
        parse_s + c_s + x_s,
        parse_s + c_s + x_s + t_s,
    )


def _iter_chunks(
    stream: Iterable[str], records_per_chunk: int
) -> Iterator[tuple[int, str]]:
    """Split a line stream into chunks at record boundaries.

    Yields (1-based line number of the chunk's first line, chunk text).
    """
    buf: list[str] = []
    start_line = 1
    lineno = 0
    records = 0
    for line in stream:
        lineno += 1
        if line.startswith("t ") and records >= records_per_chunk:
            yield start_line, "".join(buf)
            buf = []
            start_line = lineno
            records = 0
        if line.startswith("t "):
            records += 1
        buf.append(line)
    if buf:
        yield start_line, "".join(buf)


def _eval_chunk(chunk: tuple[int, str], lenient: bool) -> tuple:
    start_line, text = chunk
    counts = [0, 0, 0, 0]
    seconds = [0.0, 0.0, 0.0, 0.0]
    stream = io.StringIO(text)
    it = parse_stream(stream, lenient=lenient)
    try:
        while True:
            t0 = perf_counter()
            rec = next(it, _DONE)
            seconds[0] += perf_counter() - t0
            if rec is _DONE:
                break
            counts[0] += 1
            cactus, ruled_out, traceable, cs, xs, ts = classify_record(rec.graph)
            counts[1] += cactus
            counts[2] += ruled_out
            counts[3] += traceable
            seconds[1] += cs
            seconds[2] += xs
            seconds[3] += ts
    except ParseError as exc:
        # report the position in the whole file, not the chunk
        raise ParseError(start_line + exc.line - 1, exc.message) from None
    return tuple(counts), tuple(seconds)


def run_stats_parallel(
    stream: IO[str],
    workers: int,
    *,
    lenient: bool = False,
    records_per_chunk: int = 256,
) -> DatasetStats:
    """Chunked multiprocess run; counters match the sequential runner."""
    if workers < 1:
        raise ValueError(f"need at least one worker, got {workers}")
    totals = [0, 0, 0, 0]
    seconds = [0.0, 0.0, 0.0, 0.0]

    def fold(result):
        counts, secs = result
        for k in range(4):
            totals[k] += counts[k]
            seconds[k] += secs[k]

    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending: deque = deque()
        # bounded in-flight window keeps memory proportional to chunk size
        for chunk in _iter_chunks(stream, records_per_chunk):
            while len(pending) >= workers * 2:
                fold(pending.popleft().result())
            pending.append(pool.submit(_eval_chunk, chunk, lenient))
        while pending:
            fold(pending.popleft().result())
    return DatasetStats(
        totals[0],
        totals[1],
        totals[2],
        totals[3],
        seconds[0],
        seconds[0] + seconds[1],
        seconds[0] + seconds[1] + seconds[2],
        seconds[0] + seconds[1] + seconds[2] + seconds[3],
    )
