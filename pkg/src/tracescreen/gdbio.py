"""Streaming reader/writer for the graph-database text format.

One record per graph:

    t # <id>
    v <idx> <label>     (idx consecutive from 0)
    e <u> <v> <label>

Tokens are separated by single spaces, labels are mandatory but ignored,
blank lines are skipped, and anything else is a parse error. The parser
is a line-at-a-time state machine that holds at most one record in
memory, so arbitrarily large files stream in bounded space.

Strict mode (the default) raises ParseError with the 1-based line number
at the first malformed line. Lenient mode drops the offending record and
resumes at the next ``t`` line — real-world dumps are rarely pristine and
a screening job should not die at record eight million.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .graph import Graph, build_graph


class ParseError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(line, message)
        self.line = line
        self.message = message

    def __str__(self) -> str:
        return f"line {self.line}: {self.message}"


@dataclass(frozen=True)
class GraphRecord:
    id: str
    graph: Graph
    duplicate_edge_warnings: int = 0


def _is_index(token: str) -> bool:
    return token.isascii() and token.isdecimal()


def parse_stream(
    stream: Iterable[str], *, lenient: bool = False
) -> Iterator[GraphRecord]:
    """Yield records in file order.

    ``stream`` is any iterable of lines (an open text file does fine).
    """
    rec_id: str | None = None
    nverts = 0
    edges: list[tuple[int, int]] = []
    in_edges = False
    skipping = False
    lineno = 0

    def fail(message: str):
        nonlocal skipping, rec_id
        if lenient:
            skipping = True
            rec_id = None
            return None
        raise ParseError(lineno, message)

    for raw in stream:
        lineno += 1
        line = raw.rstrip("\n")
        if not line or line.isspace():
            continue
        parts = line.split(" ")
        kind = parts[0]
        if skipping and kind != "t":
            continue
        if kind == "e":
            if rec_id is None:
                fail("edge line outside a record")
                continue
            if len(parts) != 4 or "" in parts:
                fail("malformed edge line")
                continue
            su, sv = parts[1], parts[2]
            if not (_is_index(su) and _is_index(sv)):
                fail("edge endpoints must be decimal vertex indices")
                continue
            u = int(su)
            v = int(sv)
            if u >= nverts or v >= nverts:
                fail(f"edge endpoint {max(u, v)} out of range")
                continue
            if u == v:
                fail(f"self-loop at vertex {u}")
                continue
            in_edges = True
            edges.append((u, v))
        elif kind == "v":
            if rec_id is None:
                fail("vertex line outside a record")
                continue
            if in_edges:
                fail("vertex line after edge lines")
                continue
            if len(parts) != 3 or "" in parts:
                fail("malformed vertex line")
                continue
            if not _is_index(parts[1]):
                fail("vertex index must be decimal")
                continue
            if int(parts[1]) != nverts:
                fail(f"vertex index {parts[1]} not consecutive "
                     f"(expected {nverts})")
                continue
            nverts += 1
        elif kind == "t":
            if rec_id is not None:
                # the previous record is complete regardless of what this
                # header looks like
                graph, dups = build_graph(nverts, edges)
                yield GraphRecord(rec_id, graph, dups)
                rec_id = None
            nverts = 0
            edges = []
            in_edges = False
            if len(parts) != 3 or parts[1] != "#" or not parts[2]:
                fail("malformed record header")
                continue
            skipping = False
            rec_id = parts[2]
        elif rec_id is None and not skipping:
            fail("data before first record header")
        else:
            fail(f"unrecognized line {line!r}")

    if rec_id is not None:
        graph, dups = build_graph(nverts, edges)
        yield GraphRecord(rec_id, graph, dups)


def format_record(record_id: str, graph: Graph) -> str:
    """One record as text; labels are written as the placeholder 0."""
    parts = [f"t # {record_id}\n"]
    for i in range(graph.vertex_count):
        parts.append(f"v {i} 0\n")
    for u, v in graph.edges:
        parts.append(f"e {u} {v} 0\n")
    return "".join(parts)


def write_records(
    out: IO[str], records: Iterable[tuple[str, Graph]]
) -> int:
    """Write ``(id, graph)`` pairs; returns the number written."""
    count = 0
    for record_id, graph in records:
        out.write(format_record(record_id, graph))
        count += 1
    return count
