"""Immutable simple undirected graphs with dense 0-based vertex ids.

Everything downstream (block decomposition, screening, generators, the
dataset parser) speaks this one representation: edges are stored once as
``(u, v)`` pairs with ``u < v`` in lexicographic order, and adjacency
lists are sorted ascending. Construction canonicalizes the edge list, so
two inputs with the same edge set produce equal graphs regardless of
input order.

Traversals are iterative throughout; input sizes may exceed any sane
recursion limit.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""


class SelfLoopError(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class OutOfRangeError(GraphError):
    def __init__(self, vertex: int, vertex_count: int):
        super().__init__(
            f"vertex {vertex} out of range for graph on {vertex_count} vertices"
        )
        self.vertex = vertex
        self.vertex_count = vertex_count


@dataclass(frozen=True, slots=True, repr=False)
class Graph:
    """A simple undirected graph on vertices ``0 .. vertex_count - 1``.

    Instances are immutable and hashable; all operations in this package
    treat them as pure values, so sharing across threads is safe.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        """Edge membership via binary search on the sorted adjacency row."""
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            return False
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={len(self.edges)})"


def build_graph(
    vertex_count: int, edge_list: Iterable[Sequence[int]]
) -> tuple[Graph, int]:
    """Validate and canonicalize an edge list.

    Returns ``(graph, duplicates)`` where ``duplicates`` counts input pairs
    that collapsed onto an already-seen edge. Duplicates are tolerated
    because bond lists in the wild repeat edges; self-loops are not, since
    they break every block-structure argument this package relies on.

    Raises SelfLoopError or OutOfRangeError on bad pairs.
    """
    if vertex_count < 0:
        raise GraphError(f"negative vertex count {vertex_count}")
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    for u, v in edge_list:
        if u == v:
            raise SelfLoopError(u)
        if not 0 <= u < vertex_count:
            raise OutOfRangeError(u, vertex_count)
        if not 0 <= v < vertex_count:
            raise OutOfRangeError(v, vertex_count)
        edge = (u, v) if u < v else (v, u)
        if edge in seen:
            duplicates += 1
        else:
            seen.add(edge)
    edges = tuple(sorted(seen))
    rows: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        rows[u].append(v)
        rows[v].append(u)
    # Lexicographic edge order makes every adjacency row come out ascending.
    adjacency = tuple(tuple(row) for row in rows)
    return Graph(vertex_count, edges, adjacency), duplicates


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0.

    The empty graph counts as disconnected (there is nothing to reach
    from), a single vertex as connected.
    """
    n = g.vertex_count
    if n == 0:
        return False
    adj = g.adjacency
    seen = bytearray(n)
    seen[0] = 1
    reached = 1
    queue = deque((0,))
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                reached += 1
                queue.append(v)
    return reached == n


def remove_vertex(g: Graph, v: int) -> Graph:
    """The graph with ``v`` and its incident edges removed, ids compacted.

    Vertices above ``v`` shift down by one so the result is dense again.
    """
    n = g.vertex_count
    if not 0 <= v < n:
        raise OutOfRangeError(v, n)
    kept = []
    for a, b in g.edges:
        if a == v or b == v:
            continue
        kept.append((a - (a > v), b - (b > v)))
    graph, _ = build_graph(n - 1, kept)
    return graph


def connected_component_count(g: Graph) -> int:
    """Number of connected components; 0 for the empty graph."""
    n = g.vertex_count
    adj = g.adjacency
    seen = bytearray(n)
    parts = 0
    for start in range(n):
        if seen[start]:
            continue
        parts += 1
        seen[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    stack.append(w)
    return parts
