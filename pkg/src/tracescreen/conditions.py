"""Necessary conditions for a graph to contain a Hamiltonian path.

All three checks are one-sided: a failure proves no Hamiltonian path can
exist, a pass proves nothing. They rest on the block structure of the
graph:

* no vertex may have criticality three or more,
* no block may contain three or more articulation vertices,
* the number of leaf blocks (blocks with exactly one articulation
  vertex) must be zero or two.

`screen` bundles them, in that order, behind a connectivity check and
reports the first violation it finds, or Inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import BlockCutDecomposition, decompose
from .graph import Graph, is_connected

NOT_TRACEABLE = "not_traceable"
INCONCLUSIVE = "inconclusive"

REASON_EMPTY = "empty"
REASON_DISCONNECTED = "disconnected"
REASON_CRITICALITY = "criticality"
REASON_BLOCK_ARTICULATIONS = "block_articulations"
REASON_LEAF_COMPONENTS = "leaf_components"


@dataclass(frozen=True)
class ScreenVerdict:
    """Outcome of the screen: either NOT_TRACEABLE with a reason or
    INCONCLUSIVE.

    ``subject`` is the offending vertex id for a criticality violation and
    the offending block index for a block-articulation violation; ``value``
    carries the measured criticality, articulation count, or leaf-block
    count.
    """

    outcome: str
    reason: str | None = None
    subject: int | None = None
    value: int | None = None

    @property
    def ruled_out(self) -> bool:
        return self.outcome == NOT_TRACEABLE


_INCONCLUSIVE = ScreenVerdict(INCONCLUSIVE)


@dataclass(frozen=True)
class ArticulationGraph:
    """Graph on the articulation vertices; two are adjacent when some
    block contains both."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]


def check_criticality(d: BlockCutDecomposition) -> tuple[int, int] | None:
    """Lowest-id vertex with criticality >= 3, as ``(vertex, criticality)``,
    or None."""
    mem = d.block_membership_count
    # max() runs at C speed; the index scan only happens on violating graphs.
    if not mem or max(mem) <= 2:
        return None
    for v, count in enumerate(mem):
        if count >= 3:
            return v, count
    raise AssertionError("unreachable")


def check_block_articulations(
    d: BlockCutDecomposition,
) -> tuple[int, int] | None:
    """First block with >= 3 articulation vertices, as ``(block, count)``,
    or None."""
    for b, count in enumerate(d.iter_block_articulation_counts()):
        if count >= 3:
            return b, count
    return None


def leaf_component_count(d: BlockCutDecomposition) -> int:
    """Number of blocks containing exactly one articulation vertex."""
    total = 0
    for count in d.iter_block_articulation_counts():
        if count == 1:
            total += 1
    return total


def articulation_graph(d: BlockCutDecomposition) -> ArticulationGraph:
    mem = d.block_membership_count
    edges: set[tuple[int, int]] = set()
    for b in range(d.block_count):
        arts = [w for w in d.block_vertex_ids(b) if mem[w] >= 2]
        arts.sort()
        for i, v in enumerate(arts):
            for w in arts[i + 1:]:
                edges.add((v, w))
    return ArticulationGraph(d.articulation_set, frozenset(edges))


def is_path_graph(g: Graph | ArticulationGraph) -> bool:
    """True iff the input is a simple path.

    Accepts either a Graph or an ArticulationGraph (any object with a
    vertex collection and an edge collection). The empty graph and the
    single vertex count as paths.
    """
    if isinstance(g, Graph):
        vertices: list[int] = list(range(g.vertex_count))
        edges = g.edges
    else:
        vertices = sorted(g.vertices)
        edges = g.edges  # type: ignore[assignment]
    n = len(vertices)
    if n == 0:
        return len(edges) == 0
    if len(edges) != n - 1:
        return False
    # n-1 edges + connected == tree; max degree 2 then forces a path.
    degree = {v: 0 for v in vertices}
    neighbors: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
        neighbors[u].append(v)
        neighbors[v].append(u)
        if degree[u] > 2 or degree[v] > 2:
            return False
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        u = stack.pop()
        for w in neighbors[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def screen(
    g: Graph, *, decomposition: BlockCutDecomposition | None = None
) -> ScreenVerdict:
    """Run every necessary condition; never certifies traceability.

    Returns NOT_TRACEABLE with the first failed condition — checked in the
    order empty, disconnected, criticality, block articulations, leaf
    count — or INCONCLUSIVE. A single vertex is trivially traceable, but
    the screen still answers INCONCLUSIVE there: its contract is one-sided.

    ``decomposition`` may be supplied when the caller already decomposed
    the graph (which implies it was connected); the screen then skips its
    own connectivity pass.
    """
    n = g.vertex_count
    if n == 0:
        return ScreenVerdict(NOT_TRACEABLE, REASON_EMPTY)
    if decomposition is None:
        if not is_connected(g):
            return ScreenVerdict(NOT_TRACEABLE, REASON_DISCONNECTED)
        if n == 1:
            return _INCONCLUSIVE
        decomposition = decompose(g)
    elif n == 1:
        return _INCONCLUSIVE

    crit = check_criticality(decomposition)
    if crit is not None:
        vertex, value = crit
        return ScreenVerdict(NOT_TRACEABLE, REASON_CRITICALITY, vertex, value)
    arts = check_block_articulations(decomposition)
    if arts is not None:
        block, value = arts
        return ScreenVerdict(
            NOT_TRACEABLE, REASON_BLOCK_ARTICULATIONS, block, value
        )
    leaves = leaf_component_count(decomposition)
    if leaves not in (0, 2):
        return ScreenVerdict(NOT_TRACEABLE, REASON_LEAF_COMPONENTS, None, leaves)
    return _INCONCLUSIVE
