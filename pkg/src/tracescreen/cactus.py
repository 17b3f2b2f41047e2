"""Exact Hamiltonian path decision for cactus graphs.

A cactus is a connected graph whose blocks are single edges or simple
cycles. For cacti the three necessary conditions become sufficient:

1. every vertex has criticality at most two,
2. every block contains at most two articulation vertices,
3. when a block contains two articulation vertices, they are adjacent.

When all three hold, a Hamiltonian path is built constructively: delete
one edge from every cycle block (the edge joining the two articulation
vertices, or an edge at the unique articulation vertex, or — for a graph
that is a single cycle — the lexicographically smallest edge), then read
off the remaining path. Tie-breaks are fixed so the witness is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import BlockCutDecomposition, decompose
from .graph import Graph, is_connected

COND_CRITICALITY = "criticality"
COND_BLOCK_ARTICULATIONS = "block_articulations"
COND_ARTICULATIONS_NOT_ADJACENT = "articulations_not_adjacent"


class NotCactusError(ValueError):
    """The operation requires a cactus graph."""


class ConditionsViolatedError(ValueError):
    """Path construction requires all three traceability conditions."""

    def __init__(self, condition: str):
        super().__init__(f"condition violated: {condition}")
        self.condition = condition


@dataclass(frozen=True)
class CactusDecision:
    """Verdict for one graph.

    ``traceable`` is only present for connected cacti; ``witness_path``
    accompanies every positive verdict and ``failed_condition`` every
    negative one.
    """

    is_cactus: bool
    traceable: bool | None = None
    witness_path: tuple[int, ...] | None = None
    failed_condition: str | None = None


def is_cactus(g: Graph, d: BlockCutDecomposition) -> bool:
    """True iff every block is a single edge or a simple cycle.

    A block with at least two edges is 2-connected, and a 2-connected
    graph with as many edges as vertices is exactly a cycle, so the edge
    and vertex counts per block settle the question.
    """
    for b in range(d.block_count):
        ne = d.block_edge_count(b)
        if ne != 1 and ne != d.block_vertex_count(b):
            return False
    return True


def _first_violated_condition(d: BlockCutDecomposition) -> str | None:
    """Conditions checked whole-graph at a time, in their fixed order."""
    mem = d.block_membership_count
    if max(mem) > 2:
        return COND_CRITICALITY
    counts = list(d.iter_block_articulation_counts())
    if any(c >= 3 for c in counts):
        return COND_BLOCK_ARTICULATIONS
    for b, count in enumerate(counts):
        if count != 2 or d.block_edge_count(b) == 1:
            continue
        a1, a2 = sorted(w for w in d.block_vertex_ids(b) if mem[w] >= 2)
        if not _block_has_edge(d, b, a1, a2):
            return COND_ARTICULATIONS_NOT_ADJACENT
    return None


def _block_has_edge(d: BlockCutDecomposition, b: int, u: int, v: int) -> bool:
    for x, y in d.block_edge_pairs(b):
        if x == u and y == v:
            return True
    return False


def cactus_traceable(g: Graph, d: BlockCutDecomposition) -> CactusDecision:
    """Exact decision for a connected cactus, with witness on success."""
    if not is_cactus(g, d):
        raise NotCactusError("graph has a block that is neither edge nor cycle")
    failed = _first_violated_condition(d)
    if failed is not None:
        return CactusDecision(True, False, None, failed)
    path = _linearize(g, _cycle_block_deletions(d))
    return CactusDecision(True, True, tuple(path), None)


def _cycle_block_deletions(d: BlockCutDecomposition) -> set[tuple[int, int]]:
    """One edge to delete per cycle block; edge blocks keep their edge.

    Rules, per block: two articulation vertices -> delete the edge between
    them; one articulation vertex -> delete the edge to its smaller-id
    neighbor inside the block; none (the graph is a single cycle) ->
    delete the lexicographically smallest edge.
    """
    mem = d.block_membership_count
    deletions: set[tuple[int, int]] = set()
    for b in range(d.block_count):
        if d.block_edge_count(b) == 1:
            continue
        arts = sorted(w for w in d.block_vertex_ids(b) if mem[w] >= 2)
        if len(arts) == 2:
            deletions.add((arts[0], arts[1]))
        elif len(arts) == 1:
            a = arts[0]
            inner = min(
                (y if x == a else x)
                for x, y in d.block_edge_pairs(b)
                if x == a or y == a
            )
            deletions.add((a, inner) if a < inner else (inner, a))
        else:
            deletions.add(min(d.block_edge_pairs(b)))
    return deletions


def _linearize(g: Graph, deleted: set[tuple[int, int]]) -> list[int]:
    """Walk the surviving edges from the smaller degree-<=1 endpoint."""
    n = g.vertex_count
    rows: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        if (u, v) in deleted:
            continue
        rows[u].append(v)
        rows[v].append(u)
    start = -1
    for v in range(n):
        if len(rows[v]) <= 1:
            start = v
            break
    if start < 0:
        raise AssertionError("no path endpoint; deletions left a cycle")
    path = [start]
    prev = -1
    cur = start
    for _ in range(n - 1):
        row = rows[cur]
        nxt = row[0] if row[0] != prev else row[1]
        path.append(nxt)
        prev = cur
        cur = nxt
    return path


def construct_path(g: Graph, d: BlockCutDecomposition) -> list[int]:
    """Hamiltonian path for a connected cactus meeting all three conditions.

    Raises NotCactusError or ConditionsViolatedError otherwise.
    """
    if not is_cactus(g, d):
        raise NotCactusError("graph has a block that is neither edge nor cycle")
    failed = _first_violated_condition(d)
    if failed is not None:
        raise ConditionsViolatedError(failed)
    return _linearize(g, _cycle_block_deletions(d))


def decide_cactus(
    g: Graph, *, decomposition: BlockCutDecomposition | None = None
) -> CactusDecision:
    """Full decision for an arbitrary graph.

    Disconnected graphs and graphs with a non-cycle block come back with
    ``is_cactus=False`` and no traceability verdict. The one-vertex graph
    is a degenerate cactus with the one-vertex path as witness.
    """
    n = g.vertex_count
    if n == 0:
        return CactusDecision(False)
    if n == 1:
        return CactusDecision(True, True, (0,), None)
    if decomposition is None:
        if not is_connected(g):
            return CactusDecision(False)
        decomposition = decompose(g)
    if not is_cactus(g, decomposition):
        return CactusDecision(False)
    return cactus_traceable(g, decomposition)
