"""Exact Hamiltonian path oracle for small graphs.

Dynamic program over (visited vertex set, end vertex) states: dp[mask] is
the bitmask of vertices at which some path covering exactly ``mask`` can
end. O(n^2 * 2^n) time, O(2^n) integers of space, capped at 24 vertices.
This exists as ground truth for the test corpus and as a desk-scale
fallback for graphs the screen leaves inconclusive — never as the
production path.

Witnesses are deterministic: the reported path starts at the smallest
possible endpoint and every backtracking step picks the smallest-id
predecessor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

MAX_ORACLE_VERTICES = 24


class TooLargeError(ValueError):
    def __init__(self, vertex_count: int):
        super().__init__(
            f"{vertex_count} vertices exceeds the oracle cap of "
            f"{MAX_ORACLE_VERTICES}"
        )
        self.vertex_count = vertex_count


class EmptyGraphError(ValueError):
    """The oracle is undefined on the empty graph."""


@dataclass(frozen=True)
class OracleResult:
    traceable: bool
    witness_path: tuple[int, ...] | None = None


def exact_traceable(g: Graph) -> OracleResult:
    """Decide Hamiltonian path existence exactly; witness on success."""
    n = g.vertex_count
    if n == 0:
        raise EmptyGraphError("no vertices")
    if n > MAX_ORACLE_VERTICES:
        raise TooLargeError(n)
    if n == 1:
        return OracleResult(True, (0,))

    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    full = (1 << n) - 1
    dp = [0] * (full + 1)
    for v in range(n):
        dp[1 << v] = 1 << v
    for mask in range(1, full):
        ends = dp[mask]
        if not ends:
            continue
        not_mask = ~mask
        while ends:
            bit = ends & -ends
            ends ^= bit
            v = bit.bit_length() - 1
            ext = nbr[v] & not_mask
            while ext:
                nb = ext & -ext
                ext ^= nb
                dp[mask | nb] |= nb

    ends = dp[full]
    if not ends:
        return OracleResult(False)
    return OracleResult(True, _reconstruct(dp, nbr, full, ends))


def _reconstruct(dp: list[int], nbr: list[int], full: int, ends: int
                 ) -> tuple[int, ...]:
    # Walk backwards from the smallest endpoint; since the graph is
    # undirected the reversed traversal read front-to-back is itself a
    # valid path, so the witness starts at that smallest endpoint.
    v = (ends & -ends).bit_length() - 1
    mask = full
    path = [v]
    while mask != 1 << v:
        prev_mask = mask ^ (1 << v)
        cands = dp[prev_mask] & nbr[v]
        u = (cands & -cands).bit_length() - 1
        path.append(u)
        mask = prev_mask
        v = u
    return tuple(path)


def validate_path(g: Graph, path) -> bool:
    """Independent witness checker.

    True iff ``path`` lists every vertex exactly once and each consecutive
    pair is an edge. Deliberately shares no machinery with the oracle or
    with the cactus constructor, so neither can self-certify.
    """
    n = g.vertex_count
    if len(path) != n:
        return False
    seen = set()
    for v in path:
        if not isinstance(v, int) or not 0 <= v < n or v in seen:
            return False
        seen.add(v)
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            return False
    return True
