"""Seeded, reproducible instance generators for tests and benchmarks.

All randomness comes from SplitMix64, written out below so the stream can
be reproduced anywhere from the seed alone: byte-identical corpora are a
test requirement, so nothing here may depend on the platform's random
module or hash seeding.

Three families are provided: grown random cacti, uniform-spanning-tree
random connected graphs with extra edges, and the exhaustive enumeration
of all labeled graphs on up to six vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, build_graph

_MASK64 = (1 << 64) - 1


class InvalidParamError(ValueError):
    """Generator parameters out of range."""


class SplitMix64:
    """The SplitMix64 recurrence.

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z XOR (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output z XOR (z >> 31)

    Any 64-bit seed is valid, including 0.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound); plain modulo, bias irrelevant here."""
        return self.next_u64() % bound

    def unit(self) -> float:
        """Float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53


KIND_CACTUS = "cactus"
KIND_CONNECTED = "connected"
KIND_ALL_LABELED = "all"


@dataclass(frozen=True)
class GenSpec:
    """Reproducible description of one generated corpus entry."""

    kind: str
    n: int
    seed: int = 0
    cycle_fraction: float = 0.5
    edge_count: int | None = None


def generate(spec: GenSpec) -> Iterator[Graph]:
    if spec.kind == KIND_CACTUS:
        yield gen_cactus(spec.n, spec.cycle_fraction, spec.seed)
    elif spec.kind == KIND_CONNECTED:
        if spec.edge_count is None:
            raise InvalidParamError("connected kind needs edge_count")
        yield gen_connected(spec.n, spec.edge_count, spec.seed)
    elif spec.kind == KIND_ALL_LABELED:
        yield from all_labeled_graphs(spec.n)
    else:
        raise InvalidParamError(f"unknown kind {spec.kind!r}")


def gen_cactus(n: int, cycle_fraction: float, seed: int) -> Graph:
    """Grow a connected cactus on exactly ``n`` vertices.

    Starting from a single vertex, repeatedly pick an existing vertex
    uniformly and attach either a pendant edge or a cycle of length 3..6
    (chosen with probability ``cycle_fraction``). A cycle that would
    overshoot ``n`` is truncated; if only one vertex remains to place, a
    pendant edge is attached regardless of the coin.

    Draw order per attachment is fixed — anchor, coin, then cycle length
    when the coin said cycle — so the stream is reproducible even across
    truncated steps.
    """
    if n < 1:
        raise InvalidParamError(f"need n >= 1, got {n}")
    if not 0.0 <= cycle_fraction <= 1.0:
        raise InvalidParamError(
            f"cycle_fraction must be within [0, 1], got {cycle_fraction}"
        )
    rng = SplitMix64(seed)
    edges: list[tuple[int, int]] = []
    cur = 1
    while cur < n:
        anchor = rng.below(cur)
        wants_cycle = rng.unit() < cycle_fraction
        if wants_cycle:
            length = 3 + rng.below(4)
        remaining = n - cur
        if wants_cycle and remaining >= 2:
            new = min(length - 1, remaining)
            prev = anchor
            for _ in range(new):
                edges.append((prev, cur))
                prev = cur
                cur += 1
            edges.append((prev, anchor))
        else:
            edges.append((anchor, cur))
            cur += 1
    graph, _ = build_graph(n, edges)
    return graph


def gen_connected(n: int, m: int, seed: int) -> Graph:
    """Random connected simple graph with exactly ``m`` edges.

    A uniform spanning tree of the complete graph is drawn first by the
    random-walk construction (the walk visits uniform random other
    vertices; the first entering edge of each vertex becomes a tree
    edge), then ``m - (n - 1)`` distinct non-tree edges are added by
    rejection sampling.
    """
    if n < 1:
        raise InvalidParamError(f"need n >= 1, got {n}")
    max_m = n * (n - 1) // 2
    if not n - 1 <= m <= max_m:
        raise InvalidParamError(
            f"edge count {m} outside [{n - 1}, {max_m}] for n={n}"
        )
    rng = SplitMix64(seed)
    edges: set[tuple[int, int]] = set()
    if n > 1:
        seen = bytearray(n)
        cur = rng.below(n)
        seen[cur] = 1
        visited = 1
        while visited < n:
            step = rng.below(n - 1)
            nxt = step if step < cur else step + 1
            if not seen[nxt]:
                seen[nxt] = 1
                visited += 1
                edges.add((cur, nxt) if cur < nxt else (nxt, cur))
            cur = nxt
    while len(edges) < m:
        u = rng.below(n)
        v = rng.below(n)
        if u == v:
            continue
        edge = (u, v) if u < v else (v, u)
        if edge in edges:
            continue
        edges.add(edge)
    graph, _ = build_graph(n, sorted(edges))
    return graph


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, once each.

    Vertex pairs are ordered lexicographically ((0,1), (0,2), ..,
    (n-2,n-1)); graph number ``mask`` contains pair ``i`` iff bit ``i``
    of ``mask`` is set, and graphs are yielded in mask order 0, 1, 2, ...
    Capped at n = 6 (32768 graphs) — beyond that exhaustion is hopeless
    anyway.
    """
    if not 1 <= n <= 6:
        raise InvalidParamError(f"need 1 <= n <= 6, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    npairs = len(pairs)
    for mask in range(1 << npairs):
        edge_list = [pairs[i] for i in range(npairs) if mask >> i & 1]
        graph, _ = build_graph(n, edge_list)
        yield graph
