from hypothesis import settings

from tracescreen import Graph, build_graph

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def G(n, edges):
    graph, _ = build_graph(n, edges)
    return graph


def path_graph(n):
    return G(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    assert n >= 3
    return G(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return G(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(k):
    """K_{1,k}: center 0, leaves 1..k."""
    return G(k + 1, [(0, i) for i in range(1, k + 1)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    off = a.vertex_count
    edges = list(a.edges) + [(u + off, v + off) for u, v in b.edges]
    return G(a.vertex_count + b.vertex_count, edges)


def triangle_with_three_branches():
    """A cactus built around a central triangle {0,1,2} where all three
    corners carry extra blocks, so the center block has three
    articulation vertices and vertex 1 has criticality 3.

    0 holds a second triangle {0,3,4}; 1 holds a hanging path 1-5-6 and a
    pendant 1-7; 2 holds a hexagon 2-8-9-10-11-12-2.
    """
    return G(13, [
        (0, 1), (1, 2), (0, 2),
        (0, 3), (0, 4), (3, 4),
        (1, 5), (5, 6), (1, 7),
        (2, 8), (8, 9), (9, 10), (10, 11), (11, 12), (12, 2),
    ])


def hexagon_triangle_pendants():
    """Cactus: hexagon 0..5, triangle {5,6,7}, pendants 2-8 and 6-9."""
    return G(10, [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
        (5, 6), (6, 7), (7, 5),
        (2, 8), (6, 9),
    ])


def chorded_hexagons():
    """Not a cactus: two hexagons sharing vertex 5, both carrying chords,
    plus two pendants."""
    return G(13, [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4),
        (3, 6),
        (5, 7), (7, 8), (8, 9), (9, 10), (10, 11), (11, 5),
        (7, 10), (8, 11),
        (7, 12),
    ])


def square_with_opposite_pendants():
    """Square 0..3 with pendants at the opposite corners 0 and 2."""
    return G(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 5)])


def spider_three_legs():
    """Hub 0 with three legs of length two."""
    return G(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def brute_force_traceable(g: Graph) -> bool:
    """Permutation backtracking with visited-set pruning.

    Second, independent ground truth used to cross-check the subset-DP
    oracle; intentionally naive.
    """
    n = g.vertex_count
    if n == 0:
        return False
    if n == 1:
        return True
    adj = g.adjacency
    visited = [False] * n

    def extend(v, remaining):
        if remaining == 0:
            return True
        visited[v] = True
        for w in adj[v]:
            if not visited[w] and extend(w, remaining - 1):
                visited[v] = False
                return True
        visited[v] = False
        return False

    return any(extend(start, n - 1) for start in range(n))
