import random
from itertools import combinations, permutations

import pytest

from turanlf.graph import Graph


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


# -- independent brute-force oracles (no bitsets, no shared code) ---------------


def brute_cliques(g: Graph, r: int) -> int:
    return sum(all(g.has_edge(u, v) for u, v in combinations(s, 2)) for s in combinations(range(g.n), r))


def brute_matching(g: Graph) -> int:
    edges = g.edges()
    for k in range(g.n // 2, 0, -1):
        for sub in combinations(edges, k):
            verts = [x for e in sub for x in e]
            if len(set(verts)) == 2 * k:
                return k
    return 0


def is_linear_forest(n: int, edges) -> bool:
    deg = [0] * n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        if deg[u] > 2 or deg[v] > 2:
            return False
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def brute_linear_forest(g: Graph) -> int:
    edges = g.edges()
    for k in range(min(len(edges), g.n - 1), 0, -1):
        if any(is_linear_forest(g.n, sub) for sub in combinations(edges, k)):
            return k
    return 0


def brute_path_cover(g: Graph) -> int:
    """Minimum number of vertex-disjoint paths covering g (isolated vertices count).

    ``single[S]`` says whether S is spanned by one path, found by extending
    paths vertex by vertex; the cover is then a minimum partition into such sets.
    """
    n = g.n
    full = 1 << n
    ends = [set() for _ in range(full)]
    for v in range(n):
        ends[1 << v].add(v)
    for mask in range(1, full):
        for v in ends[mask]:
            for u in range(n):
                if not mask >> u & 1 and g.has_edge(u, v):
                    ends[mask | 1 << u].add(u)
    cover = [0] + [n + 1] * (full - 1)
    for mask in range(1, full):
        low = mask & -mask
        sub = mask
        while sub:
            if sub & low and ends[sub]:
                cover[mask] = min(cover[mask], cover[mask ^ sub] + 1)
            sub = (sub - 1) & mask
    return cover[full - 1]


def brute_canonical(g: Graph) -> tuple:
    """Lexicographically largest sorted edge list over all relabellings."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or key > best:
            best = key
    return best


@pytest.fixture
def rng():
    return random.Random(20240601)
