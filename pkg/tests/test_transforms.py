import random

import pytest

from conftest import random_graph
from turanlf.freeness import count_cliques, linear_forest_number, matching_number
from turanlf.graph import (
    Coloring,
    Graph,
    GraphError,
    complete_graph,
    complete_multipartite,
    empty_graph,
    greedy_coloring,
    join,
    path_graph,
)
from turanlf.transforms import (
    ascending_pairs,
    closure,
    full_shift,
    is_shifted,
    shift,
    shift_order_diagnostic,
    strong_closure,
    strong_shift,
)


def shift_by_definition(g: Graph, i: int, j: int) -> Graph:
    """Edge-by-edge reading of S_ij against the original edge set."""
    out = []
    for e in g.edges():
        if j in e and i not in e:
            k = e[0] if e[1] == j else e[1]
            if not g.has_edge(i, k):
                out.append((i, k))
                continue
        out.append(e)
    return Graph.from_edges(g.n, out)


def test_shift_examples():
    g = Graph.from_edges(3, [(1, 2)])
    assert shift(g, 0, 1).edges() == [(0, 2)]
    g = Graph.from_edges(3, [(0, 2), (1, 2)])
    assert shift(g, 0, 1) == g
    # an edge {i, j} stays put
    g = Graph.from_edges(2, [(0, 1)])
    assert shift(g, 0, 1) == g


def test_shift_rejects_bad_pairs():
    g = path_graph(4)
    for i, j in [(1, 1), (2, 1), (-1, 2), (0, 4)]:
        with pytest.raises(GraphError):
            shift(g, i, j)


def test_shift_matches_definition(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 9))
        for i, j in ascending_pairs(g.n):
            assert shift(g, i, j) == shift_by_definition(g, i, j)


def test_shift_preserves_edges(rng):
    for _ in range(1000):
        g = random_graph(rng, 8)
        c = greedy_coloring(g)
        for i, j in ascending_pairs(8):
            assert shift(g, i, j).edge_count == g.edge_count
            assert strong_shift(g, i, j, c).edge_count == g.edge_count


def test_strong_shift_examples():
    g = Graph.from_edges(3, [(1, 2)])
    assert strong_shift(g, 0, 1, Coloring((0, 0, 0))) == g
    assert strong_shift(g, 0, 1, Coloring((0, 1, 1))).edges() == [(0, 2)]
    with pytest.raises(GraphError):
        strong_shift(g, 0, 1, Coloring((0, 1)))
    with pytest.raises(GraphError):
        strong_shift(g, 1, 0, Coloring((0, 1, 1)))


def test_strong_shift_bipartite_preserves_edges(rng):
    for _ in range(300):
        a = rng.randint(1, 7)
        g0, col = complete_multipartite([a, 8 - a])
        g = Graph.from_edges(8, [e for e in g0.edges() if rng.random() < 0.6])
        for i, j in ascending_pairs(8):
            h = strong_shift(g, i, j, col)
            assert h.edge_count == g.edge_count


def test_full_shift_examples():
    g = join(complete_graph(2), empty_graph(5))  # threshold-like, already shifted
    assert is_shifted(g)
    assert full_shift(g) == g
    p = Graph.from_edges(5, [(2, 3), (3, 4)])
    h = full_shift(p)
    assert h.edge_count == 2 and is_shifted(h)
    assert h.edges() == [(0, 1), (0, 2)]
    with pytest.raises(GraphError):
        full_shift(p, strong=True)


def test_full_shift_fixpoint_and_potential(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 10))
        h = full_shift(g)
        assert h.edge_count == g.edge_count
        assert is_shifted(h)
        assert sum(u + v for u, v in h.edges()) <= sum(u + v for u, v in g.edges())
        c = greedy_coloring(g)
        hs = full_shift(g, strong=True, coloring=c)
        assert hs.edge_count == g.edge_count
        assert is_shifted(hs, strong=True, coloring=c)


def test_shift_order_diagnostic_reports_orders():
    res = shift_order_diagnostic(path_graph(5))
    assert set(res) == {"ascending", "descending", "random:0", "random:1", "random:2"}
    assert all(h.edge_count == 4 for h in res.values())
    assert all(is_shifted(h) for h in res.values())


def test_shift_monotonicity_properties(rng):
    for _ in range(400):
        g = random_graph(rng, rng.randint(2, 8))
        lf, nu = linear_forest_number(g), matching_number(g)
        cl = [count_cliques(g, r) for r in range(2, 6)]
        for i, j in ascending_pairs(g.n):
            h = shift(g, i, j)
            assert linear_forest_number(h) <= lf
            assert matching_number(h) <= nu
            assert all(count_cliques(h, r) >= c for r, c in zip(range(2, 6), cl))


def test_closure_examples():
    assert closure(path_graph(3), 2) == complete_graph(3)
    g = path_graph(5)
    assert closure(g, 2 * g.n) == g
    assert closure(empty_graph(3), 0) == complete_graph(3)
    with pytest.raises(ValueError):
        closure(g, -1)


def test_closure_postcondition_and_order_independence(rng):
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 10))
        k = rng.randint(0, 2 * g.n)
        h = closure(g, k)
        assert all(h.has_edge(u, v) for u, v in g.edges())
        deg = h.degrees()
        assert all(deg[u] + deg[v] < k for u, v in h.non_edges())
        assert closure(g, k, rng=random.Random(rng.random())) == h


def test_strong_closure_examples():
    p3 = path_graph(3)
    assert strong_closure(p3, 2, Coloring((0, 1, 0))) == p3
    assert strong_closure(p3, 0, Coloring((0, 1, 2))) == complete_graph(3)
    k13, col = complete_multipartite([1, 3])
    assert strong_closure(k13, 4, col) == k13
    with pytest.raises(GraphError):
        strong_closure(p3, 1, Coloring((0, 1)))


def test_strong_closure_postcondition(rng):
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 9))
        c = Coloring(tuple(rng.randrange(3) for _ in range(g.n)))
        s = rng.randint(0, 2 * g.n)
        h = strong_closure(g, s, c)
        deg = h.degrees()
        for u, v in h.non_edges():
            assert c[u] == c[v] or deg[u] + deg[v] < s
        for u, v in h.edges():
            assert g.has_edge(u, v) or c[u] != c[v]
        assert strong_closure(g, s, c, rng=random.Random(rng.random())) == h
