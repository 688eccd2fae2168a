import networkx as nx
import pytest

from conftest import brute_cliques, brute_linear_forest, brute_matching, brute_path_cover, random_graph
from turanlf.freeness import (
    LinearForestWitness,
    MatchingWitness,
    clique_number,
    count_cliques,
    is_clique_free,
    is_linear_forest_free,
    is_matching_free,
    linear_forest_number,
    matching_number,
    max_linear_forest,
    max_matching,
    min_path_cover,
)
from turanlf.graph import (
    Graph,
    GraphError,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    join,
    path_graph,
    petersen_graph,
    turan_graph,
)


def star(k):
    return join(complete_graph(1), empty_graph(k))


def test_count_cliques_examples():
    assert count_cliques(complete_graph(4), 3) == 4
    assert count_cliques(turan_graph(5, 3), 3) == 4
    assert count_cliques(empty_graph(7), 2) == 0
    g = petersen_graph()
    assert count_cliques(g, 1) == 10 and count_cliques(g, 2) == 15
    with pytest.raises(ValueError):
        count_cliques(g, 0)


def test_is_clique_free_examples():
    assert is_clique_free(complete_multipartite([3, 3])[0], 3)
    assert is_clique_free(turan_graph(5, 3), 4)
    g = join(complete_graph(2), empty_graph(9))
    assert is_clique_free(g, 4) and not is_clique_free(g, 3)
    assert clique_number(g) == 3
    assert clique_number(empty_graph(0)) == 0


def test_matching_examples():
    assert max_matching(cycle_graph(5))[0] == 2
    assert max_matching(complete_multipartite([2, 7])[0])[0] == 2
    nu, w = max_matching(petersen_graph())
    assert nu == 5
    w.validate(petersen_graph())


def test_linear_forest_examples():
    assert max_linear_forest(complete_graph(4))[0] == 3
    assert max_linear_forest(star(5))[0] == 2
    assert max_linear_forest(complete_multipartite([2, 9])[0])[0] == 4


def test_is_linear_forest_free_examples():
    assert is_linear_forest_free(empty_graph(9), 1)
    assert is_linear_forest_free(star(8), 4)
    assert not is_linear_forest_free(path_graph(5), 4)
    with pytest.raises(ValueError):
        is_linear_forest_free(path_graph(5), 0)


def test_witness_tie_break_is_lex_smallest():
    g = cycle_graph(4)
    assert max_matching(g)[1].edges == ((0, 1), (2, 3))
    assert max_linear_forest(g)[1].edges == ((0, 1), (0, 3), (1, 2))
    assert max_linear_forest(complete_graph(4))[1].edges == ((0, 1), (0, 2), (1, 3))


def test_oracles_agree_on_random_graphs(rng):
    for _ in range(2000):
        g = random_graph(rng, rng.randint(0, 8))
        for r in range(1, 5):
            assert count_cliques(g, r) == brute_cliques(g, r)
        nu, mw = max_matching(g)
        assert nu == brute_matching(g)
        mw.validate(g)
        assert len(mw.edges) == nu
        lf, fw = max_linear_forest(g)
        assert lf == brute_linear_forest(g)
        fw.validate(g)
        assert len(fw.edges) == lf


def test_path_cover_identity(rng):
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 9))
        cover = min_path_cover(g)
        assert sorted(v for p in cover for v in p) == list(range(g.n))
        for p in cover:
            assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
        assert len(cover) == brute_path_cover(g) == g.n - linear_forest_number(g)


def test_matching_against_networkx_larger(rng):
    for _ in range(200):
        n = rng.randint(10, 40)
        g = random_graph(rng, n, rng.uniform(0.02, 0.3))
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        want = len(nx.max_weight_matching(h, maxcardinality=True))
        assert matching_number(g) == want
        nu, w = max_matching(g)
        assert nu == want
        w.validate(g)


def test_monotone_under_edge_addition(rng):
    for _ in range(500):
        g = random_graph(rng, rng.randint(2, 9))
        non = list(g.non_edges())
        if not non:
            continue
        h = g.add_edge(*rng.choice(non))
        assert matching_number(h) >= matching_number(g)
        assert linear_forest_number(h) >= linear_forest_number(g)
        for r in range(1, 6):
            assert count_cliques(h, r) >= count_cliques(g, r)


def test_predicates_agree_with_values(rng):
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 10))
        w, nu, lf = clique_number(g), matching_number(g), linear_forest_number(g)
        for q in range(1, 7):
            assert is_clique_free(g, q) == (count_cliques(g, q) == 0) == (w < q)
        for k in range(1, 7):
            assert is_matching_free(g, k) == (nu < k)
        for s in range(1, 10):
            assert is_linear_forest_free(g, s) == (lf < s)


def test_linear_forest_bounds_on_larger_graphs():
    # K_{a,b} with a < b: a path alternates sides, so lf = 2a
    for a, b in [(3, 20), (5, 30), (2, 37)]:
        g = complete_multipartite([a, b])[0]
        assert linear_forest_number(g) == 2 * a
    assert linear_forest_number(complete_graph(20)) == 19
    assert linear_forest_number(path_graph(40)) == 39


def test_invalid_witnesses_rejected():
    g = path_graph(4)
    with pytest.raises(GraphError):
        MatchingWitness(((0, 1), (1, 2))).validate(g)
    with pytest.raises(GraphError):
        MatchingWitness(((0, 2),)).validate(g)
    c = cycle_graph(3)
    with pytest.raises(GraphError):
        LinearForestWitness(((0, 1), (1, 2), (0, 2))).validate(c)
    s = star(3)
    with pytest.raises(GraphError):
        LinearForestWitness(((0, 1), (0, 2), (0, 3))).validate(s)


def test_empty_inputs():
    g = Graph(0)
    assert max_matching(g) == (0, MatchingWitness(()))
    assert max_linear_forest(g)[0] == 0
    assert min_path_cover(g) == []
