"""The compiled kernels must agree with the pure-Python fallback bit for bit."""
import pytest

from conftest import random_graph
from turanlf import _pykernels as py
from turanlf._backend import BACKEND

cy = pytest.importorskip("turanlf._ckernels")


def test_backend_selected():
    assert BACKEND in ("cython", "python")


def test_counting_kernels_agree(rng):
    for _ in range(1500):
        g = random_graph(rng, rng.randint(0, 14))
        for r in range(1, 7):
            assert cy.count_cliques(g.adj, g.n, r) == py.count_cliques(g.adj, g.n, r)
            assert cy.has_clique(g.adj, g.n, r) == py.has_clique(g.adj, g.n, r)
        assert cy.matching_number(g.adj, g.n, 0) == py.matching_number(g.adj, g.n, 0)
        assert cy.linear_forest_number(g.adj, g.n, 0) == py.linear_forest_number(g.adj, g.n, 0)
        for s in range(1, 6):
            a = cy.linear_forest_number(g.adj, g.n, s)
            assert (a >= s) == (py.linear_forest_number(g.adj, g.n, s) >= s)


def test_canon_agrees(rng):
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 16))
        lc, gc, oc = cy.canon(g.adj, g.n)
        lp, gp, op = py.canon(g.adj, g.n)
        assert list(lc) == list(lp)
        assert list(oc) == list(op)
        assert [list(x) for x in gc] == [list(x) for x in gp]


def test_augment_agrees(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 7))
        _, gens, _ = py.canon(g.adj, g.n)
        for args in [(0, 0, 0), (4, 0, 0), (0, 2, 0), (0, 0, 4), (4, 2, 5)]:
            a = cy.augment(g.adj, g.n, gens, *args, True)
            b = py.augment(g.adj, g.n, gens, *args, True)
            assert [tuple(x[0]) for x in a] == [tuple(x[0]) for x in b]
            assert [[list(p) for p in x[1]] for x in a] == [[list(p) for p in x[1]] for x in b]


def test_pure_python_backend_end_to_end():
    import os
    import subprocess
    import sys

    code = ("from turanlf._backend import BACKEND\n"
            "from turanlf.search import level_counts, verify_theorem\n"
            "assert BACKEND == 'python', BACKEND\n"
            "print(level_counts(7), verify_theorem('thm1.5', s_values=[1, 2], r_values=[2]).passed)\n")
    env = dict(os.environ, TURANLF_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "[1, 2, 4, 11, 34, 156, 1044] True"
