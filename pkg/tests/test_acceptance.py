"""Acceptance criteria, one test each, each printing a single PASS/FAIL line.

Run with ``pytest -m acceptance -v`` to see the lines next to the verdicts.
"""
import random
import time

import pytest

from conftest import brute_cliques, brute_linear_forest, brute_matching, random_graph
from turanlf.formulas import ex_clique_linear_forest
from turanlf.freeness import count_cliques, is_clique_free, is_linear_forest_free, max_linear_forest, max_matching
from turanlf.graph import extremal_construction
from turanlf.search import GRAPH_COUNTS, PROVEN, level_counts, lemma_fuzz, replay, verify_theorem

pytestmark = pytest.mark.acceptance


def report(capsys, number: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")


def _verify(capsys, number, theorem, **grid):
    t0 = time.perf_counter()
    rep = verify_theorem(theorem, cap=9, **grid)
    bad = [f"(n={r.n}, r={r.r}, s={r.s}{'' if r.k is None else f', k={r.k}'}): "
           f"formula {r.formula} vs exhaustive {r.exhaustive}, e.g. {r.witnesses[0]}" for r in rep.failures]
    detail = f"{theorem}, {len(rep.rows)} rows, {time.perf_counter() - t0:.1f}s"
    if bad:
        detail += "; disagreements " + "; ".join(bad)
    report(capsys, number, rep.passed, detail)
    assert rep.rows
    assert rep.passed, detail


def test_criterion_1_clique_linear_forest_edges(capsys):
    _verify(capsys, 1, "thm1.5", s_values=[1, 2, 3, 4], r_values=[2, 3, 4])


def test_criterion_2_clique_matching_edges(capsys):
    _verify(capsys, 2, "thm1.1", s_values=[1, 2, 3], r_values=[2, 3])


def test_criterion_3_cliques_matching(capsys):
    _verify(capsys, 3, "thm1.2", s_values=[1, 2], r_values=[2, 3])


def test_criterion_4_cliques_linear_forest(capsys):
    _verify(capsys, 4, "thm1.3", s_values=[2, 3, 4], r_values=[2, 3])


def test_criterion_5_cliques_bounded_clique_matching(capsys):
    _verify(capsys, 5, "thm1.4", s_values=[1, 2], r_values=[3], k_values=[3, 4])


def test_criterion_6_construction_certification(capsys):
    t0 = time.perf_counter()
    checked, bad = 0, []
    for s in range(1, 11):
        for n in range(2 * s + 1, 41):
            for r in range(2, n + 1):
                graphs = extremal_construction(n, r, s)
                free = all(g.n == n and is_clique_free(g, r + 1) and is_linear_forest_free(g, s) for g in graphs)
                best = max(g.edge_count for g in graphs)
                checked += 1
                if not free or best != ex_clique_linear_forest(n, r, s):
                    bad.append((n, r, s))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed <= 60
    report(capsys, 6, ok, f"{checked} (n, r, s) triples, {len(bad)} bad, {elapsed:.1f}s")
    assert not bad, bad[:5]
    assert elapsed <= 60


def test_criterion_7_lemma_fuzz(capsys):
    t0 = time.perf_counter()
    summary = []
    ok = True
    for lemma in ("lemma2.1", "lemma2.4", "shift-edges", "shift-matching", "shift-cliques"):
        assert lemma in PROVEN
        rep = lemma_fuzz(lemma, 10_000, 9, seed=0)
        summary.append(f"{lemma} {rep.violation_count}")
        ok &= rep.violation_count == 0
    for lemma in ("lemma2.2", "lemma2.5"):
        rep = lemma_fuzz(lemma, 10_000, 9, seed=0)
        assert all(replay(lemma, v) for v in rep.violations)
        summary.append(f"{lemma} {rep.violation_count} (finding)")
    report(capsys, 7, ok, "violations: " + ", ".join(summary) + f"; {time.perf_counter() - t0:.1f}s")
    assert ok


def test_criterion_8_enumeration_counts(capsys):
    t0 = time.perf_counter()
    counts = level_counts(9)
    ok = counts == [1, 2, 4, 11, 34, 156, 1044, 12346, 274668] == list(GRAPH_COUNTS[1:10])
    report(capsys, 8, ok, f"counts {counts}, {time.perf_counter() - t0:.1f}s")
    assert ok


def test_criterion_9_oracle_equivalence(capsys):
    rng = random.Random(9)
    mism = {"cliques": 0, "matching": 0, "linear_forest": 0}
    for _ in range(2000):
        g = random_graph(rng, rng.randint(1, 8))
        if any(count_cliques(g, r) != brute_cliques(g, r) for r in range(1, g.n + 1)):
            mism["cliques"] += 1
        if max_matching(g)[0] != brute_matching(g):
            mism["matching"] += 1
        if max_linear_forest(g)[0] != brute_linear_forest(g):
            mism["linear_forest"] += 1
    ok = not any(mism.values())
    report(capsys, 9, ok, f"2000 graphs, mismatches {mism}")
    assert ok
