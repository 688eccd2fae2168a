import pytest

from turanlf import formulas
from turanlf.graph import complete_graph, decode_graph6, empty_graph, join
from turanlf.search import (
    CapExceeded,
    ConstraintSpec,
    Objective,
    are_isomorphic,
    enumerate_graphs,
    extremal_profile,
    extremal_search,
    search_setup,
    verify_theorem,
)


def test_objective_parse():
    assert Objective.parse("edges") == Objective("edges")
    assert Objective.parse("cliques(3)") == Objective("cliques", 3)
    assert str(Objective.parse(" cliques(4) ")) == "cliques(4)"
    for bad in ["triangles", "cliques(0)", "cliques()"]:
        with pytest.raises(ValueError):
            Objective.parse(bad)


def test_search_examples():
    rec = extremal_search(5, "edges", ConstraintSpec(clique_bound=3, linforest_bound=2))
    assert rec.value == 1
    rec = extremal_search(7, "edges", ConstraintSpec(clique_bound=3, linforest_bound=3))
    assert rec.value == 6
    assert len(rec.witnesses) == 1
    assert are_isomorphic(decode_graph6(rec.witnesses[0]), join(complete_graph(1), empty_graph(6)))
    rec = extremal_search(9, "cliques(3)", ConstraintSpec(clique_bound=4, matching_bound=2))
    assert rec.value == 7
    assert any(are_isomorphic(decode_graph6(w), join(complete_graph(2), empty_graph(7))) for w in rec.witnesses)


def test_witnesses_satisfy_constraints_and_rescan():
    for cons, obj in [(ConstraintSpec(clique_bound=4, linforest_bound=4), Objective("edges")),
                      (ConstraintSpec(matching_bound=2), Objective("cliques", 3)),
                      (ConstraintSpec(linforest_bound=3), Objective("cliques", 2))]:
        prof = extremal_profile(7, obj, cons)
        for n in range(1, 8):
            rec = prof[n]
            assert rec.witness_count == len(rec.witnesses) > 0
            for w in rec.witnesses:
                g = decode_graph6(w)
                assert cons.allows(g)
                assert obj.value(g.adj, g.n) == rec.value
            # independent re-scan over the unconstrained enumeration
            best = max(obj.value(g.adj, n) for g in enumerate_graphs(n) if cons.allows(g))
            assert best == rec.value
            hits = sum(1 for g in enumerate_graphs(n) if cons.allows(g) and obj.value(g.adj, n) == best)
            assert hits == rec.witness_count


def test_parallel_matches_serial():
    cons = ConstraintSpec(clique_bound=4, linforest_bound=5)
    a = extremal_profile(9, "edges", cons, workers=1)
    b = extremal_profile(9, "edges", cons, workers=4)
    for n in a:
        assert a[n].to_dict() == b[n].to_dict()


def test_record_schema():
    rec = extremal_search(6, "edges", ConstraintSpec(clique_bound=3))
    d = rec.to_dict()
    assert set(d) == {"n", "params", "objective", "constraints", "value", "witnesses", "witness_count", "method"}
    assert d["method"] == "exhaustive" and d["value"] == 9
    assert d["constraints"] == {"clique_bound": 3, "matching_bound": None, "linforest_bound": None}


def test_no_feasible_graph():
    assert extremal_search(4, "edges", ConstraintSpec(clique_bound=1)).value is None


def test_search_cap():
    with pytest.raises(CapExceeded):
        extremal_search(11, "edges", ConstraintSpec(clique_bound=3))


def test_search_setup_families():
    obj, cons = search_setup("thm1.4", 3, 2, 4)
    assert obj == Objective("cliques", 3) and cons == ConstraintSpec(clique_bound=5, matching_bound=2)
    with pytest.raises(ValueError):
        search_setup("thm1.4", 3, 2)


@pytest.mark.parametrize("theorem", ["thm1.1", "thm1.2", "thm1.3", "thm1.4"])
def test_verify_small_grid(theorem):
    rep = verify_theorem(theorem, cap=8)
    assert rep.passed and rep.rows
    assert all(row.agree for row in rep.rows)


def test_verify_linear_forest_clique_rows():
    rep = verify_theorem("thm1.3", s_values=[3], r_values=[2])
    assert [row.n for row in rep.rows] == list(range(4, 10))
    assert rep.passed


def test_verify_probe_rows_never_fail():
    rep = verify_theorem("thm1.5", probe_low_n=True)
    assert rep.passed
    assert all(row.probe for row in rep.rows)
    assert all(row.s + 1 <= row.n <= 2 * row.s for row in rep.rows)
    assert rep.flagged  # the formula is not claimed here, and it does differ
    assert "PROBE-DIFF" in rep.table()


def test_verify_rejects_out_of_window():
    with pytest.raises(formulas.ParameterWindowError):
        verify_theorem("thm1.5", s_values=[3], r_values=[2], n_values=[5, 6])
    with pytest.raises(CapExceeded):
        verify_theorem("thm1.5", cap=11)


def test_verify_report_serialises():
    rep = verify_theorem("thm1.5", s_values=[1, 2], r_values=[2, 3])
    d = rep.to_dict()
    assert d["passed"] is True and d["theorem"] == "thm1.5"
    assert {"n", "r", "s", "k", "formula", "exhaustive", "agree", "probe", "witnesses"} <= set(d["rows"][0])
