import math

import pytest

import sparselab as sl


def test_solve_and_validate():
    petersen = sl.graph("petersen")
    best = sl.solve("is", petersen)
    assert best["value"] == 4
    assert sl.validate("is", petersen, best)["feasible"]
    assert sl.solve("vc", petersen)["value"] == 6
    bad = dict(best, value=5)
    assert not sl.validate("is", petersen, bad)["feasible"]


def test_text_instances_round_trip():
    text = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
    g = sl.parse_instance(text)
    assert g["n"] == 3 and len(g["edges"]) == 3
    assert sl.parse_instance(sl.format_instance(g, "dimacs-edge")) == g
    assert sl.solve("vc", text)["value"] == 2
    with pytest.raises(sl.ParseError):
        sl.parse_instance("p edge 2 1\ne 1 1\n")


def test_reduction_chain_maps_back():
    red = sl.reduction("vc:ds,ds:setcover")
    k3 = sl.graph("k3")
    target = red.forward(k3)
    assert target["type"] == "setsystem"
    assert len(target["sets"]) == 9
    cover = sl.solve("setcover", target)
    back = red.backward(cover)
    assert back["value"] == 2
    assert sl.validate("vc", k3, back)["feasible"]
    assert "vc:ds" in sl.available_reductions()
    with pytest.raises(ValueError):
        sl.reduction("vc:ds,is:max2sat")


def test_max2sat_target():
    red = sl.reduction("is:max2sat")
    formula = red.forward(sl.graph("k3"))
    assert len(formula["clauses"]) == 6
    assert sl.solve("max2sat", formula)["value"] == 4


def test_sparsify_leaves():
    leaves = sl.sparsify(sl.graph("star5"), mode="is", policy="const:2")
    assert len(leaves) == 2
    assert leaves[0]["path"] == "1"
    assert sl.sparsify(sl.gnp(14, 0.5, seed=3), policy="const:2", limit=3).__len__() == 3


def test_analysis():
    assert math.isclose(sl.branching_root(2), (1 + 5 ** 0.5) / 2, abs_tol=1e-12)
    assert sl.g_of_lambda(1.18) == 11
    assert sl.leaf_edge_bound(10, 1.18) == 50
    mus = [row["mu"] for row in sl.reference_tables()["mu"]]
    assert mus == pytest.approx([1.0073, 1.027, 1.038], abs=1e-3)


def test_param_excavation_and_budget():
    result = sl.param_is_excavation(sl.graph("petersen"))
    assert result["value"] == 4
    assert result["enumerated_subsets"] <= 2 ** 4
    with pytest.raises(sl.BudgetExceeded):
        sl.solve("ds", sl.gnp(40, 0.1, seed=1), budget_nodes=5)


def test_verify_campaign():
    report = sl.verify({"count": 4, "max_order": 6, "suites": ["oracles", "analysis"]})
    assert all(s["failures"] == 0 for s in report["suites"])
