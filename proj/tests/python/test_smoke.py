import pytest

import regulab


def test_catalog():
    names = regulab.catalog_names()
    assert "G_0" in names and "G_10" in names
    g = regulab.catalog_graph("G_10")
    assert len(g) == 7
    assert len(g.edges) == 9


def test_regularity_of_five_cycle_powers():
    c5 = regulab.catalog_graph("C_5")
    assert regulab.regularity(c5) == 3
    assert regulab.regularity(c5, power=2) == 4
    assert regulab.regularity(c5, characteristic=2) == 3


def test_betti_table():
    table = regulab.betti_table(regulab.catalog_graph("C_5"))
    assert table == {(0, 2): 5, (1, 3): 5, (2, 5): 1}
    assert regulab.ideal_regularity("x*y") == 2
    assert regulab.ideal_betti_table("x*y") == {(0, 2): 1}


def test_graph_round_trip():
    g = regulab.Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert g.adjacent("a", "b") and not g.adjacent("a", "c")
    assert regulab.Graph.parse(g.to_text()) == g
    assert regulab.Graph.parse(g.to_json()) == g
    assert regulab.regularity(g) == 2


def test_colon_graph():
    c5 = regulab.catalog_graph("C_5")
    col = regulab.colon_graph(c5, "u1u2")
    assert len(col.edges) == 6
    assert col.adjacent("u3", "u5")


def test_classify():
    g = regulab.catalog_graph("G_10").multiply({"y": 2})
    r = regulab.classify(g)
    assert r["base"] == "G_10"
    assert r["multiplicities"]["y"] == 2


def test_errors():
    with pytest.raises(regulab.RegulabError):
        regulab.catalog_graph("no-such-graph")
    with pytest.raises(ValueError):
        regulab.Graph(["a"], [("a", "a")])
    with pytest.raises(ValueError):
        regulab.run_suite("no-such-suite")


def test_run_suite():
    report = regulab.run_suite("froberg-n5")
    assert report["suite"] == "froberg-n5"
    assert report["records"]
    assert all(r["pass"] for r in report["records"])
