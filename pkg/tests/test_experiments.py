import json

import pytest

from dpgraph import complete_graph, cycle_graph, lexicographic_product, parse_graph6
from dpgraph.experiments import (ConfigError, ExperimentConfig, analyze, conj1_threshold,
                                 proven_threshold, scan_census, scan_conjecture1,
                                 scan_conjecture2, scan_products, scan_random_dp_fraction,
                                 witness_dot)
from dpgraph.generators import connected_erdos_renyi
from dpgraph.graph import DisconnectedGraphError, empty_graph
from dpgraph.structure import find_long_induced_cycle, min_degree


@pytest.mark.parametrize("kwargs", [dict(samples=0), dict(p=1.2), dict(n_min=4, n_max=3),
                                    dict(source="cosmic"), dict(n_max=9)])
def test_config_validation(kwargs):
    with pytest.raises(ConfigError):
        ExperimentConfig(**kwargs)


def test_thresholds():
    assert [conj1_threshold(n) for n in (4, 5, 6, 7)] == [3, 3, 4, 4]
    assert [proven_threshold(n) for n in (3, 4, 5, 6, 7)] == [1, 2, 3, 3, 4]


def test_conj1_small_exhaustive():
    r = scan_conjecture1(ExperimentConfig(n_min=1, n_max=5))
    assert not [c for c in r.counterexamples if c["claim"] == "proven"]
    for row in r.rows:
        g = parse_graph6(row["graph6"])
        assert min_degree(g) >= min(conj1_threshold(g.n), proven_threshold(g.n))
        assert row["bands"]


def test_conj1_random_source():
    r = scan_conjecture1(ExperimentConfig(n_min=6, n_max=8, samples=20, p=0.8, source="random"))
    assert r.rows
    assert all(row["min_degree"] >= min(conj1_threshold(row["n"]), proven_threshold(row["n"]))
               for row in r.rows)


def test_conj2_chordal_corpus():
    r = scan_conjecture2(ExperimentConfig(n_min=3, n_max=9, samples=30, source="chordal"))
    assert r.counterexamples == []
    assert all(row["chordal"] for row in r.rows)


def test_conj2_exhaustive_includes_c4_graphs():
    r = scan_conjecture2(ExperimentConfig(n_min=1, n_max=5))
    assert r.aggregates["4"]["non_chordal"] == 3  # the three labelled C4s
    for row in r.rows:
        assert find_long_induced_cycle(parse_graph6(row["graph6"]), 5) is None


def test_random_tiny_orders_all_dp():
    for source in ("enumerate", "random"):
        r = scan_random_dp_fraction(ExperimentConfig(n_min=1, n_max=3, samples=50, source=source))
        assert all(r.aggregates[str(n)]["dp_fraction"] == 1.0 for n in (1, 2, 3))
        assert "diameter2_fraction" in r.aggregates["3"]


def test_random_deterministic():
    cfg = ExperimentConfig(n_min=5, n_max=8, samples=25, seed=42, source="random")
    assert scan_random_dp_fraction(cfg).csv_text() == scan_random_dp_fraction(cfg).csv_text()
    other = ExperimentConfig(n_min=5, n_max=8, samples=25, seed=43, source="random")
    assert scan_random_dp_fraction(cfg).csv_text() != scan_random_dp_fraction(other).csv_text()


def test_products_small():
    r = scan_products(ExperimentConfig(samples=40, seed=5, source="random"))
    assert r.counterexamples == []
    assert r.aggregates["lexicographic"]["pairs"] == 40
    assert all(row["n"] <= 12 for row in r.rows)


def test_k1_is_lexicographic_identity():
    h, _ = connected_erdos_renyi(5, 0.5, seed=3)
    assert lexicographic_product(complete_graph(1), h) == h


def test_products_cap():
    with pytest.raises(ConfigError):
        scan_products(ExperimentConfig(source="random"), g_max=13)


def test_census_rows_reverify():
    r = scan_census(ExperimentConfig(n_min=1, n_max=5))
    assert r.counterexamples == []
    assert r.aggregates["5"]["graphs"] == 728
    for row in r.rows:
        if row["dp"] is False or row["thm3_applies"]:
            rep = analyze(parse_graph6(row["graph6"]))
            assert rep["dp"]["is_dp"] is row["dp"]
            assert rep["theorems"]["thm3_applies"] is row["thm3_applies"]


def test_write_is_byte_identical(tmp_path):
    cfg = ExperimentConfig(n_min=1, n_max=5, seed=3)
    a, b = tmp_path / "a", tmp_path / "b"
    pa = scan_conjecture2(cfg).write(a)
    pb = scan_conjecture2(cfg).write(b)
    for x, y in zip(pa, pb):
        assert x.read_bytes() == y.read_bytes()
    summary = json.loads(pa[1].read_text())
    assert summary["scan"] == "conj2" and summary["counterexamples"] == []


def test_analyze_fig1(fig1):
    rep = analyze(fig1)
    assert rep["dp"]["is_dp"] is True
    assert rep["chordal"] is False
    assert rep["theorems"]["thm3_applies"] is False
    assert rep["simplicial"] == [5]
    assert rep["articulation"] == [4]
    assert rep["sequential_ordering"] is None
    json.dumps(rep)


def test_analyze_c5_and_k1():
    rep = analyze(cycle_graph(5))
    assert rep["dp"]["is_dp"] is False and rep["theorems"]["thm3_applies"] is True
    rep = analyze(complete_graph(1))
    assert rep["dp"]["is_dp"] is True and rep["girth"] is None


def test_analyze_disconnected():
    with pytest.raises(DisconnectedGraphError):
        analyze(empty_graph(3))


def test_witness_dot(fig1):
    dot = witness_dot(fig1)
    assert sum("style=filled" in line for line in dot.splitlines()) == 5
