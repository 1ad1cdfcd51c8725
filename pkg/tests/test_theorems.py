import json
import random

from dpgraph import (complete_graph, cycle_graph, cross_validate_corollary1,
                     cross_validate_lemma1, cross_validate_theorem2, cross_validate_theorem3,
                     from_edge_list, is_dp, is_isometric_subgraph, lemma1_applicable,
                     star_graph, theorem2_applicable, theorem3_predicts_not_dp)
from dpgraph.generators import (connected_erdos_renyi, enumerate_labeled_connected,
                                random_chordal, random_tree)
from dpgraph.theorems import DpCache, Violation, theorem3_applies

C4_WITH_APEX = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)])


def test_lemma1_examples(fig1):
    assert lemma1_applicable(fig1, 5)
    assert not any(lemma1_applicable(cycle_graph(4), v) for v in range(4))
    assert all(lemma1_applicable(complete_graph(4), v) for v in range(4))


def test_theorem2_examples(fig1):
    assert theorem2_applicable(fig1, 5).literal and theorem2_applicable(fig1, 5).proof
    check = theorem2_applicable(C4_WITH_APEX, 4)
    assert check.literal and check.proof
    star = theorem2_applicable(star_graph(3), 0)
    assert not star.literal and not star.proof


def test_theorem2_levels_coincide(connected_upto5):
    # v is itself a common neighbour of u, w, so "on a common 4-cycle" and
    # "another common neighbour" are the same condition
    for g in connected_upto5:
        for v in range(g.n):
            c = theorem2_applicable(g, v)
            assert c.literal == c.proof


def test_theorem3_examples(c5, petersen, fig1):
    assert theorem3_predicts_not_dp(c5).thm3_applies
    assert not theorem3_predicts_not_dp(random_tree(8, seed=1)).thm3_applies
    assert theorem3_predicts_not_dp(petersen).thm3_applies
    d = theorem3_predicts_not_dp(fig1)
    assert not d.thm3_applies and is_dp(fig1).is_dp
    assert d.girth == 5 and d.articulation.tolist() == [4]
    assert d.in_cycle == (True,) * 5 + (False,)
    assert d.simplicial.tolist() == [5] and not d.chordal
    json.dumps(d.to_dict())


def test_diagnostics_invariant(connected_upto5):
    for g in connected_upto5:
        d = theorem3_predicts_not_dp(g)
        expect = d.girth >= 5 and all(v in d.articulation or d.in_cycle[v] for v in range(g.n))
        assert d.thm3_applies == expect
        if d.thm3_applies:
            assert is_dp(g).is_dp is False


def test_lemma1_key_claim(connected_upto5):
    for g in connected_upto5:
        for v in range(g.n):
            if g.n > 1 and lemma1_applicable(g, v):
                assert is_isometric_subgraph(g, [u for u in range(g.n) if u != v])


def test_cross_validations_small(connected_upto5):
    dp = DpCache()
    assert cross_validate_lemma1(connected_upto5, dp) == []
    assert cross_validate_theorem2(connected_upto5, dp, level="both") == []
    assert cross_validate_theorem3(connected_upto5) == []
    assert cross_validate_corollary1(connected_upto5, dp) == []


def test_lemma1_on_fig1_only(fig1):
    # the hypothesis fails at the pendant (G - v = C5 is not dp); nothing to violate
    assert cross_validate_lemma1([fig1]) == []


def test_chordal_corpus():
    corpus = [random_chordal(n, seed) for n in range(1, 11) for seed in range(10)]
    assert cross_validate_lemma1(corpus) == []
    assert cross_validate_corollary1(corpus) == []


def test_trees_corollary():
    corpus = [random_tree(n, seed) for n in range(1, 11) for seed in range(10)]
    assert cross_validate_corollary1(corpus) == []


def _apex_over_c4(rng):
    while True:
        h, _ = connected_erdos_renyi(rng.randint(4, 7), rng.choice((0.4, 0.6)), rng)
        quads = [(a, b, c, d) for a in range(h.n) for b in h.neighbors(a)
                 for c in h.neighbors(b) if c != a and not h.has_edge(a, c)
                 for d in h.neighbors(c) if d not in (a, b) and h.has_edge(d, a)]
        if quads:
            a, b, c, d = rng.choice(quads)
            extra = [x for x in (b, d) if rng.random() < 0.5]
            return h.add_vertex([a, c] + extra)


def test_theorem2_apex_family():
    rng = random.Random(8)
    corpus = [_apex_over_c4(rng) for _ in range(150)]
    assert all(g.n <= 8 for g in corpus)
    assert any(theorem2_applicable(g, g.n - 1).proof and not lemma1_applicable(g, g.n - 1)
               for g in corpus)
    assert cross_validate_theorem2(corpus, level="both") == []


def test_theorem3_girth5_n6():
    from dpgraph.generators import enumerate_girth_at_least
    corpus = [g for n in range(1, 7) for g in enumerate_girth_at_least(n, 5)]
    assert cross_validate_theorem3(corpus) == []
    assert any(theorem3_applies(g) for g in corpus)


def test_violation_serialisation():
    v = Violation("DQc", "h", "e", "g", vertex=2)
    assert json.loads(json.dumps(v.to_dict())) == {
        "graph6": "DQc", "hypothesis": "h", "expected": "e", "got": "g", "vertex": 2}
    assert "vertex" not in Violation("DQc", "h", "e", "g").to_dict()


def test_corpora_agree_with_exhaustive_dp(connected_upto5):
    # a theorem predicate never contradicts the engine on the n <= 5 corpus
    for g in connected_upto5:
        assert not (theorem3_applies(g) and is_dp(g).is_dp)
