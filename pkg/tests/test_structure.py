from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given

import oracles
from conftest import connected_graphs
from dpgraph import (complete_graph, cycle_graph, has_long_induced_cycle, is_chordal,
                     is_isometric_subgraph, is_simplicial, maximum_cardinality_search,
                     min_degree, path_graph, verify_elimination_ordering)
from dpgraph.generators import enumerate_labeled_connected, random_tree
from dpgraph.graph import GraphError
from dpgraph.structure import find_long_induced_cycle


def test_simplicial_examples(c5, fig1):
    assert is_simplicial(fig1, 5)
    assert not any(is_simplicial(c5, v) for v in range(5))
    assert all(is_simplicial(complete_graph(5), v) for v in range(5))


def test_mcs_on_tree_and_k4():
    t = random_tree(10, seed=1)
    assert verify_elimination_ordering(t, maximum_cardinality_search(t))
    k4 = complete_graph(4)
    assert all(verify_elimination_ordering(k4, p) for p in permutations(range(4)))


def test_mcs_on_c4_fails():
    c4 = cycle_graph(4)
    assert not verify_elimination_ordering(c4, maximum_cardinality_search(c4))


def test_orderings_of_c5_all_fail(c5):
    first = Counter()
    for p in permutations(range(5)):
        check = verify_elimination_ordering(c5, p)
        assert not check.valid
        first[check.failed_at] += 1
        # the last vertex always has two nonadjacent earlier neighbours
        assert not _is_clique_in(c5, c5.adj[p[4]])
    assert first == {3: 20, 4: 60, 5: 40}


def test_verify_k1_and_permutation_check():
    assert verify_elimination_ordering(complete_graph(1), [0])
    with pytest.raises(GraphError):
        verify_elimination_ordering(path_graph(3), [0, 0, 1])


def test_leaf_first_tree_order_reversed():
    t = random_tree(8, seed=5)
    # a random recursive tree grows by attaching leaves, so its labels are a prefix order
    assert verify_elimination_ordering(t, range(8))


def test_chordal_examples(fig1):
    assert not is_chordal(cycle_graph(4))
    assert is_chordal(random_tree(12, seed=3))
    assert not is_chordal(fig1)


def test_chordal_vs_oracle_exhaustive():
    for n in range(1, 7):
        for g in enumerate_labeled_connected(n):
            assert is_chordal(g) == oracles.chordal(g), g.adj


def test_chordal_vs_long_induced_cycle_exhaustive():
    for n in range(1, 7):
        for g in enumerate_labeled_connected(n):
            hole = find_long_induced_cycle(g, 4)
            assert is_chordal(g) == (hole is None)
            assert (hole is None) == (not oracles.induced_cycles(g, 4))


def test_mcs_ordering_valid_on_chordal():
    for n in range(1, 7):
        for g in enumerate_labeled_connected(n):
            if is_chordal(g):
                assert verify_elimination_ordering(g, maximum_cardinality_search(g))


@given(connected_graphs(max_n=9))
def test_induced_cycle_witness_is_chordless(g):
    for k in (4, 5, 6):
        found, cyc = has_long_induced_cycle(g, k)
        assert found == bool(oracles.induced_cycles(g, k))
        if found:
            assert len(cyc) >= k
            s = set(cyc)
            for i, v in enumerate(cyc):
                nb = {u for u in s if g.adj[v] >> u & 1}
                assert nb == {cyc[i - 1], cyc[(i + 1) % len(cyc)]}


def test_long_induced_cycle_examples(c5, petersen):
    found, cyc = has_long_induced_cycle(c5, 5)
    assert found and sorted(cyc) == [0, 1, 2, 3, 4]
    assert not has_long_induced_cycle(random_tree(9, seed=2), 4)[0]
    assert has_long_induced_cycle(petersen, 5)[0]
    with pytest.raises(GraphError):
        has_long_induced_cycle(c5, 3)


def test_min_degree(c5, fig1):
    assert min_degree(c5) == 2
    assert min_degree(complete_graph(6)) == 5
    assert min_degree(fig1) == 1


def test_simplicial_deletion_is_isometric():
    for n in range(2, 7):
        for g in enumerate_labeled_connected(n):
            for v in range(n):
                if is_simplicial(g, v):
                    assert is_isometric_subgraph(g, [u for u in range(n) if u != v])


def _is_clique_in(g, mask):
    vs = [v for v in range(g.n) if mask >> v & 1]
    return all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])
