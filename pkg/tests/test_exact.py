import random

import pytest
from hypothesis import given, settings

from oracles import brute_pc, connected_graphs, is_pp_coloring, k_coloring_exists
from properconn.classes import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_connected_graph,
    random_tree,
    spider,
    star_graph,
)
from properconn.coloring import is_proper_path_coloring
from properconn.errors import DisconnectedGraphError, GraphError, SearchBudgetExceeded
from properconn.exact import (
    edge_cap,
    pc_decision,
    pc_exact,
    spanning_tree_upper_bound,
    tree_edge_coloring,
    upper_bound_coloring,
)
from properconn.graph import Graph, is_spanning_connected_subgraph, is_tree, max_degree


def test_decision_examples():
    k4 = complete_graph(4)
    assert pc_decision(k4, 1).colors == (1,) * 6
    assert pc_decision(star_graph(3), 2) is None
    c5 = cycle_graph(5)
    found = pc_decision(c5, 2)
    assert found is not None and is_proper_path_coloring(c5, found)


def test_decision_errors():
    with pytest.raises(DisconnectedGraphError):
        pc_decision(Graph(4, [(0, 1), (2, 3)]), 2)
    with pytest.raises(GraphError):
        pc_decision(path_graph(3), 0)
    with pytest.raises(SearchBudgetExceeded) as exc:
        pc_decision(petersen_graph(), 2, max_nodes=10)
    assert exc.value.nodes_explored > 10


def test_exact_examples():
    assert pc_exact(path_graph(6)).value == 2
    assert pc_exact(spider(3, 2)).value == 3
    assert pc_exact(complete_graph(5)).value == 1
    with pytest.raises(GraphError):
        pc_exact(Graph(1))


def test_star_needs_all_colors():
    for m in range(2, 6):
        res = pc_exact(star_graph(m))
        assert res.value == m and res.exhausted_below


def test_spanning_tree_bound_examples():
    assert spanning_tree_upper_bound(path_graph(5))[1] == 2
    tree, bound = spanning_tree_upper_bound(cycle_graph(6))
    assert bound == 2 and is_tree(tree)
    assert spanning_tree_upper_bound(star_graph(4))[1] == 4


def test_edge_caps_shrink():
    assert edge_cap(2) == edge_cap(3) == 18
    assert edge_cap(4) > edge_cap(5) > edge_cap(6)


def test_certificate_is_first_in_canonical_order():
    a = pc_exact(cycle_graph(6)).certificate
    b = pc_exact(cycle_graph(6)).certificate
    assert a == b


@settings(max_examples=40, deadline=None)
@given(connected_graphs(2, 5, max_extra=4))
def test_exact_matches_unrestricted_enumeration(g):
    if g.m > 8:
        return
    res = pc_exact(g)
    assert res.value == brute_pc(g)
    assert is_pp_coloring(g, res.certificate.colors)
    assert res.certificate.num_colors == res.value


@settings(max_examples=30, deadline=None)
@given(connected_graphs(2, 6, max_extra=3))
def test_canonical_search_agrees_on_existence(g):
    if g.m > 8:
        return
    for k in (1, 2, 3):
        assert (pc_decision(g, k) is not None) == k_coloring_exists(g, k)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(2, 8))
def test_certificate_soundness(g):
    res = pc_exact(g)
    assert is_proper_path_coloring(g, res.certificate)
    assert res.certificate.num_colors == res.value
    assert (res.value == 1) == (g.m == g.n * (g.n - 1) // 2)
    ub = upper_bound_coloring(g)
    assert is_proper_path_coloring(g, ub) and ub.num_colors >= res.value


def test_trees_reach_max_degree():
    rng = random.Random(11)
    for _ in range(40):
        t = random_tree(rng, rng.randint(2, 9))
        res = pc_exact(t)
        assert res.value == max_degree(t)
        colors = tree_edge_coloring(t)
        assert len(set(colors)) == max_degree(t)


def test_monotone_under_spanning_subgraphs():
    rng = random.Random(5)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(3, 7))
        tree, _ = spanning_tree_upper_bound(g)
        assert is_spanning_connected_subgraph(g, tree)
        assert pc_exact(g).value <= pc_exact(tree).value
