import random
from itertools import combinations
from fractions import Fraction

import pytest
from hypothesis import given, settings

from oracles import brute_kind, brute_min_size, connected_graphs
from properconn.classes import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_chain,
    star_graph,
)
from properconn.domination import (
    TWO_WAY,
    TWO_WAY_TWO_STEP,
    all_minimum_sets,
    classify,
    greedy_two_step_dominating,
    min_connected_two_way_dominating,
    min_connected_two_way_two_step_dominating,
    size_bound,
)
from properconn.errors import GraphError, SearchBudgetExceeded
from properconn.graph import Graph, k_step_neighborhood


def test_classify_examples():
    p5 = path_graph(5)
    cert = classify(p5, {2})
    assert cert.k_step_reach == 2
    assert not cert.is_two_way and not cert.is_two_way_two_step
    full = classify(p5, range(5))
    assert full.k_step_reach == 0
    assert full.is_dominating and full.is_two_way and full.is_two_way_two_step
    assert full.induced_connected and full.size == 5
    with pytest.raises(GraphError):
        classify(p5, [])


def test_chain_graph_single_vertex_set():
    rng = random.Random(2)
    for _ in range(20):
        g, spec = random_chain(rng, rng.randint(2, 6), rng.randint(2, 6))
        b1 = spec.b1
        cert = classify(g, {b1})
        assert cert.certifies(TWO_WAY_TWO_STEP)
        assert k_step_neighborhood(g, {b1}, 1) == set(spec.a)
        assert k_step_neighborhood(g, {b1}, 2) == set(spec.b) - {b1}
        assert min_connected_two_way_two_step_dominating(g).size == 1


def test_two_way_examples():
    assert min_connected_two_way_dominating(star_graph(4)).size == 5
    assert min_connected_two_way_dominating(complete_graph(4)).size == 1
    # no single vertex of C5 dominates, and the smallest connected dominating
    # set is a 3-vertex path; two adjacent vertices leave one vertex uncovered
    c5 = cycle_graph(5)
    cert = min_connected_two_way_dominating(c5)
    assert cert.size == 3 == brute_min_size(c5, TWO_WAY)
    assert not classify(c5, {0, 1}).is_dominating


def test_two_step_examples():
    p7 = path_graph(7)
    assert min_connected_two_way_two_step_dominating(p7).size == brute_min_size(p7, TWO_WAY_TWO_STEP)
    assert all(not classify(p7, {v}).is_two_way_two_step for v in range(7))


def test_diameter_two_single_vertex_sets():
    # K_{2,3} plus an edge in the small side: a degree-4 vertex works
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert min_connected_two_way_two_step_dominating(g).size == 1
    # girth 5 leaves every distance-2 vertex one neighbour in N(v): no single vertex
    for g in (cycle_graph(5), petersen_graph()):
        assert min_connected_two_way_two_step_dominating(g).size == 2
        assert brute_min_size(g, TWO_WAY_TWO_STEP) == 2


def test_size_bound_recorded():
    cert = min_connected_two_way_two_step_dominating(cycle_graph(6))
    assert cert.size_bound == Fraction(4) and cert.meets_size_bound


def test_greedy_examples():
    k5 = greedy_two_step_dominating(complete_graph(5))
    assert k5.size == 1 and k5.size_bound == 1
    c6 = greedy_two_step_dominating(cycle_graph(6))
    assert c6.certifies(TWO_WAY_TWO_STEP) and c6.size_bound == 4 and c6.meets_size_bound
    pet = greedy_two_step_dominating(petersen_graph())
    assert pet.certifies(TWO_WAY_TWO_STEP) and pet.size <= 5
    with pytest.raises(GraphError):
        greedy_two_step_dominating(path_graph(3))


def test_budget():
    with pytest.raises(SearchBudgetExceeded):
        min_connected_two_way_dominating(path_graph(20))
    with pytest.raises(GraphError):
        min_connected_two_way_dominating(Graph(3, [(0, 1)]))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(2, 8))
def test_minimum_sizes_match_brute_force(g):
    for kind in (TWO_WAY, TWO_WAY_TWO_STEP):
        sets = all_minimum_sets(g, kind)
        assert sets
        size = brute_min_size(g, kind)
        assert all(len(d) == size for d in sets)
        for d in sets:
            assert classify(g, d).certifies(kind)
        expected = {frozenset(d) for d in combinations(range(g.n), size) if brute_kind(g, d, kind)}
        assert set(sets) == expected


@settings(max_examples=60, deadline=None)
@given(connected_graphs(4, 9))
def test_size_bound_holds(g):
    cert = min_connected_two_way_two_step_dominating(g)
    assert cert.size <= size_bound(g)
    greedy = greedy_two_step_dominating(g)
    assert greedy.certifies(TWO_WAY_TWO_STEP)
    assert brute_kind(g, greedy.d, TWO_WAY_TWO_STEP)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(2, 8))
def test_certificate_flags_consistent(g):
    cert = classify(g, {0, g.n - 1})
    if cert.is_two_way_two_step:
        assert cert.k_step_reach <= 2
    if cert.is_two_way:
        assert cert.is_dominating
