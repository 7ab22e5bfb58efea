import random
from fractions import Fraction as F
from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_asteroidal_triple, brute_is_chain, connected_graphs, to_nx
from properconn.classes import (
    ArcRepresentation,
    ChainSpec,
    IntervalRepresentation,
    ThresholdSpec,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    dominating_cycle_circular_arc,
    dominating_path_interval,
    find_asteroidal_triple,
    hamiltonian_path,
    interval_maximal_cliques,
    is_at_free,
    is_chain_graph,
    max_weight_dominating_vertex,
    path_graph,
    petersen_graph,
    random_arc,
    random_chain,
    random_interval,
    random_threshold,
    realize,
    sharpness_family_interval,
    spider,
    star_graph,
    threshold_spec,
    tree_from_prufer,
)
from properconn.domination import classify
from properconn.errors import DisconnectedGraphError, GraphError, SearchBudgetExceeded
from properconn.graph import diameter, induced_subgraph, is_connected, is_tree, min_degree


def test_realize_intervals_closed_convention():
    # closed intervals: [0,2] and [2,4] share the point 2
    assert realize(IntervalRepresentation([(0, 2), (1, 3), (2, 4)])) == complete_graph(3)
    assert realize(IntervalRepresentation([(0, 1), (1, 3), (2, 4)])) == path_graph(3)
    with pytest.raises(GraphError):
        IntervalRepresentation([(2, 1)])


def test_realize_threshold():
    g = realize(ThresholdSpec([3, 3, 1, 1], 4))
    assert g.adj[0] == {1, 2, 3} and g.adj[1] == {0, 2, 3}
    assert not g.has_edge(2, 3)


def test_realize_chain():
    spec = ChainSpec([0, 1], [2, 3], [{2}, {2, 3}])
    g = realize(spec)
    assert g.edges == ((0, 2), (1, 2), (1, 3))
    with pytest.raises(GraphError):
        realize(ChainSpec([0, 1], [2, 3], [{2, 3}, {2}]))


def test_realize_arcs():
    # arc 0 wraps past the origin
    rep = ArcRepresentation([(F(3, 4), F(1, 8)), (F(1, 16), F(1, 4)), (F(1, 2), F(5, 8))])
    g = realize(rep)
    assert g.edges == ((0, 1),)
    full = ArcRepresentation([(0, 1), (F(1, 2), F(5, 8))])
    assert realize(full).has_edge(0, 1)


def test_is_chain_graph_examples():
    spec = is_chain_graph(complete_bipartite(2, 3))
    assert spec is not None and realize(spec) == complete_bipartite(2, 3)
    assert is_chain_graph(cycle_graph(6)) is None and not brute_is_chain(cycle_graph(6))
    spec = is_chain_graph(path_graph(4))
    assert spec is not None and brute_is_chain(path_graph(4))
    assert realize(spec) == path_graph(4)
    assert is_chain_graph(cycle_graph(5)) is None


@settings(max_examples=100, deadline=None)
@given(connected_graphs(2, 7))
def test_chain_recognition_matches_brute_force(g):
    spec = is_chain_graph(g)
    assert (spec is not None) == brute_is_chain(g)
    if spec is not None:
        assert realize(spec) == g


def test_at_free_examples():
    assert find_asteroidal_triple(spider(3, 2)) == (2, 4, 6)
    assert not is_at_free(spider(3, 2))
    assert is_at_free(complete_graph(4))
    assert is_at_free(cycle_graph(5))
    assert not is_at_free(cycle_graph(6))


@settings(max_examples=100, deadline=None)
@given(connected_graphs(3, 8))
def test_asteroidal_triples_match_brute_force(g):
    assert (find_asteroidal_triple(g) is None) == (brute_asteroidal_triple(g) is None)


def test_hamiltonian_path_examples():
    p = hamiltonian_path(cycle_graph(6))
    assert sorted(p) == list(range(6))
    assert hamiltonian_path(star_graph(3)) is None
    p = hamiltonian_path(petersen_graph())
    pet = petersen_graph()
    assert len(p) == 10 and all(pet.has_edge(a, b) for a, b in zip(p, p[1:]))
    with pytest.raises(SearchBudgetExceeded):
        hamiltonian_path(path_graph(15))


@settings(max_examples=80, deadline=None)
@given(connected_graphs(2, 8))
def test_hamiltonian_path_matches_networkx(g):
    h = to_nx(g)
    brute = any(nx.is_simple_path(h, list(p)) for p in permutations(range(g.n)))
    p = hamiltonian_path(g)
    assert (p is not None) == brute
    if p is not None:
        assert nx.is_simple_path(h, p) and len(p) == g.n


def test_dominating_path_interval_examples():
    # chain of triangles: spine 0..3, tip i+4 overlaps spine i and i+1
    spine = [(3 * i, 3 * i + 4) for i in range(4)]
    tips = [(3 * i + 3, 3 * i + 4) for i in range(3)]
    rep = IntervalRepresentation(spine + tips)
    walk = dominating_path_interval(rep)
    assert set(walk.vertices) <= {0, 1, 2, 3}
    assert classify(realize(rep), walk.vertices).is_dominating

    p5 = IntervalRepresentation([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    walk = dominating_path_interval(p5)
    assert walk.vertices == (1, 2, 3)
    assert walk.length == 2 == walk.diameter - 2 and walk.within_bound

    with pytest.raises(GraphError):
        dominating_path_interval(IntervalRepresentation([(0, 1), (1, 2)]))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(4, 12))
def test_dominating_path_is_induced_dominating_path(seed, n):
    g, rep = random_interval(random.Random(seed), n)
    walk = dominating_path_interval(rep)
    assert classify(g, walk.vertices).is_dominating
    sub, relabel = induced_subgraph(g, walk.vertices)
    assert sub.m == len(walk.vertices) - 1 and is_connected(sub)
    assert walk.within_bound


def _c8_with_satellites():
    arcs = [(F(i, 8), F(i + 1, 8) % 1) for i in range(8)]
    arcs += [(F(2 * i + 1, 16), F(2 * i + 1, 16) + F(1, 64)) for i in range(8)]
    return ArcRepresentation(arcs)


def test_dominating_cycle_examples():
    walk = dominating_cycle_circular_arc(_c8_with_satellites())
    assert sorted(walk.vertices) == list(range(8)) and walk.cyclic
    full = ArcRepresentation([(0, 1), (F(1, 4), F(1, 2)), (F(1, 2), F(3, 4))])
    walk = dominating_cycle_circular_arc(full)
    assert len(walk.vertices) == 3
    c5 = ArcRepresentation([(F(i, 5), F(i + 1, 5) % 1) for i in range(5)])
    walk = dominating_cycle_circular_arc(c5)
    assert sorted(walk.vertices) == list(range(5))
    line = ArcRepresentation([(0, F(1, 4)), (F(1, 4), F(1, 2))])
    with pytest.raises(GraphError):
        dominating_cycle_circular_arc(line)


def test_random_arcs_have_dominating_cycles():
    rng = random.Random(3)
    for _ in range(20):
        g, rep = random_arc(rng, rng.randint(5, 9))
        walk = dominating_cycle_circular_arc(rep)
        verts = walk.vertices
        assert classify(g, verts).is_dominating
        assert all(g.has_edge(a, b) for a, b in zip(verts, verts[1:] + verts[:1]))


def test_maximal_cliques():
    rep = IntervalRepresentation([(0, 2), (1, 3), (2, 4), (5, 6)])
    assert interval_maximal_cliques(rep) == [frozenset({0, 1, 2}), frozenset({3})]
    g = realize(rep)
    for q in interval_maximal_cliques(rep):
        assert all(g.has_edge(a, b) for a, b in combinations(q, 2))


def test_sharpness_family():
    for t, n in ((2, 8), (3, 11)):
        g, rep = sharpness_family_interval(t)
        assert g.n == n and realize(rep) == g
        assert is_connected(g) and min_degree(g) == 2
        assert hamiltonian_path(g) is None
    with pytest.raises(GraphError):
        sharpness_family_interval(1)


def test_max_weight_vertex():
    assert max_weight_dominating_vertex(ThresholdSpec([5, 1, 1, 1], 6)) == 0
    assert max_weight_dominating_vertex(ThresholdSpec([2, 2, 2], 4)) == 0
    with pytest.raises(DisconnectedGraphError):
        max_weight_dominating_vertex(ThresholdSpec([1, 1, 1], 5))
    rng = random.Random(9)
    for _ in range(100):
        g, spec = random_threshold(rng, rng.randint(4, 10))
        v = max_weight_dominating_vertex(spec)
        assert classify(g, {v}).is_dominating


def test_threshold_recognition():
    rng = random.Random(13)
    for _ in range(50):
        g, _ = random_threshold(rng, rng.randint(4, 10))
        spec = threshold_spec(g)
        assert spec is not None and realize(spec) == g
    assert threshold_spec(cycle_graph(4)) is None
    assert threshold_spec(path_graph(4)) is None


def test_generators_meet_constraints():
    rng = random.Random(21)
    for _ in range(30):
        g, spec = random_chain(rng, rng.randint(2, 6), rng.randint(2, 6))
        assert is_chain_graph(g) is not None and min_degree(g) >= 2
        g, rep = random_interval(rng, rng.randint(4, 10))
        assert is_at_free(g) and min_degree(g) >= 2 and is_connected(g)
    with pytest.raises(GraphError):
        random_chain(rng, 1, 3)


def test_prufer():
    t = tree_from_prufer([3, 3, 3, 4])
    assert is_tree(t) and t.n == 6 and t.degree(3) == 4
    assert diameter(tree_from_prufer([0])) == 2
