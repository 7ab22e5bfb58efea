"""Constructive proper-path colourings with guaranteed colour budgets.

Each builder first tries a direct colouring read off the structure (a
dominating set, a tree, a Hamiltonian path, a dominating path or cycle).
The result is always checked; if the check fails, an exhaustive search at
the guaranteed colour count takes over, seeded with the direct colouring so
that it usually finishes after a few repairs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .classes import (
    ArcRepresentation,
    IntervalRepresentation,
    dominating_cycle_circular_arc,
    dominating_path_interval,
    interval_maximal_cliques,
    realize,
)
from .coloring import EdgeColoring, is_proper_path_coloring
from .domination import TWO_WAY, TWO_WAY_TWO_STEP, DominationCertificate, classify
from .errors import GraphError
from .exact import DEFAULT_MAX_NODES, pc_decision, pc_exact, tree_edge_coloring
from .graph import (
    Graph,
    distances_from,
    induced_subgraph,
    is_complete,
    is_connected,
    is_tree,
    max_degree,
    min_degree,
    require_connected,
)

log = logging.getLogger(__name__)

DIRECT = "direct"
FALLBACK = "fallback-search"


@dataclass(frozen=True)
class ConstructionOutcome:
    coloring: EdgeColoring
    colors_used: int
    guarantee: int
    method: str
    verified: bool


class GuaranteeViolation(RuntimeError):
    """No colouring exists within a bound that a theorem promises."""


def _finish(g: Graph, colors, guarantee: int, max_nodes: int) -> ConstructionOutcome:
    coloring = EdgeColoring(g, colors)
    if coloring.num_colors <= guarantee and is_proper_path_coloring(g, coloring):
        return ConstructionOutcome(coloring, coloring.num_colors, guarantee, DIRECT, True)
    log.debug("direct colouring failed on %r; searching with %d colours", g, guarantee)
    found = pc_decision(g, guarantee, max_nodes=max_nodes, hint=colors)
    if found is None:
        raise GuaranteeViolation(f"no proper-path colouring with {guarantee} colours for {g!r}")
    if not is_proper_path_coloring(g, found):
        raise AssertionError("search returned an unverified colouring")
    return ConstructionOutcome(found, found.num_colors, guarantee, FALLBACK, True)


def _core_coloring(g: Graph, d, d_coloring=None):
    """Colour G[D] optimally on colours 3, 4, ...; returns ``(colors, k)``.

    Edges outside G[D] are left at 0. A single vertex needs no colours (k = 0).
    """
    colors = [0] * g.m
    if len(d) == 1:
        return colors, 0
    sub, relabel = induced_subgraph(g, d)
    if d_coloring is None:
        d_coloring = pc_exact(sub).certificate
    back = {i: v for v, i in relabel.items()}
    for (a, b), c in zip(sub.edges, d_coloring.colors):
        colors[g.edge_index(back[a], back[b])] = c + 2
    return colors, d_coloring.num_colors


def _validated(g: Graph, d, kind: str) -> DominationCertificate:
    require_connected(g, "construction")
    if isinstance(d, DominationCertificate):
        d = d.d
    cert = classify(g, d)
    if not cert.certifies(kind):
        raise GraphError(f"{sorted(d)} is not a connected {kind} dominating set")
    return cert


def _assign_foot_colors(g: Graph, n1, n2, foot):
    """Colour each ``u`` in N^1(D) with 1 or 2 so every ``x`` in N^2(D) sees both.

    Backtracking in id order; at each step the value differing from the
    previous vertex on the same foot is tried first. ``None`` if impossible.
    """
    order = sorted(n1)
    demands = {x: sorted(g.adj[x] & n1) for x in n2}
    watchers = {u: [x for x in n2 if u in g.adj[x]] for u in order}
    fc = {}
    last_on_foot = {}

    def ok(u):
        for x in watchers[u]:
            vals = {fc[w] for w in demands[x] if w in fc}
            if len(vals) < 2 and all(w in fc for w in demands[x]):
                return False
        return True

    def rec(i):
        if i == len(order):
            return True
        u = order[i]
        prev = last_on_foot.get(foot[u])
        first = 1 if prev != 1 else 2
        for val in (first, 3 - first):
            fc[u] = val
            saved = last_on_foot.get(foot[u])
            last_on_foot[foot[u]] = val
            if ok(u) and rec(i + 1):
                return True
            last_on_foot[foot[u]] = saved
            del fc[u]
        return False

    return fc if rec(0) else None


def color_from_two_step_dominating(g: Graph, d, d_coloring=None,
                                   max_nodes: int = DEFAULT_MAX_NODES) -> ConstructionOutcome:
    """At most pc(G[D]) + 2 colours from a connected two-way two-step dominating set.

    G[D] gets an optimal colouring on colours 3.. ; every vertex u one step
    from D gets a designated foot edge coloured 1 or 2, chosen so that each
    vertex two steps out has neighbours with both foot colours, and reaches
    them along edges of the opposite colour. A second foot edge, when
    present, takes the other of 1 and 2.
    """
    cert = _validated(g, d, TWO_WAY_TWO_STEP)
    if min_degree(g) < 1:
        raise GraphError("graph has an isolated vertex")
    dset = cert.d
    colors, k = _core_coloring(g, dset, d_coloring)
    guarantee = k + 2
    spare = 3 if guarantee >= 3 else 1
    dist = distances_from(g, dset)
    n1 = {v for v in range(g.n) if dist[v] == 1}
    n2 = {v for v in range(g.n) if dist[v] == 2}

    # spread designated feet so few N^1 vertices share one
    load = {v: 0 for v in dset}
    foot = {}
    for u in sorted(n1, key=lambda u: (len(g.adj[u] & dset), u)):
        f = min(g.adj[u] & dset, key=lambda v: (load[v], v))
        foot[u] = f
        load[f] += 1
    fc = _assign_foot_colors(g, n1, n2, foot)
    if fc is None:
        fc = {u: 1 + i % 2 for i, u in enumerate(sorted(n1))}

    for u in n1:
        colors[g.edge_index(u, foot[u])] = fc[u]
        for f in g.adj[u] & dset:
            if f != foot[u]:
                colors[g.edge_index(u, f)] = 3 - fc[u]
    for x in n2:
        for u in g.adj[x] & n1:
            colors[g.edge_index(x, u)] = 3 - fc[u]
    for i, (a, b) in enumerate(g.edges):
        if colors[i]:
            continue
        if a in n1 and b in n1:
            colors[i] = 3 - fc[a] if fc[a] == fc[b] else spare
        else:
            colors[i] = spare
    return _finish(g, colors, guarantee, max_nodes)


def color_from_dominating(g: Graph, d, d_coloring=None,
                          max_nodes: int = DEFAULT_MAX_NODES) -> ConstructionOutcome:
    """At most pc(G[D]) + 2 colours from a connected two-way dominating set.

    G[D] gets an optimal colouring on colours 3.. . A vertex with two or
    more feet sends colour 1 down two of them and colour 2 down the rest.
    Vertices with a single foot alternate colours 1 and 2 around that foot;
    edges between vertices outside D take colour 3 when the palette has it,
    otherwise the colour that makes a two-edge escape to D proper.
    """
    cert = _validated(g, d, TWO_WAY)
    dset = cert.d
    colors, k = _core_coloring(g, dset, d_coloring)
    guarantee = k + 2
    if is_complete(g):
        return _finish(g, [1] * g.m, guarantee, max_nodes)
    outside = [v for v in range(g.n) if v not in dset]
    down = {}
    turn = {}
    for x in outside:
        feet = sorted(g.adj[x] & dset)
        if len(feet) >= 2:
            for i, f in enumerate(feet):
                colors[g.edge_index(x, f)] = 1 if i < 2 else 2
            down[x] = None
        else:
            f = feet[0]
            c = 1 + turn.get(f, 0) % 2
            turn[f] = turn.get(f, 0) + 1
            colors[g.edge_index(x, f)] = c
            down[x] = c
    for i, (a, b) in enumerate(g.edges):
        if colors[i]:
            continue
        if guarantee >= 3:
            colors[i] = 3
        elif down.get(b) is not None:
            colors[i] = 3 - down[b]
        elif down.get(a) is not None:
            colors[i] = 3 - down[a]
        else:
            colors[i] = 1
    return _finish(g, colors, guarantee, max_nodes)


def color_tree(t: Graph) -> ConstructionOutcome:
    """Proper edge colouring of a tree with exactly Δ colours."""
    if t.n < 2 or not is_tree(t):
        raise GraphError("color_tree needs a tree on at least 2 vertices")
    coloring = EdgeColoring(t, tree_edge_coloring(t))
    ok = bool(is_proper_path_coloring(t, coloring))
    if not ok:
        raise AssertionError("tree colouring failed verification")
    delta = max_degree(t)
    return ConstructionOutcome(coloring, coloring.num_colors, delta, DIRECT, ok)


def _check_hamiltonian(g: Graph, path) -> None:
    if sorted(path) != list(range(g.n)):
        raise GraphError("path must visit every vertex exactly once")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"({a}, {b}) is not an edge")


def color_traceable(g: Graph, ham_path) -> ConstructionOutcome:
    """Two colours: alternate 1, 2 along a Hamiltonian path, colour 1 elsewhere."""
    _check_hamiltonian(g, ham_path)
    if is_complete(g):
        raise GraphError("complete graph: one colour suffices, use a constant colouring")
    colors = [1] * g.m
    for i, (a, b) in enumerate(zip(ham_path, ham_path[1:])):
        colors[g.edge_index(a, b)] = 1 + i % 2
    coloring = EdgeColoring(g, colors)
    ok = bool(is_proper_path_coloring(g, coloring))
    if not ok:
        raise AssertionError("Hamiltonian path colouring failed verification")
    return ConstructionOutcome(coloring, coloring.num_colors, 2, DIRECT, ok)


def _check_three_color_input(g: Graph, rep) -> None:
    if realize(rep) != g:
        raise GraphError("representation does not realise the given graph")
    if not is_connected(g):
        raise GraphError("graph must be connected")
    if min_degree(g) < 2:
        raise GraphError("minimum degree must be at least 2")
    if is_complete(g):
        raise GraphError("complete graph: one colour suffices")


def _bron_kerbosch(g: Graph, r: int, p: int, x: int, out: list) -> None:
    if not p and not x:
        out.append(r)
        return
    pivot_src = p | x
    pivot = (pivot_src & -pivot_src).bit_length() - 1
    cand = p & ~g.masks[pivot]
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        _bron_kerbosch(g, r | low, p & g.masks[v], x & g.masks[v], out)
        p &= ~low
        x |= low
        cand &= ~low


def _rooted_cliques(g: Graph, root: int, members, rep=None) -> list:
    """Maximal cliques of G[members + root] that contain ``root``, minus ``root``."""
    if isinstance(rep, IntervalRepresentation):
        cliques = interval_maximal_cliques(rep, list(members) + [root])
        return [sorted(q - {root}) for q in cliques if root in q and len(q) > 1]
    allowed = sum(1 << v for v in members)
    found = []
    _bron_kerbosch(g, 1 << root, g.masks[root] & allowed, 0, found)
    out = []
    for mask in found:
        out.append(sorted(v for v in members if mask >> v & 1))
    return [q for q in out if q]


def _color_around_spine(g: Graph, spine, spine_colors, rep) -> list:
    """Spine edges as given, then the cliques hanging off each spine vertex.

    In a clique rooted at ``v`` the smallest vertex ``u`` joins ``v`` in colour
    3 and the other members in colour 2; all remaining clique edges get 1.
    Every member then reaches ``v`` with a final colour 3, and ``v`` enters
    every clique with colour 1, so two cliques at one root connect properly.
    """
    colors = [0] * g.m
    for (a, b), c in zip(zip(spine, spine[1:] + spine[:1]), spine_colors):
        colors[g.edge_index(a, b)] = c
    on_spine = set(spine)
    groups = {v: [] for v in spine}
    for x in range(g.n):
        if x in on_spine:
            continue
        root = next(v for v in spine if g.has_edge(x, v))
        groups[root].append(x)
    for v, members in groups.items():
        for q in _rooted_cliques(g, v, members, rep):
            u = q[0]
            e = g.edge_index(u, v)
            if not colors[e]:
                colors[e] = 3
            for w in q[1:]:
                e = g.edge_index(u, w)
                if not colors[e]:
                    colors[e] = 2
            for i, a in enumerate(q):
                for b in q[i + 1:] + [v]:
                    e = g.edge_index(a, b)
                    if not colors[e]:
                        colors[e] = 1
    return [c or 1 for c in colors]


def color_interval(g: Graph, rep: IntervalRepresentation,
                   max_nodes: int = DEFAULT_MAX_NODES) -> ConstructionOutcome:
    """At most 3 colours for a connected interval graph with minimum degree 2.

    The dominating path alternates colours 1 and 2. Vertices off the path are
    grouped under the first path vertex they touch and each maximal clique at
    that root is coloured as in :func:`_color_around_spine`.
    """
    _check_three_color_input(g, rep)
    path = list(dominating_path_interval(rep).vertices)
    # one colour fewer than vertices, so the closing pair is never coloured
    spine_colors = [1 + i % 2 for i in range(len(path) - 1)]
    colors = _color_around_spine(g, path, spine_colors, rep)
    return _finish(g, colors, 3, max_nodes)


def cycle_edge_colors(cycle) -> list:
    """Colours for the cycle edges ``(cycle[i], cycle[i+1 mod L])``.

    Even cycles alternate 1, 2. Odd cycles alternate starting right after the
    lexicographically smallest edge, which gets colour 3.
    """
    length = len(cycle)
    edges = [tuple(sorted((cycle[i], cycle[(i + 1) % length]))) for i in range(length)]
    if length % 2 == 0:
        return [1 + i % 2 for i in range(length)]
    j = min(range(length), key=lambda i: edges[i])
    colors = [0] * length
    for step in range(1, length):
        colors[(j + step) % length] = 1 + (step - 1) % 2
    colors[j] = 3
    return colors


def color_circular_arc(g: Graph, rep: ArcRepresentation,
                       max_nodes: int = DEFAULT_MAX_NODES) -> ConstructionOutcome:
    """At most 3 colours for a connected circular-arc graph with minimum degree 2.

    The dominating cycle is coloured by :func:`cycle_edge_colors`; the cliques
    hanging off it are handled as in :func:`color_interval`.
    """
    _check_three_color_input(g, rep)
    cycle = list(dominating_cycle_circular_arc(rep).vertices)
    colors = _color_around_spine(g, cycle, cycle_edge_colors(cycle), None)
    return _finish(g, colors, 3, max_nodes)
