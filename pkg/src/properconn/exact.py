"""Exact proper connection number by pruned exhaustive colouring search.

Colourings are enumerated in canonical form: along a fixed edge order, an
edge may only take a colour at most one above the largest colour used so
far, which removes the k! relabelings of each colouring. After every
assignment the partial colouring is checked with uncoloured edges acting as
wildcards; if some pair has no proper path even then, no completion can
succeed and the branch is cut.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from .classes import hamiltonian_path
from .coloring import EdgeColoring, incidence, path_reachable, walk_reachable
from .errors import GraphError, SearchBudgetExceeded
from .graph import Graph, is_complete, max_degree, require_connected

log = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10**8
# node budget for searches above the edge cap; a search that finishes is still exact
OVER_CAP_NODES = 200_000


def edge_cap(k: int) -> int:
    """Largest edge count ``pc_exact`` will search exhaustively at ``k`` colours."""
    if k <= 3:
        return 18
    return {4: 15, 5: 13}.get(k, 12)


@dataclass(frozen=True)
class PcResult:
    value: int
    certificate: EdgeColoring
    exhausted_below: bool
    nodes: int = 0


def search_order(g: Graph) -> list:
    """Edge indices in breadth-first order from a maximum-degree vertex."""
    if g.m == 0:
        return []
    start = max(range(g.n), key=lambda v: (len(g.adj[v]), -v))
    order = []
    taken = set()
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            i = g.edge_index(v, w)
            if i not in taken:
                taken.add(i)
                order.append(i)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    # components not reached from start (only for disconnected callers)
    order.extend(i for i in range(g.m) if i not in taken)
    return order


class _Search:
    def __init__(self, g: Graph, k: int, max_nodes: int, hint=None):
        self.g = g
        self.k = k
        self.max_nodes = max_nodes
        self.inc = incidence(g)
        self.order = search_order(g)
        self.colors = [0] * g.m
        self.nodes = 0
        self.full = (1 << g.n) - 1
        self.sources = list(range(g.n - 1))
        self.hint = None
        if hint is not None:
            relabel = {}
            self.hint = [0] * g.m
            for e in self.order:
                c = hint[e]
                if c not in relabel:
                    relabel[c] = len(relabel) + 1
                self.hint[e] = relabel[c]

    def feasible(self) -> bool:
        colors, inc, full = self.colors, self.inc, self.full
        for idx, s in enumerate(self.sources):
            needed = full & ~((2 << s) - 1)
            walk = walk_reachable(inc, colors, s)
            if walk & needed != needed or path_reachable(inc, colors, s, needed) != needed:
                if idx:
                    # check the most recent culprit first next time
                    self.sources.insert(0, self.sources.pop(idx))
                return False
        return True

    def run(self):
        if self.g.m == 0:
            return [] if self.g.n <= 1 else None
        if self._rec(0, 0):
            return list(self.colors)
        return None

    def _rec(self, pos: int, used: int) -> bool:
        if pos == len(self.order):
            return True
        e = self.order[pos]
        top = min(self.k, used + 1)
        choices = list(range(1, top + 1))
        if self.hint is not None and self.hint[e] <= top:
            choices.remove(self.hint[e])
            choices.insert(0, self.hint[e])
        for col in choices:
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise SearchBudgetExceeded(
                    f"colouring search exceeded {self.max_nodes} nodes", self.nodes
                )
            self.colors[e] = col
            if self.feasible() and self._rec(pos + 1, max(used, col)):
                return True
        self.colors[e] = 0
        return False


def pc_decision(g: Graph, k: int, max_nodes: int = DEFAULT_MAX_NODES, hint=None, stats=None):
    """A proper-path colouring of ``g`` with at most ``k`` colours, or ``None``.

    ``None`` means the canonical search space was exhausted. ``hint`` is an
    optional colouring (sequence indexed like ``g.edges``) whose colours are
    tried first; it steers the search without restricting it.
    """
    require_connected(g, "pc_decision")
    if k < 1:
        raise GraphError(f"k must be at least 1, got {k}")
    search = _Search(g, k, max_nodes, hint)
    try:
        found = search.run()
    finally:
        if stats is not None:
            stats["nodes"] = stats.get("nodes", 0) + search.nodes
    if found is None:
        return None
    return EdgeColoring(g, found)


def tree_edge_coloring(t: Graph, root: int = None) -> list:
    """Proper edge colouring of a tree with ``max_degree(t)`` colours.

    Root-down greedy: child edges of a vertex avoid the colour of its parent edge.
    """
    colors = [0] * t.m
    if t.m == 0:
        return colors
    if root is None:
        root = max(range(t.n), key=lambda v: (len(t.adj[v]), -v))
    parent_color = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        nxt = 1
        for w in sorted(t.adj[v]):
            if w in parent_color:
                continue
            if nxt == parent_color[v]:
                nxt += 1
            colors[t.edge_index(v, w)] = nxt
            parent_color[w] = nxt
            nxt += 1
            queue.append(w)
    return colors


def _bfs_tree_edges(g: Graph, root: int) -> set:
    seen = {root}
    queue = deque([root])
    edges = set()
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            if w not in seen:
                seen.add(w)
                edges.add((v, w) if v < w else (w, v))
                queue.append(w)
    return edges


def _tree_path(adj, a, b):
    prev = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            break
        for w in adj[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path


def spanning_tree_upper_bound(g: Graph):
    """Spanning tree of small maximum degree and the bound ``pc(g) <= Δ(tree)``.

    Starts from a BFS tree and applies swap moves: a non-tree edge whose
    endpoints have tree degree at most Δ-2 replaces a cycle edge at a vertex of
    tree degree Δ. Stops when no move lowers the count of degree-Δ vertices.
    """
    require_connected(g, "spanning_tree_upper_bound")
    if g.n == 1:
        return Graph(1), 0
    root = min(range(g.n), key=lambda v: (len(g.adj[v]), v))
    edges = _bfs_tree_edges(g, root)
    improved = True
    while improved:
        improved = False
        adj = [set() for _ in range(g.n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        delta = max(len(a) for a in adj)
        if delta <= 2:
            break
        for u, v in g.edges:
            if (u, v) in edges or len(adj[u]) > delta - 2 or len(adj[v]) > delta - 2:
                continue
            cycle = _tree_path(adj, u, v)
            for a, b in zip(cycle, cycle[1:]):
                x = a if len(adj[a]) == delta else b if len(adj[b]) == delta else None
                if x is None:
                    continue
                edges.discard((a, b) if a < b else (b, a))
                edges.add((u, v))
                improved = True
                break
            if improved:
                break
    tree = Graph(g.n, edges)
    return tree, max_degree(tree)


def _lift(g: Graph, sub: Graph, sub_colors, fill: int = 1) -> list:
    """Colour ``g`` with ``sub``'s colours on ``sub``'s edges and ``fill`` elsewhere."""
    colors = [fill] * g.m
    for (u, v), c in zip(sub.edges, sub_colors):
        colors[g.edge_index(u, v)] = c
    return colors


def upper_bound_coloring(g: Graph, hamiltonian_limit: int = 14) -> EdgeColoring:
    """A verified-by-construction proper-path colouring from cheap structure.

    Complete graph: one colour. Hamiltonian path: the path alternates 1, 2.
    Otherwise a low-degree spanning tree, properly edge-coloured.
    """
    require_connected(g, "upper_bound_coloring")
    if is_complete(g):
        return EdgeColoring.constant(g)
    if g.n <= hamiltonian_limit:
        ham = hamiltonian_path(g)
        if ham is not None:
            colors = [1] * g.m
            for i, (a, b) in enumerate(zip(ham, ham[1:])):
                colors[g.edge_index(a, b)] = 1 + i % 2
            return EdgeColoring(g, colors)
    tree, _ = spanning_tree_upper_bound(g)
    return EdgeColoring(g, _lift(g, tree, tree_edge_coloring(tree)))


def pc_exact(g: Graph, max_nodes: int = DEFAULT_MAX_NODES, enforce_edge_caps: bool = True) -> PcResult:
    """The proper connection number of a connected graph on at least 2 vertices.

    A cheap upper-bound colouring is built first (for a tree it already has
    Δ colours); the search then descends from one below it until a colour
    count is exhaustively refuted. A colouring with at most k colours is also
    one with at most k+1, so refuting k refutes everything below.
    """
    require_connected(g, "pc_exact")
    if g.n < 2:
        raise GraphError("pc is defined for graphs with at least 2 vertices")
    if is_complete(g):
        return PcResult(1, EdgeColoring.constant(g), True)
    best = upper_bound_coloring(g)
    value = best.num_colors
    stats = {}
    k = value - 1
    while k >= 2:
        budget = max_nodes
        if enforce_edge_caps and g.m > edge_cap(k):
            budget = min(max_nodes, OVER_CAP_NODES)
        try:
            found = pc_decision(g, k, max_nodes=budget, stats=stats)
        except SearchBudgetExceeded as exc:
            if budget == max_nodes:
                raise
            raise SearchBudgetExceeded(
                f"{g.m} edges exceeds the exhaustive-search cap {edge_cap(k)} at k={k}"
                f" and a {budget}-node search did not settle it",
                exc.nodes_explored,
            ) from exc
        if found is None:
            break
        best, value = found, found.num_colors
        k = value - 1
    log.debug("pc_exact n=%d m=%d -> %d (%d nodes)", g.n, g.m, value, stats.get("nodes", 0))
    return PcResult(value, best, True, stats.get("nodes", 0))
