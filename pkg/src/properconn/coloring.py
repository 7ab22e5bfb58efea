"""Edge colourings and proper-path connectivity.

A path is proper when no two consecutive edges share a colour. Colour ids
are positive integers; colour ``0`` marks an uncoloured edge in partial
colourings used by the solvers and is treated as compatible with anything.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import GraphError
from .graph import Graph, require_connected

UNCOLORED = 0


class EdgeColoring:
    """A total map from the edges of ``graph`` to positive colour ids.

    ``colors[i]`` is the colour of ``graph.edges[i]``.
    """

    __slots__ = ("graph", "colors", "palette")

    def __init__(self, graph: Graph, colors: Sequence[int]):
        colors = tuple(int(c) for c in colors)
        if len(colors) != graph.m:
            raise GraphError(f"expected {graph.m} colours, got {len(colors)}")
        if any(c < 1 for c in colors):
            raise GraphError("colour ids must be positive integers")
        self.graph = graph
        self.colors = colors
        self.palette = frozenset(colors)

    @classmethod
    def from_mapping(cls, graph: Graph, mapping: Mapping) -> "EdgeColoring":
        colors = [0] * graph.m
        for (u, v), c in mapping.items():
            colors[graph.edge_index(u, v)] = c
        if 0 in colors:
            missing = graph.edges[colors.index(0)]
            raise GraphError(f"edge {missing} has no colour")
        return cls(graph, colors)

    @classmethod
    def constant(cls, graph: Graph, color: int = 1) -> "EdgeColoring":
        return cls(graph, [color] * graph.m)

    @property
    def num_colors(self) -> int:
        return len(self.palette)

    def color(self, u: int, v: int) -> int:
        return self.colors[self.graph.edge_index(u, v)]

    def as_dict(self) -> dict:
        return dict(zip(self.graph.edges, self.colors))

    def canonical(self) -> "EdgeColoring":
        """Relabel colours 1, 2, ... in order of first appearance along the edge list."""
        relabel = {}
        for c in self.colors:
            if c not in relabel:
                relabel[c] = len(relabel) + 1
        return EdgeColoring(self.graph, [relabel[c] for c in self.colors])

    def __eq__(self, other):
        return isinstance(other, EdgeColoring) and self.graph == other.graph and self.colors == other.colors

    def __hash__(self):
        return hash((self.graph, self.colors))

    def __repr__(self):
        return f"EdgeColoring({self.as_dict()})"


@dataclass(frozen=True)
class WitnessPath:
    vertices: tuple
    colors: tuple

    def __len__(self):
        return len(self.colors)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of :func:`is_proper_path_coloring`; truthy on PASS."""

    passed: bool
    failing_pair: tuple = None

    def __bool__(self):
        return self.passed


def incidence(g: Graph) -> list:
    """``inc[v]`` lists ``(neighbour, edge index)`` pairs in neighbour order."""
    inc = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        inc[u].append((v, i))
        inc[v].append((u, i))
    for row in inc:
        row.sort()
    return inc


def is_proper_path(g: Graph, c: EdgeColoring, p: Sequence[int]) -> bool:
    for v in p:
        g.check_vertex(v)
    if len(set(p)) != len(p):
        return False
    last = None
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            return False
        col = c.colors[g.edge_index(a, b)]
        if col == last:
            return False
        last = col
    return True


def walk_reachable(inc, colors, s: int) -> int:
    """Bitmask of vertices reachable from ``s`` by a proper *walk*.

    Breadth-first search over (vertex, colour of last edge) states. Every
    proper path is a proper walk, so a vertex missing here has no proper
    path from ``s`` either.
    """
    seen = {(s, -1)}
    reached = 1 << s
    queue = deque([(s, -1)])
    while queue:
        v, last = queue.popleft()
        for w, e in inc[v]:
            col = colors[e]
            if col and col == last:
                continue
            state = (w, col)
            if state not in seen:
                seen.add(state)
                reached |= 1 << w
                queue.append(state)
    return reached


def path_reachable(inc, colors, s: int, needed: int) -> int:
    """Vertices of ``needed`` joined to ``s`` by a proper simple path.

    Depth-first search over (vertex, last colour, visited set); stops as soon
    as every vertex of ``needed`` has been reached.
    """
    reached = 0
    done = set()

    def dfs(v, last, visited):
        nonlocal reached
        for w, e in inc[v]:
            bit = 1 << w
            if visited & bit:
                continue
            col = colors[e]
            if col and col == last:
                continue
            reached |= bit
            if reached & needed == needed:
                return True
            vis = visited | bit
            key = (w, col, vis)
            if key in done:
                continue
            done.add(key)
            if dfs(w, col, vis):
                return True
        return False

    dfs(s, -1, 1 << s)
    return reached & needed


def _find_path(inc, colors, u: int, v: int):
    done = set()
    stack = [u]

    def dfs(x, last, visited):
        for w, e in inc[x]:
            bit = 1 << w
            if visited & bit:
                continue
            col = colors[e]
            if col == last:
                continue
            stack.append(w)
            if w == v:
                return True
            key = (w, col, visited | bit)
            if key not in done:
                done.add(key)
                if dfs(w, col, visited | bit):
                    return True
            stack.pop()
        return False

    return list(stack) if dfs(u, -1, 1 << u) else None


def find_proper_path(g: Graph, c: EdgeColoring, u: int, v: int):
    """A proper ``u``-``v`` path as a :class:`WitnessPath`, or ``None``.

    The walk search is only a filter; the simple-path search decides.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise GraphError("find_proper_path needs two distinct vertices")
    inc = incidence(g)
    if not walk_reachable(inc, c.colors, u) >> v & 1:
        return None
    verts = _find_path(inc, c.colors, u, v)
    if verts is None:
        return None
    cols = tuple(c.colors[g.edge_index(a, b)] for a, b in zip(verts, verts[1:]))
    return WitnessPath(tuple(verts), cols)


def first_failing_pair(g: Graph, inc, colors, exact_order: bool = True):
    """Smallest ``(s, t)`` with no proper path, or ``None`` when all pairs connect.

    With ``exact_order=False`` any failing pair may be returned, which lets the
    walk filter short-circuit.
    """
    n = g.n
    full = (1 << n) - 1
    for s in range(n - 1):
        needed = full & ~((1 << (s + 1)) - 1)
        walk = walk_reachable(inc, colors, s)
        if not exact_order and walk & needed != needed:
            missing = needed & ~walk
            return s, (missing & -missing).bit_length() - 1
        got = path_reachable(inc, colors, s, needed & walk)
        if got != needed:
            missing = needed & ~got
            return s, (missing & -missing).bit_length() - 1
    return None


def is_proper_path_coloring(g: Graph, c: EdgeColoring) -> CheckResult:
    """PASS iff every pair of distinct vertices is joined by a proper path.

    On failure the lexicographically first failing pair is reported.
    """
    require_connected(g, "is_proper_path_coloring")
    if c.graph != g:
        raise GraphError("colouring belongs to a different graph")
    pair = first_failing_pair(g, incidence(g), c.colors)
    return CheckResult(pair is None, pair)
