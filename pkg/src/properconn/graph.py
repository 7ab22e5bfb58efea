"""Immutable simple graphs on vertices ``0..n-1`` and their metric helpers.

Vertex sets are exchanged as ``frozenset`` objects at the API boundary;
inner loops use the per-vertex neighbour bitmasks in ``Graph.masks``.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

from .errors import DisconnectedGraphError, GraphError

INF = math.inf  # distance between vertices in different components


class Graph:
    """A finite simple undirected graph.

    ``edges`` is a sorted tuple of ``(u, v)`` pairs with ``u < v``; duplicate
    pairs in the input collapse to one edge. ``adj[v]`` is the neighbour
    frozenset of ``v`` and ``masks[v]`` the same set as an int bitmask.
    """

    __slots__ = ("n", "edges", "adj", "masks", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        pairs = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            pairs.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(pairs))
        nbrs = [set() for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.adj = tuple(frozenset(s) for s in nbrs)
        self.masks = tuple(sum(1 << w for w in s) for s in nbrs)
        self._index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge ``{u, v}`` in ``self.edges``."""
        try:
            return self._index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"invalid vertex id {v!r} for graph on {self.n} vertices")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def mask_to_set(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def distances_from(g: Graph, sources: Iterable[int]) -> list:
    """Multi-source BFS; ``INF`` marks unreachable vertices."""
    dist = [INF] * g.n
    queue = deque()
    for s in sources:
        if dist[s] != 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int):
    g.check_vertex(u)
    g.check_vertex(v)
    return distances_from(g, [u])[v]


def eccentricity(g: Graph, v: int):
    g.check_vertex(v)
    return max(distances_from(g, [v]), default=0)


def all_eccentricities(g: Graph) -> list:
    return [max(distances_from(g, [v])) for v in range(g.n)]


def diameter(g: Graph):
    return max(all_eccentricities(g), default=0)


def radius(g: Graph):
    return min(all_eccentricities(g), default=0)


def k_step_neighborhood(g: Graph, s: Iterable[int], k: int) -> frozenset:
    """Vertices at distance exactly ``k`` from the set ``s``."""
    s = list(s)
    if not s:
        raise GraphError("k-step neighbourhood of an empty set")
    for v in s:
        g.check_vertex(v)
    dist = distances_from(g, s)
    return frozenset(v for v in range(g.n) if dist[v] == k)


def degrees(g: Graph) -> list:
    return [len(a) for a in g.adj]


def pendant_vertices(g: Graph) -> frozenset:
    return frozenset(v for v in range(g.n) if len(g.adj[v]) == 1)


def min_degree(g: Graph) -> int:
    return min((len(a) for a in g.adj), default=0)


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


def induced_subgraph(g: Graph, d: Iterable[int]):
    """Return ``(G[d], relabel)`` where ``relabel`` maps old ids to ``0..|d|-1``.

    New ids follow the increasing order of the old ones.
    """
    verts = sorted(set(d))
    if not verts:
        raise GraphError("induced subgraph on an empty vertex set")
    for v in verts:
        g.check_vertex(v)
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph(len(verts), edges), relabel


def component_mask(g: Graph, start: int, allowed: int = -1) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    masks = g.masks
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return component_mask(g, 0) == (1 << g.n) - 1


def is_mask_connected(g: Graph, mask: int) -> bool:
    """Whether the subgraph induced by the vertex bitmask ``mask`` is connected."""
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    return component_mask(g, start, mask) == mask


def is_spanning_connected_subgraph(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        raise GraphError(f"vertex counts differ: {g.n} vs {h.n}")
    return set(h.edges) <= set(g.edges) and is_connected(h)


def require_connected(g: Graph, what: str = "operation") -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"{what} requires a connected graph")


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def edge_subgraph(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    """Spanning subgraph of ``g`` keeping only ``edges`` (which must be edges of ``g``)."""
    kept = []
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of the host graph")
        kept.append((u, v))
    return Graph(g.n, kept)


def closed_neighborhood_mask(g: Graph, v: int) -> int:
    return g.masks[v] | (1 << v)
