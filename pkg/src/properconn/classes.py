"""Structured graph classes: representations, generators and structure finders.

Interval, circular-arc, threshold and chain graphs are handled through
their representations rather than recognised from bare graphs. Endpoints,
angles and weights are stored as ``Fraction`` so intersection tests are exact.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DisconnectedGraphError, GraphError, SearchBudgetExceeded
from .graph import (
    Graph,
    component_mask,
    diameter,
    is_complete,
    is_connected,
    min_degree,
    pendant_vertices,
)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed interval ``intervals[v] = (l, r)`` per vertex."""

    intervals: tuple

    def __init__(self, intervals: Sequence):
        ivs = tuple((_frac(l), _frac(r)) for l, r in intervals)
        for v, (l, r) in enumerate(ivs):
            if l > r:
                raise GraphError(f"interval {v} has left end {l} > right end {r}")
        object.__setattr__(self, "intervals", ivs)

    def __len__(self):
        return len(self.intervals)


@dataclass(frozen=True)
class ArcRepresentation:
    """Closed arcs on a circle of circumference 1.

    ``arcs[v] = (start, end)`` runs counter-clockwise from ``start`` to
    ``end``, wrapping past 0 when ``end < start``. ``start`` lies in [0, 1)
    and ``end`` in [0, 1]; ``(0, 1)`` is the whole circle.
    """

    arcs: tuple

    def __init__(self, arcs: Sequence):
        out = []
        for v, (s, e) in enumerate(arcs):
            s, e = _frac(s), _frac(e)
            if not (0 <= s < 1 and 0 <= e <= 1):
                raise GraphError(f"arc {v} = ({s}, {e}) outside the unit circle")
            out.append((s, e))
        object.__setattr__(self, "arcs", tuple(out))

    def __len__(self):
        return len(self.arcs)

    def length(self, v: int) -> Fraction:
        s, e = self.arcs[v]
        if e - s >= 1:
            return Fraction(1)
        return e - s if e >= s else e - s + 1

    def contains(self, v: int, point: Fraction) -> bool:
        s = self.arcs[v][0]
        return (point - s) % 1 <= self.length(v)


@dataclass(frozen=True)
class ThresholdSpec:
    weights: tuple
    threshold: Fraction

    def __init__(self, weights: Sequence, threshold):
        object.__setattr__(self, "weights", tuple(_frac(w) for w in weights))
        object.__setattr__(self, "threshold", _frac(threshold))


@dataclass(frozen=True)
class ChainSpec:
    """Bipartite chain graph: ``a[i]`` has neighbourhood ``neighbors[i]`` inside ``b``.

    The neighbourhoods are nested, ``neighbors[0] ⊆ neighbors[1] ⊆ ...``.
    Vertex ids in ``a`` and ``b`` together are exactly ``0..n-1``.
    """

    a: tuple
    b: tuple
    neighbors: tuple

    def __init__(self, a: Sequence[int], b: Sequence[int], neighbors: Sequence):
        object.__setattr__(self, "a", tuple(a))
        object.__setattr__(self, "b", tuple(b))
        object.__setattr__(self, "neighbors", tuple(frozenset(s) for s in neighbors))

    @property
    def n(self) -> int:
        return len(self.a) + len(self.b)

    @property
    def b1(self) -> int:
        """A vertex of ``b`` adjacent to ``a[0]`` (the smallest such id)."""
        if not self.neighbors or not self.neighbors[0]:
            raise GraphError("a[0] has no neighbour")
        return min(self.neighbors[0])

    def validate(self) -> None:
        ids = sorted(self.a + self.b)
        if ids != list(range(len(ids))):
            raise GraphError("chain bipartition must cover vertex ids 0..n-1 exactly once")
        if len(self.neighbors) != len(self.a):
            raise GraphError("one neighbourhood per vertex of a is required")
        bset = set(self.b)
        for i, nb in enumerate(self.neighbors):
            if not nb <= bset:
                raise GraphError(f"neighbourhood of a[{i}] leaves side b")
            if i and not self.neighbors[i - 1] <= nb:
                raise GraphError(f"neighbourhoods of a[{i - 1}] and a[{i}] are not nested")


def realize(rep) -> Graph:
    """The graph defined by an interval, arc, threshold or chain representation."""
    if isinstance(rep, IntervalRepresentation):
        ivs = rep.intervals
        edges = [
            (u, v)
            for u, v in combinations(range(len(ivs)), 2)
            if max(ivs[u][0], ivs[v][0]) <= min(ivs[u][1], ivs[v][1])
        ]
        return Graph(len(ivs), edges)
    if isinstance(rep, ArcRepresentation):
        edges = [
            (u, v)
            for u, v in combinations(range(len(rep)), 2)
            if rep.contains(u, rep.arcs[v][0]) or rep.contains(v, rep.arcs[u][0])
        ]
        return Graph(len(rep), edges)
    if isinstance(rep, ThresholdSpec):
        w, t = rep.weights, rep.threshold
        return Graph(len(w), [(u, v) for u, v in combinations(range(len(w)), 2) if w[u] + w[v] >= t])
    if isinstance(rep, ChainSpec):
        rep.validate()
        return Graph(rep.n, [(a, b) for a, nb in zip(rep.a, rep.neighbors) for b in nb])
    raise GraphError(f"unsupported representation {type(rep).__name__}")


# ---------------------------------------------------------------- recognition


def bipartition(g: Graph):
    """Two-colouring ``side[v] in {0, 1}`` per vertex, or ``None`` if not bipartite."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return side


def is_chain_graph(g: Graph):
    """A :class:`ChainSpec` witnessing that ``g`` is a chain graph, else ``None``.

    Isolated vertices are placed on side ``b``. Each orientation of the
    bipartition is tried: sort side ``a`` by degree, then check nesting.
    """
    side = bipartition(g)
    if side is None:
        return None
    isolated = [v for v in range(g.n) if not g.adj[v]]
    nontrivial = [v for v in range(g.n) if g.adj[v]]
    if nontrivial and component_mask(g, nontrivial[0]) != sum(1 << v for v in nontrivial):
        return None  # two edgeful components never nest
    for a_side in (0, 1):
        a = sorted((v for v in nontrivial if side[v] == a_side), key=lambda v: (len(g.adj[v]), v))
        b = sorted([v for v in nontrivial if side[v] != a_side] + isolated)
        nbs = [g.adj[v] for v in a]
        if all(nbs[i - 1] <= nbs[i] for i in range(1, len(nbs))):
            return ChainSpec(a, b, nbs)
    return None


def find_asteroidal_triple(g: Graph):
    """An asteroidal triple ``(x, y, z)`` of ``g``, or ``None`` if ``g`` is AT-free."""
    full = (1 << g.n) - 1
    closed = [g.masks[v] | (1 << v) for v in range(g.n)]
    # reach[z][x]: component of x in g minus N[z]
    reach = [[0] * g.n for _ in range(g.n)]
    for z in range(g.n):
        allowed = full & ~closed[z]
        for x in range(g.n):
            if allowed >> x & 1 and not reach[z][x]:
                comp = component_mask(g, x, allowed)
                c = comp
                while c:
                    low = c & -c
                    reach[z][low.bit_length() - 1] = comp
                    c ^= low
    for x, y, z in combinations(range(g.n), 3):
        if closed[x] >> y & 1 or closed[x] >> z & 1 or closed[y] >> z & 1:
            continue
        if reach[z][x] >> y & 1 and reach[y][x] >> z & 1 and reach[x][y] >> z & 1:
            return (x, y, z)
    return None


def is_at_free(g: Graph) -> bool:
    return find_asteroidal_triple(g) is None


def hamiltonian_path(g: Graph, max_vertices: int = 14):
    """A Hamiltonian path as a vertex list, or ``None`` when none exists.

    Backtracking that starts from low-degree vertices and extends through
    the neighbour with fewest unvisited neighbours first; failed
    (endpoint, visited set) states are remembered.
    """
    n = g.n
    if n > max_vertices:
        raise SearchBudgetExceeded(f"Hamiltonian path search limited to {max_vertices} vertices")
    if n == 0:
        return None
    if n == 1:
        return [0]
    if not is_connected(g) or len(pendant_vertices(g)) > 2:
        return None
    full = (1 << n) - 1
    masks = g.masks
    dead = set()
    path = []

    def extend(v, visited):
        if visited == full:
            return True
        if (v, visited) in dead:
            return False
        options = [w for w in g.adj[v] if not visited >> w & 1]
        options.sort(key=lambda w: (bin(masks[w] & ~visited).count("1"), w))
        for w in options:
            path.append(w)
            if extend(w, visited | 1 << w):
                return True
            path.pop()
        dead.add((v, visited))
        return False

    pend = sorted(pendant_vertices(g))
    starts = pend[:1] if pend else sorted(range(n), key=lambda v: (len(g.adj[v]), v))
    for s in starts:
        path[:] = [s]
        if extend(s, 1 << s):
            return list(path)
    return None


# ------------------------------------------------------- dominating structures


@dataclass(frozen=True)
class DominatingWalk:
    """A dominating path or cycle with its length and the host graph's diameter."""

    vertices: tuple
    length: int
    diameter: int
    cyclic: bool = False

    @property
    def within_bound(self) -> bool:
        """For paths, whether length <= diam - 2; for cycles, length <= diam."""
        return self.length <= (self.diameter if self.cyclic else self.diameter - 2)


def _dominates(g: Graph, verts) -> bool:
    covered = 0
    for v in verts:
        covered |= g.masks[v] | (1 << v)
    return covered == (1 << g.n) - 1


def dominating_path_interval(rep: IntervalRepresentation) -> DominatingWalk:
    """Dominating path of an interval graph by a left-to-right sweep.

    Start from the neighbour (of the interval ending first) that reaches
    furthest right, then keep stepping to the neighbour reaching furthest
    right until every interval starts before the path's right end.
    """
    g = realize(rep)
    if not is_connected(g):
        raise DisconnectedGraphError("dominating path needs a connected interval graph")
    if is_complete(g):
        raise GraphError("complete interval graph has no proper dominating path to build")
    ivs = rep.intervals
    first = min(range(g.n), key=lambda v: (ivs[v][1], v))
    last_start = max(l for l, _ in ivs)
    cur = max(g.adj[first], key=lambda v: (ivs[v][1], -v))
    path = [cur]
    while ivs[cur][1] < last_start:
        nxt = max(g.adj[cur], key=lambda v: (ivs[v][1], -v))
        if ivs[nxt][1] <= ivs[cur][1]:
            raise DisconnectedGraphError("interval sweep stalled")
        path.append(nxt)
        cur = nxt
    if not _dominates(g, path):
        raise AssertionError("interval sweep produced a non-dominating path")
    return DominatingWalk(tuple(path), len(path) - 1, diameter(g))


def _circle_cover(rep: ArcRepresentation):
    """Fewest arcs whose union is the circle, chained so consecutive arcs meet."""
    n = len(rep)
    best = None
    for first in range(n):
        if rep.length(first) >= 1:
            return [first]
        start = rep.arcs[first][0]
        reach = start + rep.length(first)  # unrolled coordinate
        chain = [first]
        while reach < start + 1:
            cand = None
            for v in range(n):
                if v in chain:
                    continue
                off = (rep.arcs[v][0] - start) % 1
                # arc must start inside the covered stretch [start, reach]
                if off > reach - start:
                    continue
                end = start + off + rep.length(v)
                if end > reach and (cand is None or end > cand[0]):
                    cand = (end, v)
            if cand is None:
                chain = None
                break
            reach = cand[0]
            chain.append(cand[1])
        if chain is not None and (best is None or len(chain) < len(best)):
            best = chain
    return best


def _shortest_path(g: Graph, a: int, b: int, banned_vertices=(), banned_edge=None):
    prev = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            if w in prev or w in banned_vertices:
                continue
            if banned_edge is not None and {v, w} == set(banned_edge):
                continue
            prev[w] = v
            if w == b:
                out = [b]
                while prev[out[-1]] is not None:
                    out.append(prev[out[-1]])
                return out[::-1]
            queue.append(w)
    return None


def _short_cycle_through(g: Graph, verts):
    if len(verts) == 2:
        a, b = verts
        p = _shortest_path(g, a, b, banned_edge=(a, b))
        return p
    (u,) = verts
    best = None
    for x, y in combinations(sorted(g.adj[u]), 2):
        p = _shortest_path(g, x, y, banned_vertices={u})
        if p is not None and (best is None or len(p) + 1 < len(best)):
            best = [u] + p
    return best


def dominating_cycle_circular_arc(rep: ArcRepresentation) -> DominatingWalk:
    """Dominating cycle of a circular-arc graph from a minimum chained circle cover."""
    g = realize(rep)
    if not is_connected(g):
        raise DisconnectedGraphError("dominating cycle needs a connected circular-arc graph")
    cover = _circle_cover(rep)
    if cover is None:
        raise GraphError("arcs leave part of the circle uncovered; use the interval dominating path")
    if len(cover) >= 3:
        cycle = cover
    else:
        cycle = _short_cycle_through(g, cover)
        if cycle is None:
            raise GraphError("no cycle passes through the covering arcs")
    if not _dominates(g, cycle):
        raise AssertionError("circle cover produced a non-dominating cycle")
    return DominatingWalk(tuple(cycle), len(cycle), diameter(g), cyclic=True)


def interval_maximal_cliques(rep: IntervalRepresentation, subset=None) -> list:
    """Maximal cliques (as frozensets) of the interval graph restricted to ``subset``."""
    verts = range(len(rep)) if subset is None else subset
    events = []
    for v in verts:
        l, r = rep.intervals[v]
        events.append((l, 0, v))
        events.append((r, 1, v))
    events.sort()
    cliques = []
    active = set()
    grew = False
    for _, kind, v in events:
        if kind == 0:
            active.add(v)
            grew = True
        else:
            if grew:
                cliques.append(frozenset(active))
                grew = False
            active.discard(v)
    return cliques


# ------------------------------------------------------------------ families


def sharpness_family_interval(t: int):
    """Interval graph with a triangle hung on every vertex of a ``t``-vertex path.

    The first path vertex carries a second triangle, so three triangles are
    dead ends and the graph has no Hamiltonian path for any ``t >= 2``. The
    result has ``3t + 2`` vertices: path vertices ``0..t-1``, then the two
    tips of each triangle.
    """
    if t < 2:
        raise GraphError("sharpness family needs t >= 2")
    ivs = [(8 * i, 8 * i + 10) for i in range(t)]
    for i in range(t):
        ivs += [(8 * i + 4, 8 * i + 6)] * 2
    ivs += [(0, 2)] * 2
    rep = IntervalRepresentation(ivs)
    return realize(rep), rep


def max_weight_dominating_vertex(spec: ThresholdSpec) -> int:
    """The heaviest vertex of a connected threshold graph (smallest id on ties)."""
    g = realize(spec)
    if not is_connected(g):
        raise DisconnectedGraphError("threshold graph is disconnected")
    v = max(range(g.n), key=lambda u: (spec.weights[u], -u))
    if not _dominates(g, [v]):
        raise AssertionError("maximum-weight vertex does not dominate")
    return v


def threshold_spec(g: Graph):
    """Weights realising ``g`` as a threshold graph, or ``None`` if it is not one.

    Peels isolated or dominating vertices from the remaining graph. The vertex
    peeled at step i gets weight ``±(n - i)``, positive when it dominated, and
    the threshold is 0, so earlier vertices decide each pair.
    """
    remaining = set(range(g.n))
    weights = [0] * g.n
    step = 0
    while remaining:
        left = len(remaining)
        pick = None
        for v in sorted(remaining):
            deg = len(g.adj[v] & remaining)
            if deg == 0:
                pick, sign = v, -1
                break
            if deg == left - 1:
                pick, sign = v, 1
                break
        if pick is None:
            return None
        weights[pick] = sign * (g.n - step)
        remaining.discard(pick)
        step += 1
    return ThresholdSpec(weights, 0)


# ---------------------------------------------------------- random generators


def _qualifies(g: Graph, min_deg: int, allow_complete: bool) -> bool:
    return is_connected(g) and min_degree(g) >= min_deg and (allow_complete or not is_complete(g))


def random_interval(rng: random.Random, n: int, span: int = 20, max_len: int = 8,
                    min_deg: int = 2, allow_complete: bool = False, tries: int = 10000):
    for _ in range(tries):
        ivs = []
        for _ in range(n):
            l = rng.randint(0, span)
            ivs.append((l, l + rng.randint(0, max_len)))
        rep = IntervalRepresentation(ivs)
        g = realize(rep)
        if _qualifies(g, min_deg, allow_complete):
            return g, rep
    raise RuntimeError("no qualifying interval graph generated")


def random_arc(rng: random.Random, n: int, grid: int = 24, max_len: int = 8,
               min_deg: int = 2, allow_complete: bool = False, need_cover: bool = True,
               tries: int = 10000):
    """Random circular-arc graph; with ``need_cover`` the arcs cover the circle."""
    for _ in range(tries):
        arcs = []
        for _ in range(n):
            s = rng.randrange(grid)
            e = (s + rng.randint(1, max_len)) % grid
            arcs.append((Fraction(s, grid), Fraction(e, grid)))
        rep = ArcRepresentation(arcs)
        g = realize(rep)
        if not _qualifies(g, min_deg, allow_complete):
            continue
        if need_cover and _circle_cover(rep) is None:
            continue
        return g, rep
    raise RuntimeError("no qualifying circular-arc graph generated")


def random_threshold(rng: random.Random, n: int, max_weight: int = 10,
                     min_deg: int = 2, allow_complete: bool = False, tries: int = 10000):
    for _ in range(tries):
        spec = ThresholdSpec([rng.randint(0, max_weight) for _ in range(n)],
                             rng.randint(1, 2 * max_weight))
        g = realize(spec)
        if _qualifies(g, min_deg, allow_complete):
            return g, spec
    raise RuntimeError("no qualifying threshold graph generated")


def random_chain(rng: random.Random, size_a: int, size_b: int, min_deg: int = 2):
    """Random connected chain graph; ``min_deg=2`` needs both sides of size >= 2."""
    if min_deg >= 2 and (size_a < 2 or size_b < 2):
        raise GraphError("a chain graph with minimum degree 2 needs |A|, |B| >= 2")
    ids = list(range(size_a + size_b))
    rng.shuffle(ids)
    a, b = ids[:size_a], ids[size_a:]
    low = max(1, min_deg)
    sizes = sorted(rng.randint(low, size_b) for _ in range(size_a))
    sizes[-1] = size_b
    if min_deg >= 2:
        sizes[-2] = size_b
    order = b[:]
    rng.shuffle(order)
    spec = ChainSpec(a, sorted(b), [frozenset(order[:s]) for s in sizes])
    return realize(spec), spec


def random_connected_graph(rng: random.Random, n: int, p: float = None, min_deg: int = 0,
                           tries: int = 100000) -> Graph:
    for _ in range(tries):
        q = rng.uniform(0.2, 0.9) if p is None else p
        g = Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < q])
        if is_connected(g) and min_degree(g) >= min_deg:
            return g
    raise RuntimeError("no qualifying random graph generated")


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a random Prüfer sequence."""
    if n <= 1:
        return Graph(n)
    if n == 2:
        return Graph(2, [(0, 1)])
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)])


def tree_from_prufer(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph(n, edges)


# ------------------------------------------------------------ named graphs


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star_graph(m: int) -> Graph:
    """K_{1,m} with centre 0."""
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def spider(legs: int, length: int) -> Graph:
    """``legs`` paths of ``length`` edges glued at centre 0."""
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
