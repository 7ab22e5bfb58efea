"""Two-way and two-way two-step dominating sets: classification and search."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from .errors import GraphError, SearchBudgetExceeded
from .graph import (
    Graph,
    component_mask,
    distances_from,
    is_mask_connected,
    mask_to_set,
    min_degree,
    pendant_vertices,
    require_connected,
)

TWO_WAY = "two-way"
TWO_WAY_TWO_STEP = "two-way-two-step"
KINDS = (TWO_WAY, TWO_WAY_TWO_STEP)

DEFAULT_MAX_VERTICES = 16


@dataclass(frozen=True)
class DominationCertificate:
    d: frozenset
    is_dominating: bool
    k_step_reach: float
    is_two_way: bool
    is_two_way_two_step: bool
    induced_connected: bool
    size: int
    size_bound: Fraction = None
    meets_size_bound: bool = None
    method: str = "classify"

    def certifies(self, kind: str) -> bool:
        """Whether ``d`` is a *connected* set of the given kind."""
        if kind == TWO_WAY:
            return self.is_two_way and self.induced_connected
        if kind == TWO_WAY_TWO_STEP:
            return self.is_two_way_two_step and self.induced_connected
        raise GraphError(f"unknown domination kind {kind!r}")


def size_bound(g: Graph) -> Fraction:
    """The bound 3n/(δ+1) - 2 on the smallest connected two-way two-step set."""
    return Fraction(3 * g.n, min_degree(g) + 1) - 2


def classify(g: Graph, d: Iterable[int]) -> DominationCertificate:
    require_connected(g, "classify")
    d = frozenset(d)
    if not d:
        raise GraphError("cannot classify an empty vertex set")
    for v in d:
        g.check_vertex(v)
    dist = distances_from(g, d)
    reach = max(dist)
    pendants_in = pendant_vertices(g) <= d
    n1 = {v for v in range(g.n) if dist[v] == 1}
    two_step_ok = reach <= 2 and all(
        len(g.adj[v] & n1) >= 2 for v in range(g.n) if dist[v] == 2
    )
    dmask = sum(1 << v for v in d)
    return DominationCertificate(
        d=d,
        is_dominating=reach <= 1,
        k_step_reach=reach,
        is_two_way=reach <= 1 and pendants_in,
        is_two_way_two_step=two_step_ok and pendants_in,
        induced_connected=is_mask_connected(g, dmask),
        size=len(d),
    )


def _checker(g: Graph, kind: str):
    """Predicate on vertex bitmasks for connected sets of ``kind``.

    Pendant membership is not tested; callers force pendants into every
    candidate. Cheap coverage tests run before connectivity.
    """
    full = (1 << g.n) - 1
    masks = g.masks

    def nbhd(s):
        out = 0
        while s:
            low = s & -s
            out |= masks[low.bit_length() - 1]
            s ^= low
        return out

    if kind == TWO_WAY:
        def check(dm):
            return (dm | nbhd(dm)) == full and is_mask_connected(g, dm)
    elif kind == TWO_WAY_TWO_STEP:
        def check(dm):
            n1 = nbhd(dm) & ~dm
            n2 = nbhd(n1) & ~dm & ~n1
            if dm | n1 | n2 != full:
                return False
            s = n2
            while s:
                low = s & -s
                if bin(masks[low.bit_length() - 1] & n1).count("1") < 2:
                    return False
                s ^= low
            return is_mask_connected(g, dm)
    else:
        raise GraphError(f"unknown domination kind {kind!r}")
    return check


def iter_sets_of_size(g: Graph, kind: str, size: int) -> Iterator[frozenset]:
    """All connected sets of ``kind`` with exactly ``size`` vertices.

    Pendant vertices are forced in; the remaining vertices are chosen in
    lexicographic order.
    """
    check = _checker(g, kind)
    forced = sorted(pendant_vertices(g))
    rest = [v for v in range(g.n) if v not in forced]
    extra = size - len(forced)
    if extra < 0:
        return
    base = sum(1 << v for v in forced)
    for combo in combinations(rest, extra):
        dm = base
        for v in combo:
            dm |= 1 << v
        if dm and check(dm):
            yield mask_to_set(dm)


def _budget(g: Graph, max_vertices: int) -> None:
    require_connected(g, "dominating-set search")
    if g.n > max_vertices:
        raise SearchBudgetExceeded(f"exact subset search limited to {max_vertices} vertices")


def all_minimum_sets(g: Graph, kind: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> list:
    """Every minimum-cardinality connected set of ``kind``, in enumeration order."""
    _budget(g, max_vertices)
    for size in range(1, g.n + 1):
        found = list(iter_sets_of_size(g, kind, size))
        if found:
            return found
    return []


def _min_of_kind(g: Graph, kind: str, max_vertices: int):
    _budget(g, max_vertices)
    for size in range(1, g.n + 1):
        for d in iter_sets_of_size(g, kind, size):
            return replace(classify(g, d), method="exact")
    return None


def min_connected_two_way_dominating(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES):
    return _min_of_kind(g, TWO_WAY, max_vertices)


def min_connected_two_way_two_step_dominating(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES):
    cert = _min_of_kind(g, TWO_WAY_TWO_STEP, max_vertices)
    if cert is not None and g.n >= 4:
        bound = size_bound(g)
        cert = replace(cert, size_bound=bound, meets_size_bound=cert.size <= bound)
    return cert


def _deficit(g: Graph, dm: int) -> int:
    """How far ``dm`` is from two-step domination with the two-neighbour rule."""
    dist = distances_from(g, mask_to_set(dm))
    n1 = {v for v in range(g.n) if dist[v] == 1}
    far = sum(1 for x in dist if x > 2)
    weak = sum(1 for v in range(g.n) if dist[v] == 2 and len(g.adj[v] & n1) < 2)
    return 2 * far + weak


def greedy_two_step_dominating(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES):
    """A connected two-way two-step dominating set by greedy growth and pruning.

    Pendants (or a maximum-degree vertex) seed the set, shortest paths join
    its pieces, frontier vertices are added while they reduce the deficit,
    then redundant vertices are dropped. If the result breaks the size bound
    and the graph is small enough, the exact minimum replaces it.
    """
    require_connected(g, "greedy_two_step_dominating")
    if g.n < 4:
        raise GraphError("greedy two-step domination is defined for n >= 4")
    check = _checker(g, TWO_WAY_TWO_STEP)
    pend = pendant_vertices(g)
    dm = sum(1 << v for v in pend)
    if not dm:
        dm = 1 << max(range(g.n), key=lambda v: (len(g.adj[v]), -v))
    dm = _connect(g, dm)
    while not check(dm):
        frontier = [v for v in range(g.n) if not dm >> v & 1 and g.masks[v] & dm]
        v = min(frontier, key=lambda u: (_deficit(g, dm | 1 << u), -len(g.adj[u]), u))
        dm |= 1 << v
    for v in sorted(mask_to_set(dm), reverse=True):
        if v in pend:
            continue
        trial = dm & ~(1 << v)
        if trial and check(trial):
            dm = trial
    bound = size_bound(g)
    cert = replace(classify(g, mask_to_set(dm)), method="greedy")
    if cert.size > bound and g.n <= max_vertices:
        cert = replace(min_connected_two_way_two_step_dominating(g, max_vertices), method="exact")
    return replace(cert, size_bound=bound, meets_size_bound=cert.size <= bound)


def _connect(g: Graph, dm: int) -> int:
    """Grow ``dm`` along shortest paths until it induces a connected subgraph."""
    while not is_mask_connected(g, dm):
        start = (dm & -dm).bit_length() - 1
        comp = component_mask(g, start, dm)
        # BFS from the component until another part of dm is hit
        prev = {}
        frontier = comp
        seen = comp
        hit = None
        while frontier and hit is None:
            nxt_frontier = 0
            f = frontier
            while f and hit is None:
                low = f & -f
                v = low.bit_length() - 1
                f ^= low
                for w in sorted(g.adj[v]):
                    if seen >> w & 1:
                        continue
                    prev[w] = v
                    if dm >> w & 1:
                        hit = w
                        break
                    seen |= 1 << w
                    nxt_frontier |= 1 << w
            frontier = nxt_frontier
        v = prev[hit]
        while not comp >> v & 1:
            dm |= 1 << v
            v = prev[v]
    return dm
