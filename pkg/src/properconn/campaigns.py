"""Verification campaigns: run one bound or identity over a corpus of graphs.

Each registered check filters the corpus to its hypothesis and tests its
conclusion with the exact solver, the constructions and the domination
searches. Theorem ids (``C3.1``, ``T4.2``, ...) are the CLI's names for the
checks; :data:`THEOREMS` maps each to a one-line description.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import classes
from .classes import (
    ArcRepresentation,
    IntervalRepresentation,
    ThresholdSpec,
    dominating_cycle_circular_arc,
    dominating_path_interval,
    find_asteroidal_triple,
    hamiltonian_path,
    is_chain_graph,
    max_weight_dominating_vertex,
)
from .constructions import (
    color_circular_arc,
    color_from_dominating,
    color_from_two_step_dominating,
    color_interval,
    color_traceable,
    color_tree,
)
from .domination import TWO_WAY, TWO_WAY_TWO_STEP, all_minimum_sets, size_bound
from .domination import min_connected_two_way_two_step_dominating
from .errors import GraphError, SearchBudgetExceeded
from .exact import DEFAULT_MAX_NODES, pc_exact, upper_bound_coloring
from .graph import (
    Graph,
    diameter,
    induced_subgraph,
    is_complete,
    is_connected,
    is_tree,
    max_degree,
    min_degree,
)
from .io import enumerate_connected_graphs, read_graph6_lines, to_graph6


@dataclass
class Instance:
    graph: Graph
    rep: object = None
    tag: str = ""
    partner: Graph = None  # spanning subgraph for monotonicity pairs


@dataclass
class CampaignReport:
    theorem: str
    corpus: str
    considered: int = 0
    instances: int = 0
    violations: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    wall_time: float = 0.0
    timings: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.errors

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "theorem": self.theorem,
            "description": THEOREMS[self.theorem].description,
            "corpus": self.corpus,
            "considered": self.considered,
            "instances_checked": self.instances,
            "violations": self.violations,
            "errors": self.errors,
            "passed": self.passed,
        }
        if include_timing:
            out["wall_time_s"] = round(self.wall_time, 6)
            out["instance_times_s"] = [round(t, 6) for t in self.timings]
        return out


class Skip(Exception):
    """Instance does not satisfy the check's hypothesis."""


def _pc(g: Graph, budget: int = DEFAULT_MAX_NODES) -> int:
    return pc_exact(g, max_nodes=budget).value


def _pc_or_zero(g: Graph, budget: int = DEFAULT_MAX_NODES) -> int:
    return 0 if g.n == 1 else _pc(g, budget)


def _need(cond: bool) -> None:
    if not cond:
        raise Skip


def _proper_class_graph(g: Graph) -> None:
    _need(is_connected(g) and g.n >= 2 and not is_complete(g) and min_degree(g) >= 2)


# ------------------------------------------------------------------- checks
# Each check returns None when the conclusion holds, else a details dict.


def check_paths(inst, budget=DEFAULT_MAX_NODES):
    g = inst.graph
    _need(is_tree(g) and g.n >= 3 and max_degree(g) == 2)
    value = _pc(g, budget)
    return None if value == 2 else {"pc": value}


def check_monotone(inst, budget=DEFAULT_MAX_NODES):
    g, h = inst.graph, inst.partner
    _need(h is not None and is_connected(g) and g.n >= 2)
    pg, ph = _pc(g, budget), _pc(h, budget)
    return None if pg <= ph else {"pc_g": pg, "pc_h": ph, "h": to_graph6(h)}


def check_traceable(inst, budget=DEFAULT_MAX_NODES):
    g = inst.graph
    _need(is_connected(g) and g.n >= 2 and not is_complete(g))
    ham = hamiltonian_path(g)
    _need(ham is not None)
    value = _pc(g, budget)
    out = color_traceable(g, ham)
    if value == 2 and out.verified and out.colors_used <= 2:
        return None
    return {"pc": value, "construction_colors": out.colors_used}


def check_trees(inst, budget=DEFAULT_MAX_NODES):
    g = inst.graph
    _need(is_tree(g) and g.n >= 2)
    delta = max_degree(g)
    value = _pc(g, budget)
    out = color_tree(g)
    if value == delta and out.colors_used == delta and out.verified:
        return None
    return {"pc": value, "max_degree": delta, "construction_colors": out.colors_used}


def _dominating_bound(inst, kind, build, budget):
    g = inst.graph
    _need(is_connected(g) and g.n >= 2)
    value = _pc(g, budget)
    bad = []
    for d in all_minimum_sets(g, kind):
        sub, _ = induced_subgraph(g, d)
        if len(d) == 1:
            k, core = 0, None
        else:
            res = pc_exact(sub, max_nodes=budget)
            k, core = res.value, res.certificate
        out = build(g, d, d_coloring=core)
        if value > k + 2 or out.colors_used > k + 2 or not out.verified:
            bad.append({"d": sorted(d), "pc_d": k, "construction_colors": out.colors_used})
    return {"pc": value, "sets": bad} if bad else None


def check_two_step_bound(inst, budget=DEFAULT_MAX_NODES):
    return _dominating_bound(inst, TWO_WAY_TWO_STEP, color_from_two_step_dominating, budget)


def check_two_way_bound(inst, budget=DEFAULT_MAX_NODES):
    return _dominating_bound(inst, TWO_WAY, color_from_dominating, budget)


def check_diameter_two(inst, budget=DEFAULT_MAX_NODES):
    g = inst.graph
    _need(is_connected(g) and g.n >= 2 and diameter(g) == 2 and min_degree(g) >= 2)
    value = _pc(g, budget)
    return None if value == 2 else {"pc": value}


def check_chain(inst, budget=DEFAULT_MAX_NODES):
    g = inst.graph
    _need(is_connected(g) and g.n >= 2 and min_degree(g) >= 2)
    spec = inst.rep if isinstance(inst.rep, classes.ChainSpec) else is_chain_graph(g)
    _need(spec is not None)
    value = _pc(g, budget)
    out = color_from_two_step_dominating(g, [spec.b1])
    if value == 2 and out.colors_used <= 2:
        return None
    return {"pc": value, "construction_colors": out.colors_used, "b1": spec.b1}


def check_size_bound(inst, budget=DEFAULT_MAX_NODES):
    g = inst.graph
    _need(is_connected(g) and g.n >= 4)
    cert = min_connected_two_way_two_step_dominating(g)
    bound = size_bound(g)
    return None if cert.size <= bound else {"size": cert.size, "bound": str(bound)}


def check_degree_bound(inst, budget=DEFAULT_MAX_NODES):
    g = inst.graph
    _need(is_connected(g) and g.n >= 4)
    bound = Fraction(3 * g.n, min_degree(g) + 1) - 1
    # a verified colouring within the bound settles pc <= bound exactly
    if upper_bound_coloring(g).num_colors <= bound:
        return None
    value = _pc(g, budget)
    return None if value <= bound else {"pc": value, "bound": str(bound)}


def _class_bound(inst, rep_type, spine, budget):
    g = inst.graph
    _need(isinstance(inst.rep, rep_type))
    _proper_class_graph(g)
    value = _pc(g, budget)
    d = spine(inst.rep).vertices
    sub, _ = induced_subgraph(g, d)
    k = _pc_or_zero(sub, budget)
    out = color_from_dominating(g, d)
    if value <= 4 and out.colors_used <= min(k + 2, 4):
        return None
    return {"pc": value, "spine": list(d), "construction_colors": out.colors_used}


def check_interval_four(inst, budget=DEFAULT_MAX_NODES):
    return _class_bound(inst, IntervalRepresentation, dominating_path_interval, budget)


def check_arc_four(inst, budget=DEFAULT_MAX_NODES):
    return _class_bound(inst, ArcRepresentation, dominating_cycle_circular_arc, budget)


def check_at_free(inst, budget=DEFAULT_MAX_NODES):
    g = inst.graph
    _proper_class_graph(g)
    _need(find_asteroidal_triple(g) is None)
    value = _pc(g, budget)
    return None if value <= 4 else {"pc": value}


def check_threshold(inst, budget=DEFAULT_MAX_NODES):
    g = inst.graph
    _proper_class_graph(g)
    spec = inst.rep if isinstance(inst.rep, ThresholdSpec) else classes.threshold_spec(g)
    _need(spec is not None)
    v = max_weight_dominating_vertex(spec)
    value = _pc(g, budget)
    out = color_from_dominating(g, [v])
    if value == 2 and out.colors_used <= 2:
        return None
    return {"pc": value, "construction_colors": out.colors_used}


def check_three_colors(inst, budget=DEFAULT_MAX_NODES):
    g = inst.graph
    if isinstance(inst.rep, IntervalRepresentation):
        build = color_interval
    elif isinstance(inst.rep, ArcRepresentation):
        build = color_circular_arc
    else:
        raise Skip
    _proper_class_graph(g)
    value = _pc(g, budget)
    out = build(g, inst.rep)
    details = {"pc": value, "construction_colors": out.colors_used, "method": out.method}
    if inst.tag.startswith("sharp"):
        return None if value == 3 and out.colors_used <= 3 else details
    return None if value <= 3 and out.colors_used <= 3 else details


# ------------------------------------------------------------------ corpora


def all_connected(n_min: int, n_max: int) -> Iterator[Instance]:
    for n in range(n_min, n_max + 1):
        for g in enumerate_connected_graphs(n):
            yield Instance(g)


def random_graphs(count: int, n_min: int, n_max: int, seed: int) -> Iterator[Instance]:
    rng = random.Random(seed)
    for _ in range(count):
        yield Instance(classes.random_connected_graph(rng, rng.randint(n_min, n_max)))


def random_trees(count: int, n_min: int, n_max: int, seed: int) -> Iterator[Instance]:
    """``count`` distinct labelled trees from random Prüfer sequences."""
    rng = random.Random(seed)
    seen = set()
    while len(seen) < count:
        t = classes.random_tree(rng, rng.randint(n_min, n_max))
        if t not in seen:
            seen.add(t)
            yield Instance(t)


def random_spanning_subgraph(rng: random.Random, g: Graph) -> Graph:
    """A random spanning tree of ``g`` plus a random subset of the other edges."""
    order = list(g.edges)
    rng.shuffle(order)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    keep = []
    rest = []
    for u, v in order:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            keep.append((u, v))
        else:
            rest.append((u, v))
    p = rng.random()
    keep += [e for e in rest if rng.random() < p]
    return Graph(g.n, keep)


def monotone_pairs(base: Iterable[Instance], seed: int) -> Iterator[Instance]:
    rng = random.Random(seed)
    for inst in base:
        if is_connected(inst.graph):
            yield Instance(inst.graph, partner=random_spanning_subgraph(rng, inst.graph))


def generated(kind: str, count: int, n_min: int, n_max: int, seed: int) -> Iterator[Instance]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        if kind == "interval":
            g, rep = classes.random_interval(rng, n)
        elif kind == "arc":
            g, rep = classes.random_arc(rng, n)
        elif kind == "threshold":
            g, rep = classes.random_threshold(rng, n)
        elif kind == "chain":
            g, rep = classes.random_chain(rng, rng.randint(2, 6), rng.randint(2, 6))
        elif kind == "at-free":
            while True:
                g = classes.random_connected_graph(rng, n, min_deg=2)
                if not is_complete(g) and find_asteroidal_triple(g) is None:
                    break
            rep = None
        else:
            raise GraphError(f"unknown generated family {kind!r}")
        yield Instance(g, rep, kind)


def sharpness_instances(ts=(2, 3)) -> Iterator[Instance]:
    for t in ts:
        g, rep = classes.sharpness_family_interval(t)
        yield Instance(g, rep, f"sharp-t{t}")


def graph6_corpus(path: str) -> Iterator[Instance]:
    with open(path, "rb") as fh:
        data = fh.read()
    for g in read_graph6_lines(data):
        yield Instance(g)


def _chain(*parts):
    for p in parts:
        yield from p


# ----------------------------------------------------------------- registry


@dataclass(frozen=True)
class Theorem:
    check: Callable
    description: str
    default_corpus: Callable  # (seed) -> (description, iterator)
    n_corpus: Callable = None  # (n, seed) -> (description, iterator)


def _all(n_min):
    return lambda n, seed: (f"all connected labelled graphs, {n_min}<=n<={n}",
                            all_connected(n_min, n))


def _gen(kind, count):
    return lambda n, seed: (f"{count} random {kind} graphs, n<={n}, seed={seed}",
                            generated(kind, count, 4, n, seed))


THEOREMS = {
    "L2.1": Theorem(
        check_paths, "pc(P) = 2 for every path on at least 3 vertices",
        lambda seed: ("paths P3..P8", (Instance(classes.path_graph(n)) for n in range(3, 9))),
        _all(3),
    ),
    "L2.2": Theorem(
        check_monotone, "pc(G) <= pc(H) for every connected spanning subgraph H",
        lambda seed: (f"300 random (G, H) pairs, n<=7, seed={seed}",
                      monotone_pairs(random_graphs(300, 2, 7, seed), seed + 1)),
        lambda n, seed: (f"all connected graphs n<={n}, one random H each, seed={seed}",
                         monotone_pairs(all_connected(2, n), seed)),
    ),
    "L2.3": Theorem(
        check_traceable, "pc(G) = 2 for traceable non-complete G",
        lambda seed: ("all connected labelled graphs, 3<=n<=6", all_connected(3, 6)),
        _all(3),
    ),
    "P1": Theorem(
        check_trees, "pc(T) = max degree for every tree T on at least 2 vertices",
        lambda seed: (f"500 distinct random Prufer trees, n<=9, seed={seed}",
                      random_trees(500, 2, 9, seed)),
        lambda n, seed: (f"500 distinct random Prufer trees, n<={n}, seed={seed}",
                         random_trees(500, 2, n, seed)),
    ),
    "T3.1": Theorem(
        check_two_step_bound,
        "pc(G) <= pc(G[D]) + 2 for every minimum connected two-way two-step dominating D",
        lambda seed: (f"1000 random connected graphs, 3<=n<=7, seed={seed}",
                      random_graphs(1000, 3, 7, seed)),
        _all(2),
    ),
    "C3.1": Theorem(
        check_diameter_two, "pc(G) = 2 when diam(G) = 2 and min degree >= 2",
        lambda seed: ("all connected labelled graphs, 3<=n<=6", all_connected(3, 6)),
        _all(3),
    ),
    "C3.2": Theorem(
        check_chain, "pc(G) = 2 for connected chain graphs with min degree >= 2",
        lambda seed: (f"100 random chain graphs, |A|,|B|<=6, seed={seed}",
                      generated("chain", 100, 4, 12, seed)),
        _all(4),
    ),
    "L2.4": Theorem(
        check_size_bound,
        "smallest connected two-way two-step dominating set has size <= 3n/(delta+1) - 2",
        lambda seed: (f"500 random connected graphs, 4<=n<=8, seed={seed}",
                      random_graphs(500, 4, 8, seed)),
        _all(4),
    ),
    "C3.3": Theorem(
        check_degree_bound, "pc(G) <= 3n/(delta+1) - 1 for n >= 4",
        lambda seed: ("all connected labelled graphs, 4<=n<=6", all_connected(4, 6)),
        _all(4),
    ),
    "T4.1": Theorem(
        check_two_way_bound,
        "pc(G) <= pc(G[D]) + 2 for every minimum connected two-way dominating D",
        lambda seed: (f"1000 random connected graphs, 3<=n<=7, seed={seed}",
                      random_graphs(1000, 3, 7, seed)),
        _all(2),
    ),
    "C4.2i": Theorem(
        check_interval_four, "pc(G) <= 4 for interval graphs (non-complete, min degree >= 2)",
        lambda seed: _gen("interval", 50)(9, seed), _gen("interval", 50),
    ),
    "C4.2ii": Theorem(
        check_at_free, "pc(G) <= 4 for AT-free graphs (non-complete, min degree >= 2)",
        lambda seed: _gen("at-free", 50)(8, seed), _all(4),
    ),
    "C4.2iii": Theorem(
        check_arc_four, "pc(G) <= 4 for circular-arc graphs (non-complete, min degree >= 2)",
        lambda seed: _gen("arc", 50)(9, seed), _gen("arc", 50),
    ),
    "C4.2iv": Theorem(
        check_threshold, "pc(G) = 2 for threshold graphs (non-complete, min degree >= 2)",
        lambda seed: _gen("threshold", 50)(9, seed), _all(4),
    ),
    "T4.2": Theorem(
        check_three_colors,
        "pc(G) <= 3 for interval and circular-arc graphs with min degree >= 2; 3 is attained",
        lambda seed: (f"sharpness family t=2,3 + 50 interval + 50 arc graphs, n<=9, seed={seed}",
                      _chain(sharpness_instances(),
                             generated("interval", 50, 4, 9, seed),
                             generated("arc", 50, 4, 9, seed + 1))),
        lambda n, seed: (f"50 interval + 50 arc graphs, n<={n}, seed={seed}",
                         _chain(generated("interval", 50, 4, n, seed),
                                generated("arc", 50, 4, n, seed + 1))),
    ),
}


def resolve_corpus(theorem: str, n: int = None, corpus_file: str = None, seed: int = 0):
    """``(description, iterator of Instance)`` for a theorem and corpus choice."""
    spec = THEOREMS[theorem]
    if corpus_file is not None:
        source = graph6_corpus(corpus_file)
        if theorem == "L2.2":
            source = monotone_pairs(source, seed)
        return f"graph6 file {corpus_file}", source
    if n is not None:
        return spec.n_corpus(n, seed)
    return spec.default_corpus(seed)


def run_campaign(theorem: str, n: int = None, corpus_file: str = None, seed: int = 0,
                 max_nodes: int = DEFAULT_MAX_NODES, corpus=None) -> CampaignReport:
    """Check ``theorem`` on every corpus instance satisfying its hypothesis.

    ``corpus`` may be given directly as ``(description, iterable of Instance)``.
    Budget exhaustion on an instance is recorded under ``errors``, never as a pass.
    """
    if theorem not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem!r}; known: {', '.join(THEOREMS)}")
    desc, source = corpus if corpus is not None else resolve_corpus(theorem, n, corpus_file, seed)
    report = CampaignReport(theorem, desc)
    check = THEOREMS[theorem].check
    start = time.perf_counter()
    for inst in source:
        report.considered += 1
        t0 = time.perf_counter()
        try:
            details = check(inst, max_nodes)
        except Skip:
            continue
        except SearchBudgetExceeded as exc:
            report.errors.append({"graph": to_graph6(inst.graph), "error": str(exc)})
            continue
        report.instances += 1
        report.timings.append(time.perf_counter() - t0)
        if details is not None:
            report.violations.append({"graph": to_graph6(inst.graph), "tag": inst.tag, **details})
    report.wall_time = time.perf_counter() - start
    return report
