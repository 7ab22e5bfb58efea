"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every criterion is exact (no numeric tolerance); each also has a wall-clock
limit, asserted alongside the result. Run alone with
``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import random
import time
from contextlib import contextmanager

import pytest

from oracles import proper_path_exists
from properconn.campaigns import generated, run_campaign
from properconn.classes import (
    complete_graph,
    path_graph,
    random_connected_graph,
    sharpness_family_interval,
    star_graph,
)
from properconn.coloring import EdgeColoring, find_proper_path, is_proper_path, is_proper_path_coloring
from properconn.constructions import color_interval
from properconn.exact import pc_exact

_SEED = 2024


@contextmanager
def criterion(number, title, limit_s, request=None):
    """Time the body, then print one PASS/FAIL line even when pytest captures output."""
    state = {"ok": False, "detail": ""}
    start = time.perf_counter()
    try:
        yield state
    finally:
        elapsed = time.perf_counter() - start
        ok = state["ok"] and elapsed < limit_s
        line = (f"[acceptance {number:>2}] {'PASS' if ok else 'FAIL'} {title}: "
                f"{state['detail']} ({elapsed:.1f}s, limit {limit_s:.0f}s)")
        capman = request.config.pluginmanager.getplugin("capturemanager") if request else None
        if capman is not None:
            with capman.global_and_fixture_disabled():
                print("\n" + line)
        else:
            print(line)
    assert state["ok"], line
    assert elapsed < limit_s, line


def _campaign(state, tid, seed=_SEED, min_instances=1):
    report = run_campaign(tid, seed=seed)
    state["detail"] += (f"{tid}: {report.instances} checked, {len(report.violations)} violations, "
                        f"{len(report.errors)} errors; ")
    return report.passed and report.instances >= min_instances


def test_criterion_01_characterized_values(request):
    with criterion(1, "pc(K_n)=1, pc(K_1,m)=m, pc(P_n)=2", 60, request) as st:
        values = {f"K{n}": (pc_exact(complete_graph(n)).value, 1) for n in range(3, 7)}
        values.update({f"K1,{m}": (pc_exact(star_graph(m)).value, m) for m in range(2, 6)})
        values.update({f"P{n}": (pc_exact(path_graph(n)).value, 2) for n in range(3, 9)})
        wrong = {k: v for k, v in values.items() if v[0] != v[1]}
        st["ok"] = not wrong
        st["detail"] = f"{len(values)} graphs, mismatches {wrong}"


def test_criterion_02_trees(request):
    with criterion(2, "pc(T) = max degree on 500 distinct Prufer trees, n <= 9", 300, request) as st:
        st["ok"] = _campaign(st, "P1", min_instances=500)


def test_criterion_03_diameter_two(request):
    with criterion(3, "diam 2 and min degree >= 2 gives pc = 2, all graphs n <= 6", 600, request) as st:
        # 9 + 252 + 9387 labelled graphs on 4, 5, 6 vertices meet the hypothesis
        st["ok"] = _campaign(st, "C3.1", min_instances=9648)


def test_criterion_04_chain_graphs(request):
    with criterion(4, "chain graphs: pc = 2 and D={b1} construction uses <= 2", 300, request) as st:
        st["ok"] = _campaign(st, "C3.2", min_instances=100)


def test_criterion_05_min_degree_bound(request):
    with criterion(5, "pc <= 3n/(delta+1) - 1, all graphs 4 <= n <= 6", 900, request) as st:
        st["ok"] = _campaign(st, "C3.3", min_instances=38 + 728 + 26704)


def test_criterion_06_dominating_set_bounds(request):
    with criterion(6, "pc(G) <= pc(G[D]) + 2 for both kinds, 1000 graphs n <= 7", 1200, request) as st:
        ok_two_step = _campaign(st, "T3.1", min_instances=1000)
        ok_two_way = _campaign(st, "T4.1", min_instances=1000)
        st["ok"] = ok_two_step and ok_two_way


def test_criterion_07_size_bound(request):
    with criterion(7, "min two-way two-step set <= 3n/(delta+1) - 2, 500 graphs", 600, request) as st:
        st["ok"] = _campaign(st, "L2.4", min_instances=500)


def test_criterion_08_interval_sharpness(request):
    with criterion(8, "sharpness family pc = 3 exactly; color_interval <= 3", 900, request) as st:
        exact = []
        for t in (2, 3):
            g, rep = sharpness_family_interval(t)
            res = pc_exact(g)
            out = color_interval(g, rep)
            exact.append(res.value == 3 and res.exhausted_below
                         and res.certificate.num_colors == 3
                         and bool(is_proper_path_coloring(g, res.certificate))
                         and out.verified and out.colors_used <= 3)
        colored = 0
        for inst in generated("interval", 50, 4, 10, _SEED):
            out = color_interval(inst.graph, inst.rep)
            colored += out.verified and out.colors_used <= 3 and bool(
                is_proper_path_coloring(inst.graph, out.coloring))
        st["ok"] = all(exact) and colored == 50
        st["detail"] = f"sharpness t=2,3 exact {exact}; {colored}/50 random interval graphs within 3"


def test_criterion_09_class_bounds(request):
    with criterion(9, "interval/arc pc <= 4, threshold pc = 2, AT-free pc <= 4", 1200, request) as st:
        results = [_campaign(st, tid, min_instances=50)
                   for tid in ("C4.2i", "C4.2iii", "C4.2iv", "C4.2ii")]
        st["ok"] = all(results)


def test_criterion_10_monotonicity(request):
    with criterion(10, "pc(G) <= pc(H) on 300 spanning-subgraph pairs", 600, request) as st:
        st["ok"] = _campaign(st, "L2.2", min_instances=300)


def test_criterion_11_oracle_equivalence(request):
    with criterion(11, "find_proper_path agrees with simple-path enumeration", 120, request) as st:
        rng = random.Random(_SEED)
        agree = 0
        for _ in range(1000):
            n = rng.randint(2, 7)
            while True:
                g = random_connected_graph(rng, n)
                if g.m <= 10:
                    break
            k = rng.randint(1, 3)
            colors = [rng.randint(1, k) for _ in range(g.m)]
            c = EdgeColoring(g, colors)
            u, v = rng.sample(range(n), 2)
            w = find_proper_path(g, c, u, v)
            truth = proper_path_exists(g, colors, u, v)
            valid = w is None or (is_proper_path(g, c, w.vertices)
                                  and (w.vertices[0], w.vertices[-1]) == (u, v))
            agree += (w is not None) == truth and valid
        st["ok"] = agree == 1000
        st["detail"] = f"{agree}/1000 triples agree"


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
