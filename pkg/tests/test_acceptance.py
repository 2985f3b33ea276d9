"""One test per acceptance criterion; each prints a PASS/FAIL line in the
terminal summary via ``conftest.ACCEPTANCE``."""

import itertools
import math
import time

import numpy as np

import conftest
from oracles import PUBLISHED_BOUNDS, dihedral_informed_sets, unpruned_broadcast_time

from broadcastnet.bounds import bound_table, moore_bound
from broadcastnet.broadcast import (
    FixedOrder,
    broadcast_time_under_scheme,
    simulate,
    theorem1_scheme,
    validate_trace,
)
from broadcastnet.catalog import catalog_verify, load_catalog, seed_catalog
from broadcastnet.cayley import build_cayley, named_graph, product_with_k2
from broadcastnet.exact import (
    exact_broadcast_time,
    greedy_upper_bound,
    log2_lower_bound,
)
from broadcastnet.families import cycle_family, dihedral_family, hypercube_family, product_witness
from broadcastnet.groups import (
    Cyclic,
    Dihedral,
    Product,
    Semidirect,
    Z2Pow,
    parse_elements,
    validate_generators,
)
from broadcastnet.search import find_permutation_scheme, search

PERM_SEED = 0
PERM_BUDGET = 10**6


def report(name, ok, detail):
    conftest.ACCEPTANCE.append((name, bool(ok), detail))
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    assert ok, detail


def test_criterion_1_bound_table():
    start = time.perf_counter()
    tab = bound_table(10, 10)
    elapsed = time.perf_counter() - start
    got = {d: [int(tab[d, t]) for t in range(2, 11)] for d in range(2, 11)}
    ok = got == PUBLISHED_BOUNDS and tab[3, 4] == 14 and tab[5, 8] == 232 and tab[10, 10] == 1024 and elapsed < 1
    report("1 bound table", ok, f"81 entries {'match' if got == PUBLISHED_BOUNDS else 'DIFFER'}, {elapsed:.3f}s (< 1s)")


def test_criterion_2_dihedral_family():
    start = time.perf_counter()
    bad = []
    for delta in range(2, 11):
        w = dihedral_family(delta)
        cg = build_cayley(w.group, w.generators)
        tr = simulate(cg, theorem1_scheme(delta))
        sets = tr.informed_sets()
        ok = (
            tr.completion_round == delta + 1
            and cg.order == 2 ** (delta + 1) - 2 == moore_bound(delta, delta + 1)
            and cg.graph.max_degree == delta == min(len(a) for a in cg.graph.adj)
            and validate_trace(cg.graph, tr).valid
            and all({cg.element(v) for v in sets[k]} == dihedral_informed_sets(delta, k) for k in range(1, delta + 1))
        )
        if not ok:
            bad.append(delta)
    elapsed = time.perf_counter() - start
    report("2 dihedral family", not bad and elapsed < 5,
           f"delta 2..10, failures {bad or 'none'}, {elapsed:.2f}s (< 5s)")


def test_criterion_3_hypercubes():
    start = time.perf_counter()
    bad = []
    for delta in range(1, 11):
        w = hypercube_family(delta)
        cg = build_cayley(w.group, w.generators)
        rounds = broadcast_time_under_scheme(cg, FixedOrder())
        if not (cg.order == 2**delta == moore_bound(delta, delta) and rounds == delta):
            bad.append(delta)
    elapsed = time.perf_counter() - start
    report("3 hypercubes", not bad and elapsed < 5,
           f"delta 1..10, failures {bad or 'none'}, {elapsed:.2f}s (< 5s)")


def test_criterion_4_example_156():
    G = Semidirect(12, 13, 2)
    gens = parse_elements(G, "(7,1),(5,7),(6,0)")
    rep = validate_generators(G, gens)
    cg = build_cayley(G, gens)
    regular = all(len(a) == 3 for a in cg.graph.adj)
    scheme, samples = find_permutation_scheme(G, gens, 10, budget=PERM_BUDGET, seed=PERM_SEED)
    rounds = broadcast_time_under_scheme(cg, scheme) if scheme else None
    ok = (cg.order == 156 and regular and cg.graph.is_connected() and rep.valid and rep.inverse_closed
          and rounds is not None and rounds <= 10 and samples <= PERM_BUDGET)
    report("4 order-156 example", ok,
           f"order {cg.order}, 3-regular {regular}, scheme in {rounds} rounds after {samples} samples (seed {PERM_SEED})")


def test_criterion_5_exact_solver():
    results = {}
    slowest = 0.0

    def timed(name, g):
        nonlocal slowest
        start = time.perf_counter()
        results[name] = exact_broadcast_time(g)
        slowest = max(slowest, time.perf_counter() - start)

    timed("petersen", named_graph("petersen"))
    timed("Q3", build_cayley(Z2Pow(3), Z2Pow(3).basis()).graph)
    for n in range(3, 13):
        timed(f"C{n}", named_graph(f"cycle({n})"))
    oracle_ok = all(unpruned_broadcast_time(named_graph(f"cycle({n})").adj, 0) == math.ceil(n / 2)
                    for n in range(3, 11))
    ok = (results["petersen"] == 4 and results["Q3"] == 3 and oracle_ok and slowest < 10
          and all(results[f"C{n}"] == math.ceil(n / 2) for n in range(3, 13)))
    report("5 exact solver", ok,
           f"b(petersen)={results['petersen']}, b(Q3)={results['Q3']}, cycles 3..12 = ceil(n/2), "
           f"oracle n<=10 {'agrees' if oracle_ok else 'DISAGREES'}, slowest {slowest:.2f}s (< 10s)")


def test_criterion_6_product_and_cycles():
    bases = {
        "K2": build_cayley(Cyclic(2), [1]).graph,
        "C4": named_graph("cycle(4)"),
        "Q3": build_cayley(Z2Pow(3), Z2Pow(3).basis()).graph,
        "petersen": named_graph("petersen"),
    }
    details = []
    ok = True
    for name, g in bases.items():
        b, bp = exact_broadcast_time(g), exact_broadcast_time(product_with_k2(g))
        ok &= bp <= b + 1
        details.append(f"{name} {b}->{bp}")
    cyc = {t: broadcast_time_under_scheme(build_cayley(Cyclic(2 * t), [1, 2 * t - 1]), FixedOrder())
           for t in range(2, 11)}
    ok &= all(cyc[t] == t for t in cyc)
    report("6 product with K2 / delta=2 row", ok,
           ", ".join(details) + f"; C_2t fixed order in t rounds for t=2..10: {all(cyc[t] == t for t in cyc)}")


def _small_groups(max_order):
    out = [Cyclic(n) for n in range(1, max_order + 1)]
    out += [Dihedral(n) for n in range(1, max_order // 2 + 1)]
    out += [Z2Pow(r) for r in range(1, 8) if 2**r <= max_order]
    out += [Product(Cyclic(a), Cyclic(b)) for a in range(2, 7) for b in range(2, 7) if a * b <= max_order]
    out += [Product(Dihedral(3), Cyclic(2)), Product(Z2Pow(2), Dihedral(3))]
    out += [Semidirect(m, n, g) for m in range(1, max_order + 1) for n in range(1, max_order // m + 1)
            for g in range(1, max(n, 2)) if math.gcd(g, n) == 1 and pow(g, m, n) == 1 % n]
    return [G for G in out if G.order <= max_order]


def _group_laws():
    bad = []
    for G in _small_groups(24):
        els = list(G.iter_elements())
        if any(G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)) for a, b, c in itertools.product(els, repeat=3)):
            bad.append(f"assoc {G.text}")
    for G in _small_groups(200):
        e = G.identity()
        if any(G.mul(e, a) != a or G.mul(a, e) != a or G.mul(a, G.inv(a)) != e for a in G.iter_elements()):
            bad.append(f"inverse {G.text}")
    for m in range(1, 501):
        for n in range(1, 500 // m + 1):
            for g in range(1, max(n, 2)):
                if math.gcd(g, n) != 1 or pow(g, m, n) != 1 % n:
                    continue
                S = Semidirect(m, n, g)
                act = np.array([[S.action(a, x) for x in range(n)] for a in range(m)])
                a, b = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
                # act[a][act[b][x]] against act[a+b][x], for every a, b, x at once
                if not np.array_equal(act[a[..., None], act[b]], act[(a + b) % m]):
                    bad.append(f"hom {S.text}")
    return bad


def _trace_graphs():
    ws = [dihedral_family(d) for d in range(2, 9)] + [hypercube_family(d) for d in range(1, 9)]
    ws += [cycle_family(t) for t in range(2, 11)]
    ws += [product_witness(w) for w in (dihedral_family(3), hypercube_family(3), cycle_family(4))]
    for w in ws:
        yield build_cayley(w.group, w.generators), w.scheme
    G = Semidirect(12, 13, 2)
    yield build_cayley(G, parse_elements(G, "(7,1),(5,7),(6,0)")), FixedOrder()


def test_criterion_7_property_suites():
    trace_bad = []
    for cg, scheme in _trace_graphs():
        for origin in sorted({0, cg.order // 2, cg.order - 1}):
            tr = simulate(cg, scheme, origin)
            if not validate_trace(cg.graph, tr).valid or any(
                    len(s) > 2**i for i, s in enumerate(tr.informed_sets())):
                trace_bad.append(cg.graph.name)
    sandwich_bad = []
    small = [(cg, s) for cg, s in _trace_graphs() if cg.order <= 20]
    for cg, scheme in small:
        lo, ex, gr = log2_lower_bound(cg.graph), exact_broadcast_time(cg.graph), greedy_upper_bound(cg.graph)
        sc = broadcast_time_under_scheme(cg, scheme)
        if not (lo <= ex <= gr and (sc is None or gr <= sc)):
            sandwich_bad.append((cg.graph.name, lo, ex, gr, sc))
    for g in [named_graph("petersen")] + [named_graph(f"cycle({n})") for n in range(3, 13)]:
        lo, ex, gr = log2_lower_bound(g), exact_broadcast_time(g), greedy_upper_bound(g)
        if not lo <= ex <= gr:
            sandwich_bad.append((g.name, lo, ex, gr))
    law_bad = _group_laws()
    ok = not (trace_bad or sandwich_bad or law_bad)
    report("7 property suites", ok,
           f"trace/doubling failures {trace_bad or 'none'}; sandwich failures {sandwich_bad or 'none'}; "
           f"group-law failures {law_bad or 'none'}")


def test_criterion_8_catalog(tmp_path):
    path = tmp_path / "catalog.jsonl"
    seed_catalog(path, 8, 10)
    rep = catalog_verify(path)
    recs = load_catalog(path)
    optimal_ok = all(r.order == moore_bound(r.delta, r.time) for r in recs if r.optimal)
    res = search("dihedral", 3, 4, budget=10_000, seed=20240101)
    found = res.best.order if res.best else None
    at = res.found_at[0] if res.found_at else None
    ok = rep.ok and optimal_ok and found == 14 and at is not None and at <= 10_000
    report("8 catalog", ok,
           f"{len(recs)} seeded records, all replay {rep.ok}, optimal flags consistent {optimal_ok}; "
           f"search dihedral (3,4) found order {found} at candidate {at} (<= 10000)")
