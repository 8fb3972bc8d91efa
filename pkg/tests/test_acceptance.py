"""
Exit criteria. Each test prints one PASS/FAIL line; run with
``pytest tests/test_acceptance.py -s`` or read the lines in the normal report.
"""

import dataclasses
import random

import pytest

from alexcert.alexander import braid_poly, burau_poly, skein_oracle, tree_poly
from alexcert.braid import PositiveBraidWord as W, closure_components, torus_word
from alexcert.laurent import HalfLaurent, conway_parity, parity_for_components, summarize
from alexcert.pmembership import NotInScope, certify_braid, certify_tree, ito_summand_check, verify
from alexcert.satellite import SatellitePattern, krishna_check, obstruction, satellite_poly
from alexcert.surfaces import parse_tree
from alexcert.sweeps import SweepConfig, run_sweep

from conftest import T


@pytest.fixture
def report(capsys):
    def emit(criterion, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}")
        assert ok, f"criterion {criterion}: {detail}"

    return emit


@pytest.fixture(scope="module")
def sweeps():
    return {
        "theorem1": run_sweep(SweepConfig("theorem1", max_strands=4, max_len=10)),
        "trees": run_sweep(SweepConfig("theorem1", max_strands=1, max_len=1, max_vertices=8)),
        "methods": run_sweep(SweepConfig("methods", max_strands=4, max_len=8)),
        "skein": run_sweep(SweepConfig("skein", max_strands=4, max_len=8)),
        "ito": run_sweep(SweepConfig("ito")),
    }


def test_1_golden_values(report):
    hopf = braid_poly(W(2, (1, 1)))
    s = summarize(hopf)
    golden = [
        (W(2, (1, 1, 1)), "t - 1 + t^-1"),
        (W(2, (1,) * 5), "t^2 - t + 1 - t^-1 + t^-2"),
        (torus_word(3, 3), "t^2 - t - t^-1 + t^-2"),
        (torus_word(3, 4), "t^3 - t^2 + 1 - t^-2 + t^-3"),
    ]
    ok = hopf == T("t^(1/2) - t^(-1/2)") and (s.degree_doubled, s.alpha, s.beta) == (1, 1, -1)
    for w, text in golden:
        expected = T(text)
        ok = ok and braid_poly(w) == expected and skein_oracle(w) == expected
    report(1, ok, "Hopf, T(2,3), T(2,5), T(3,3), T(3,4) exact on both the default route and the skein oracle")


def test_2_theorem1_sweep(report, sweeps):
    r = sweeps["theorem1"]
    ok = r.ok and r.cases_run > 0 and r.wall_time <= 300
    report(2, ok, f"{r.cases_run} words (l <= 10, n <= 4) certify and verify, {len(r.failures)} failures, {r.wall_time:.1f}s")


def test_3_tree_sweep(report, sweeps):
    r = sweeps["trees"]
    # The tree sweep also asserts path-m = T(2, m+1) and rooting/ordering invariance.
    catalan_total = 1 + 1 + 2 + 5 + 14 + 42 + 132 + 429
    ok = r.ok and r.cases_run == catalan_total and r.wall_time <= 60
    report(3, ok, f"{r.cases_run} plane trees (<= 8 vertices), {len(r.failures)} failures, {r.wall_time:.1f}s")


def test_4_three_method_agreement(report, sweeps):
    r = sweeps["methods"]
    report(4, r.ok and r.cases_run > 1000, f"braid_poly = skein_oracle = burau_poly on {r.cases_run} words, {len(r.failures)} failures")


def test_5_skein_identity(report, sweeps):
    r = sweeps["skein"]
    split = r.stats["split_l_minus"]
    report(5, r.ok and split > 0, f"{r.cases_run} skein triples incl. {split} with split L-, {len(r.failures)} failures")


def test_6_bookkeeping_identities(report, sweeps):
    stats = sweeps["theorem1"].stats + sweeps["trees"].stats
    path3 = verify(certify_tree(parse_tree("v(v(v))")))
    t33 = verify(certify_braid(torus_word(3, 3)))
    boundary = [n.star_coefficient for n in path3.nodes + t33.nodes]
    steps = [n for n in path3.nodes + t33.nodes if n.kind in ("braid_step", "tree_step")]
    rel_ok = all(n.checks["alpha_relation"] and n.checks["beta_relation"] for n in steps)
    ok = sweeps["theorem1"].ok and sweeps["trees"].ok and rel_ok and 1 in boundary and stats["star_c=1"] > 0
    report(6, ok, f"alpha/beta relations hold on every step node; c = 1 reached {stats['star_c=1']} times")


def test_7_ito_count(report, sweeps):
    r = sweeps["ito"]
    t23, t25, t34 = torus_word(2, 3), torus_word(2, 5), torus_word(3, 4)
    rows = ito_summand_check([[t23], [t23, t25], [t25, t34, t23]])
    ok = r.ok and r.cases_run == 19 and [(-x.beta) for x in rows] == [1, 2, 3]
    report(7, ok, f"-beta = k on {r.cases_run} sums of k in {{1,2,3}} torus knots")


def _random_knot_poly(rnd):
    d = rnd.randint(1, 4)
    cs = [rnd.randint(-4, 4) for _ in range(d)]
    cs[-1] = cs[-1] or 1
    terms = {0: 1 - 2 * sum(cs)}
    for i, c in enumerate(cs, start=1):
        terms[2 * i] = terms[-2 * i] = c
    return HalfLaurent(terms)


def _random_pattern_poly(rnd):
    d = rnd.randint(0, 3)
    cs = [rnd.randint(-3, 3) for _ in range(d + 1)]
    cs[-1] = cs[-1] or rnd.choice([-2, -1, 1, 2])
    terms = {}
    if rnd.random() < 0.5:
        for i, c in enumerate(cs):
            terms[2 * i + 1], terms[-(2 * i + 1)] = c, -c
    else:
        for i, c in enumerate(cs):
            terms[2 * i] = terms[-2 * i] = c
    return HalfLaurent(terms)


def test_8_cables_and_satellite_identities(report):
    ok = True
    for n in (2, 3):
        for w in (W(2, (1, 1, 1)), W(2, (1,) * 5), torus_word(3, 4)):
            r = krishna_check(n, w)
            ok = ok and r.beta == 0 and r.verdict.fires and r.verdict.label == "NOT_IN_P"
    rnd = random.Random(20240202)
    pairs = 0
    for _ in range(100):
        k, p = _random_knot_poly(rnd), _random_pattern_poly(rnd)
        w = rnd.choice([-1, 1]) * rnd.randint(2, 5)
        s = summarize(satellite_poly(SatellitePattern(w, p), k))
        sk, sp = summarize(k), summarize(p)
        ok = ok and s.alpha == sk.alpha * sp.alpha and s.beta == sk.alpha * sp.beta
        pairs += 1
    report(8, ok, f"6 cables give beta = 0 and NOT_IN_P; coefficient transfer exact on {pairs} random pairs")


def test_9_negative_cases(report):
    split = W(3, (1, 1))
    ok = braid_poly(split) == 0
    try:
        certify_braid(split)
        ok = False
    except NotInScope:
        pass
    cert = certify_braid(torus_word(2, 5))
    tampered = dataclasses.replace(cert, child=dataclasses.replace(cert.child, l_minus_b1=7))
    r = verify(tampered)
    ok = ok and not r.valid and r.failed_node == "root.child"
    tree_cert = certify_tree(parse_tree("v(v)(v)(v)"))
    r2 = verify(dataclasses.replace(tree_cert, forest=(parse_tree("v"),)))
    ok = ok and not r2.valid and r2.failed_node == "root"
    report(9, ok, f"split word gives 0 and is rejected; tampering caught at {r.failed_node} and {r2.failed_node}")


def test_10_conway_parity(report, sweeps):
    parity_failures = [f for r in sweeps.values() for f in r.failures if "conway parity" in f.expected]
    spot = [braid_poly(torus_word(3, 3)), burau_poly(torus_word(2, 4)), tree_poly(parse_tree("v(v)"))]
    comps = [3, 2, 1]
    ok = not parity_failures and all(conway_parity(p) == parity_for_components(c) for p, c in zip(spot, comps))
    total = sum(r.cases_run for r in sweeps.values())
    report(10, ok, f"parity class matches component parity across {total} sweep cases")
