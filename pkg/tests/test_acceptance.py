"""One test per acceptance criterion; each records a PASS/FAIL line."""
from __future__ import annotations

import random
import time
from collections import Counter
from math import comb

from gmpy2 import mpq

from artifact import differential, pipeline
from artifact.blowup_enumerator import census_table, generate_virtual_reps
from artifact.decoration_algebra import weight2_system, weight11_system, weight13_system
from artifact.symmetric_rep import format_decomposition, parse_partition, signed_multiplicities


def _decomp(text: str) -> dict:
    out = {}
    for term in text.split(" + "):
        m, _, name = term.rpartition("*")
        out[parse_partition(name)] = int(m) if m else 1
    return out


def _cohomology(g, n):
    cx = pipeline.build_complex(g, n, force=True)
    return cx, {k: e["specht"].as_dict() for k, e in pipeline.cohomology(cx).items() if e["dim"]}


def test_criterion_1_census(record):
    t = time.perf_counter()
    reps = generate_virtual_reps(3)
    dt = time.perf_counter() - t
    got = {k: v for k, v in census_table(reps).items() if v}
    want = {("A3", 10): 6, ("A3", 11): 17, ("A3", 12): 12, ("A2", 12): 8, ("A2", 13): 8,
            ("B1", 11): 7, ("B1", 12): 19, ("B1", 13): 12,
            ("Birr", 11): 4, ("Birr", 12): 9, ("Birr", 13): 4}
    ok = got == want and len(reps) == 106 and dt < 60
    record("1 census at reduced excess 3", ok, f"total {len(reps)} in {dt:.1f}s")
    assert ok


def test_criterion_2_excess_26_27(record):
    want = {(9, 0): {24: {(): 1}}, (8, 1): {23: {(1,): 1}}, (6, 4): {20: {(1, 1, 1, 1): 1}},
            (7, 3): {22: {(1, 1, 1): 1, (2, 1): 2}}}
    lines, ok = [], True
    for gn, target in want.items():
        t = time.perf_counter()
        _, got = _cohomology(*gn)
        dt = time.perf_counter() - t
        good = got == target and dt < 300
        ok &= good
        lines.append(f"{gn} {'ok' if good else got} {dt:.1f}s")
    record("2 cohomology in excess 26/27", ok, "; ".join(lines))
    assert ok


def test_criterion_3_excess_28_small_n(record):
    want = {(8, 2): {23: _decomp("2*V_{1^2}")},
            (6, 5): {20: _decomp("2*V_{1^5}"), 21: _decomp("V_{21^3} + V_{221} + 3*V_{31^2}")}}
    t = time.perf_counter()
    got = {gn: _cohomology(*gn)[1] for gn in want}
    dt = time.perf_counter() - t
    ok = got == want and dt < 1800
    record("3 cohomology (8,2) and (6,5)", ok, f"{'match' if got == want else got} in {dt:.1f}s")
    assert ok


def _euler_check(record, g, n, Z: str, W: str):
    t = time.perf_counter()
    cx = pipeline.build_complex(g, n, force=True)
    chi = pipeline.equivariant_euler(cx)
    dt = time.perf_counter() - t
    k1, k2 = 3 * g + n - 2, 3 * g + n - 3
    want = pipeline.expected_euler(n, k1, _decomp(Z), k2, _decomp(W))
    got, exp = signed_multiplicities(chi), signed_multiplicities(want)
    ok = got == exp and dt < 3600
    record(f"4 equivariant Euler ({g},{n})", ok,
           f"got {format_decomposition(got)}; want {format_decomposition(exp)}; {dt:.1f}s")
    assert ok


def test_criterion_4_euler_4_8(record):
    _euler_check(record, 4, 8, "V_{21^6} + V_{221^4} + 3*V_{31^5}", "2*V_{1^8}")


def test_criterion_4_euler_2_11(record):
    _euler_check(record, 2, 11, "V_{21^9} + V_{221^7} + 2*V_{31^8}", "2*V_{1^11}")


def test_criterion_5_chain_identity(record, excess28):
    full = [(9, 0), (8, 1), (6, 4), (7, 3), (8, 2), (6, 5)]
    ok_full = all(pipeline.check_d_squared(excess28.get(gn) or pipeline.build_complex(*gn, force=True))
                  for gn in full)
    rng = random.Random(28)
    bad = 0
    for gn in [(4, 8), (2, 11)]:
        cx = excess28[gn]
        pool = [(d, k) for d, ks in cx.universe.items() for k in ks]
        for deg, key in rng.sample(pool, min(200, len(pool))):
            dd = differential.apply(differential.apply({key: mpq(1)}))
            if dd and cx.coords(deg + 2, dd):
                bad += 1
    ok = ok_full and bad == 0
    record("5 d^2 = 0", ok, f"matrix identity on {len(full)} complexes {ok_full}; "
                            f"termwise failures {bad} of 400")
    assert ok


def test_criterion_6_relation_dimensions(record):
    t = time.perf_counter()
    w2 = all(weight2_system(range(1, n + 1)).dim == 2 ** (n - 1) - comb(n, 2) - 1
             for n in range(4, 10))
    w11 = all(weight11_system(range(s)).dim == comb(s - 1, 10) for s in range(11, 15))
    s13 = weight13_system(range(13))
    blocks = Counter(frozenset(B) | C for B, C in s13.basis if len(C) == 2)
    w13 = set(blocks.values()) == {11} and len(blocks) == 13
    dt = time.perf_counter() - t
    ok = w2 and w11 and w13 and dt < 10
    record("6 relation dimensions", ok, f"weight 2 {w2}, weight 11 {w11}, weight 13 {w13}, {dt:.1f}s")
    assert ok


def test_criterion_7_relation_groups(record, excess28):
    groups = pipeline.relation_group_report(3, excess28)
    got = sorted((gr.family, gr.edge_group, gr.size, len(gr.redundant), gr.independent)
                 for gr in groups)
    want = sorted([("A2", 12, 4, 2, True)] * 2 + [("A2", 13, 4, 2, True)] * 2
                  + [("B1", 12, 3, 1, True), ("Birr", 12, 3, 1, True)])
    total = sum(len(gr.redundant) for gr in groups)
    ok = got == want and total == 10
    record("7 relation groups", ok, f"{len(groups)} groups, {total} redundant")
    assert ok


def test_criterion_8_survivors(record, excess28):
    res = pipeline.eliminate_representations(3, excess28)
    ranges = sorted(tuple(n for _, n in r.existence_range()) for r in res.survivors)
    want = sorted([(11, 8, 5, 2)] * 4 + [(8, 5, 2)] * 2)
    supports = res.block_partitions()
    allowed = all(set(lams) <= {(1,) * n, (2,) + (1,) * (n - 2)}
                  for (_, _, (_, n)), lams in supports.items())
    ok = ranges == want and allowed and len(res.survivors) == 6
    record("8 survivors", ok, f"{len(res.survivors)} survivors, ranges {ranges}, "
                              f"{len(supports)} nonzero blocks within 1^n and 21^(n-2): {allowed}")
    assert ok
