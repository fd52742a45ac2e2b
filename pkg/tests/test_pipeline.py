from __future__ import annotations

import json
from pathlib import Path

import pytest

from artifact import pipeline
from artifact.symmetric_rep import signed_multiplicities

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("g,n", [(9, 0), (8, 1), (6, 4), (7, 3)])
def test_cohomology_golden(g, n):
    data = json.loads((GOLDEN / f"cohomology_{g}_{n}.json").read_text())
    cx = pipeline.build_complex(g, n)
    assert {str(k): v for k, v in cx.dims().items()} == data["chain_dims"]
    coh = pipeline.cohomology(cx)
    assert {str(k): str(e["specht"]) for k, e in coh.items() if e["dim"]} == data["cohomology"]


def test_large_n_guard():
    with pytest.raises(pipeline.TooLarge):
        pipeline.build_complex(4, 8)


def test_euler_matches_cohomology_small_n():
    cx = pipeline.build_complex(7, 3)
    coh = pipeline.cohomology(cx)
    chi = pipeline.equivariant_euler(cx)
    want: dict = {}
    for k, e in coh.items():
        for lam, m in (e["specht"].mult if e["specht"] else ()):
            want[lam] = want.get(lam, 0) + (-1) ** k * m
    assert signed_multiplicities(chi) == {k: v for k, v in want.items() if v}


def test_chain_character_identity_is_dimension():
    cx = pipeline.build_complex(8, 1)
    for k in cx.degrees:
        assert pipeline.chain_character(cx, k, (1,)) == len(cx.basis[k])


def test_empty_complex_has_zero_character():
    cx = pipeline.build_complex(1, 0)
    assert cx.degrees == []
    assert signed_multiplicities(pipeline.equivariant_euler(cx)) == {}
    assert pipeline.check_d_squared(cx)


def test_verify_small_pair():
    assert all(pipeline.verify(8, 1).values())


def test_excess_pairs():
    assert pipeline.excess_pairs(3) == [(2, 11), (4, 8), (6, 5), (8, 2)]


def test_census_report_is_deterministic():
    a = json.dumps(pipeline.census_report(3), sort_keys=True, default=str)
    b = json.dumps(pipeline.census_report(3), sort_keys=True, default=str)
    assert a == b


def test_export_formats(tmp_path):
    for fmt in ("json", "csv", "dot"):
        paths = pipeline.export_census(1, fmt, tmp_path / fmt)
        assert paths and all(p.exists() for p in paths)


@pytest.mark.slow
def test_leading_terms_every_a3_source_hits_a_target(excess28):
    report = pipeline.leading_term_report(3, 2, 11, excess28)
    reps = {r.id: r for r in pipeline.generate_virtual_reps(3)}
    a3 = [rid for rid in report if reps[rid].family == "A3"]
    assert a3 and all(report[rid] for rid in a3)
