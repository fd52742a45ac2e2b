from __future__ import annotations

import json
from pathlib import Path

import pytest

from artifact.blowup_enumerator import (FAMILIES, census_table, complete, existence_range,
                                        generate_virtual_reps, genus_of, relation_groups)
from artifact.pipeline import rep_record

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def reps3():
    return generate_virtual_reps(3)


def test_census_table(reps3):
    t = census_table(reps3)
    assert {k: v for k, v in t.items() if v} == {
        ("A3", 10): 6, ("A3", 11): 17, ("A3", 12): 12, ("A2", 12): 8, ("A2", 13): 8,
        ("B1", 11): 7, ("B1", 12): 19, ("B1", 13): 12,
        ("Birr", 11): 4, ("Birr", 12): 9, ("Birr", 13): 4}
    assert len(reps3) == 106


def test_excess_additivity_and_eleven_omegas(reps3):
    for r in reps3:
        assert r.reduced_excess == 3
        for g, n in r.existence_range():
            comps, t, k = complete(r, g, n)
            assert r.omega + t + 3 * k == 11
            assert genus_of(comps, t, k) == g
            assert 3 * g + 2 * n == 28


def test_family_known(reps3):
    assert {r.family for r in reps3} <= set(FAMILIES)


def test_deterministic_ids(reps3):
    again = generate_virtual_reps(3)
    assert [r.id for r in again] == [r.id for r in reps3]
    assert len({r.id for r in reps3}) == 106


@pytest.mark.parametrize("R", range(4))
def test_census_golden(R):
    data = json.loads((GOLDEN / f"census_r{R}.json").read_text())
    reps = generate_virtual_reps(R)
    assert [rep_record(r) for r in reps] == data["reps"]


def test_group_keys_ignore_input_order(reps3):
    a = [[r.id for r in g] for g in relation_groups(reps3)]
    b = [[r.id for r in g] for g in relation_groups(list(reversed(reps3)))]
    assert sorted(map(sorted, a)) == sorted(map(sorted, b))


def test_existence_ranges_are_excess_28(reps3):
    for r in reps3:
        assert existence_range(r) and all(g >= 1 for g, _ in existence_range(r))
