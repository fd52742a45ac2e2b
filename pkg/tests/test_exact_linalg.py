from __future__ import annotations

import pytest
from gmpy2 import mpq

from artifact.exact_linalg import (DimensionMismatch, NotAChainMap, Reducer, SparseMat, eliminate,
                                   image_membership, rank, trace_on_cohomology)


def _m(rows):
    return SparseMat.from_rows(len(rows[0]), [{j: mpq(a) for j, a in enumerate(r) if a} for r in rows])


def test_identity_has_full_rank_and_no_kernel():
    e = eliminate(SparseMat.identity(5))
    assert e.rank == 5 and e.kernel() == []


def test_rank_nullity_and_transpose():
    m = _m([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]])
    e = eliminate(m)
    assert e.rank == 2 == rank(m.transpose())
    for z in e.kernel():
        assert not m.apply(z)
    assert e.rank + len(e.kernel()) == 4


def test_rank_independent_of_row_order():
    rows = [[1, 1, 0], [0, 1, 1], [1, 2, 1]]
    assert rank(_m(rows)) == rank(_m(rows[::-1])) == 2


def test_image_membership():
    e = eliminate(_m([[1, 0, 1], [0, 1, 1]]))
    assert image_membership({}, e) == (True, {})
    ok, _ = image_membership({0: mpq(2), 1: mpq(3), 2: mpq(5)}, e)
    assert ok
    assert not image_membership({0: mpq(1)}, e)[0]
    with pytest.raises(DimensionMismatch):
        image_membership({7: mpq(1)}, e)


def test_reducer_quotient_representatives():
    red = Reducer()
    assert red.add({0: mpq(1), 1: mpq(-1)})
    assert not red.add({0: mpq(2), 1: mpq(-2)})
    assert red.reduce({0: mpq(1)}) == red.reduce({1: mpq(1)})


def test_trace_identity_gives_betti_number():
    d0 = _m([[1], [1], [0]])
    d1 = _m([[1, -1, 0]])
    assert trace_on_cohomology(d0, d1, SparseMat.identity(3)) == 1


def test_trace_zero_differentials():
    act = _m([[0, 1], [1, 0]])
    z_in, z_out = SparseMat(2, 0, {}), SparseMat(0, 2, {})
    assert trace_on_cohomology(z_in, z_out, act) == 0
    assert trace_on_cohomology(z_in, z_out, SparseMat.identity(2)) == 2


def test_trace_acyclic_is_zero():
    d = SparseMat.identity(2)
    act = _m([[0, 1], [1, 0]])
    assert trace_on_cohomology(d, SparseMat(0, 2, {}), act) == 0


def test_non_chain_map_rejected():
    with pytest.raises(NotAChainMap):
        trace_on_cohomology(_m([[1], [0]]), _m([[1, 0]]), SparseMat.identity(2))
