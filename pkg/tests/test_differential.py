from __future__ import annotations

import random

from gmpy2 import mpq

from artifact import differential
from artifact.exact_linalg import SparseMat
from artifact.pipeline import build_complex, check_d_squared


def test_d_squared_on_excess_26():
    assert check_d_squared(build_complex(9, 0))


def test_d_raises_degree_by_one():
    cx = build_complex(8, 1)
    for deg, keys in cx.universe.items():
        for k in keys:
            for k2 in differential.total_differential(k):
                assert k2 in cx.universe_index[deg + 1]


def test_termwise_d_squared_on_random_generators():
    cx = build_complex(7, 3)
    rng = random.Random(0)
    keys = [(deg, k) for deg, ks in cx.universe.items() for k in ks if deg + 2 in cx.universe]
    for deg, k in rng.sample(keys, min(50, len(keys))):
        dd = differential.apply(differential.apply({k: mpq(1)}))
        assert not cx.coords(deg + 2, dd)


def test_sign_flip_breaks_d_squared():
    cx = build_complex(7, 3)
    # flip an entry (r, c) of d_k whose row r feeds a nonzero column of d_{k+1}
    for deg in cx.degrees:
        if deg + 1 not in cx.d:
            continue
        live = {c for (_, c) in cx.d[deg + 1].entries}
        hits = sorted(rc for rc in cx.d[deg].entries if rc[0] in live)
        if hits:
            break
    m = cx.d[deg]
    entries = dict(m.entries)
    entries[hits[0]] = -entries[hits[0]]
    cx.d[deg] = SparseMat(m.nrows, m.ncols, entries)
    assert not check_d_squared(cx)
