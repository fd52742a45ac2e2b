from __future__ import annotations

from collections import Counter
from math import comb

import pytest

from artifact.decoration_algebra import (delta_partitions, key_graph, sn_act, weight2_system,
                                         weight11_system, weight13_system)
from artifact.pipeline import labeled_generators


@pytest.mark.parametrize("n", range(4, 10))
def test_weight2_dimension(n):
    assert weight2_system(range(1, n + 1)).dim == 2 ** (n - 1) - comb(n, 2) - 1


@pytest.mark.parametrize("size", range(11, 15))
def test_weight11_dimension(size):
    s = weight11_system(range(size))
    assert s.dim == comb(size - 1, 10)
    assert all(0 in B for B in s.basis)


def test_weight13_per_block_dimension():
    s = weight13_system(range(13))
    blocks = Counter(frozenset(B) | C for B, C in s.basis if len(C) == 2)
    assert len(blocks) == 13 and set(blocks.values()) == {11}


def test_delta_partitions_count():
    # unordered splits of a 6-set with both sides of size >= 2
    assert len(delta_partitions(range(6))) == (2 ** 6 - 2 - 12) // 2


def test_identity_action_fixes_generators():
    gens = labeled_generators(7, 3)
    for keys in gens.values():
        for k in keys[:20]:
            assert sn_act({}, k) == [(k, 1)]


def test_transposition_is_an_involution():
    gens = labeled_generators(7, 3)
    sigma = {1: 2, 2: 1}
    for keys in gens.values():
        for k in keys[:20]:
            once = sn_act(sigma, k)
            assert len(once) == 1
            k2, c = once[0]
            assert key_graph(k2).num_internal_edges() == key_graph(k).num_internal_edges()
            assert sn_act(sigma, k2) == [(k, c)]
