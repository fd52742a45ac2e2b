from __future__ import annotations

import pytest

from artifact.symmetric_rep import (NotACharacter, SnCharacter, character_table, class_size,
                                    decompose, format_decomposition, hook_dimension,
                                    parse_partition, partitions)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_small_tables():
    t = character_table(2)
    assert t[((2,), (1, 1))] == 1 and t[((1, 1), (2,))] == -1
    assert hook_dimension((2, 1)) == 2
    assert hook_dimension((3, 1, 1)) == 6


@pytest.mark.parametrize("n", range(1, 9))
def test_orthogonality(n):
    ps = partitions(n)
    for a in ps:
        for b in ps:
            assert SnCharacter.irreducible(a).inner(SnCharacter.irreducible(b)) == (a == b)
        assert SnCharacter.irreducible(a).degree() == hook_dimension(a)


def test_regular_and_trivial_characters():
    reg = SnCharacter(3, {(1, 1, 1): 6})
    assert decompose(reg).as_dict() == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    triv = SnCharacter(4, {mu: 1 for mu in partitions(4)})
    assert decompose(triv).as_dict() == {(4,): 1}


def test_natural_permutation_representation():
    chi = SnCharacter(4, {mu: sum(1 for p in mu if p == 1) for mu in partitions(4)})
    assert decompose(chi).as_dict() == {(4,): 1, (3, 1): 1}


def test_virtual_character_rejected():
    with pytest.raises(NotACharacter):
        decompose(SnCharacter.irreducible((2,)).scaled(-1))


def test_class_sizes_sum_to_order():
    assert sum(class_size(mu) for mu in partitions(6)) == 720


def test_notation_round_trip():
    mult = {(2, 1, 1, 1, 1, 1, 1, 1, 1, 1): 1, (2, 2, 1, 1, 1, 1, 1, 1, 1): 1,
            (3, 1, 1, 1, 1, 1, 1, 1, 1): 2}
    text = format_decomposition(mult)
    assert text == "V_{21^9} + V_{221^7} + 2*V_{31^8}"
    assert parse_partition("221^7") == (2, 2) + (1,) * 7
