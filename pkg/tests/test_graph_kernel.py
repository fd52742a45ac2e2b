from __future__ import annotations

import pytest

from artifact.graph_kernel import (ANON_J, GraphBuilder, Violation, automorphism_order,
                                   canonical_form, contract_crossed, from_json, from_text,
                                   has_odd_symmetry, permutation_sign, to_json, to_text, validate)


def _theta(labels=("j1", "j2")):
    b = GraphBuilder()
    u, v = b.add_vertex(), b.add_vertex()
    for _ in range(3):
        b.add_edge(u, v)
    b.add_hair(u, labels[0])
    b.add_hair(v, labels[1])
    return b.build()


def _triangle():
    b = GraphBuilder()
    vs = [b.add_vertex() for _ in range(3)]
    for i in range(3):
        b.add_edge(vs[i], vs[(i + 1) % 3])
        b.add_hair(vs[i], ANON_J)
    return b.build()


def test_canonical_form_is_invariant_under_relabelling():
    b = GraphBuilder()
    v, u = b.add_vertex(), b.add_vertex()
    b.add_hair(v, "j2")
    for _ in range(3):
        b.add_edge(v, u)
    b.add_hair(u, "j1")
    assert canonical_form(b.build()).key == canonical_form(_theta()).key


def test_canonical_form_separates_labels():
    assert canonical_form(_theta()).key != canonical_form(_theta(("j1", "j1x"))).key


def test_automorphism_orders():
    assert automorphism_order(_theta()) == 6
    assert automorphism_order(_triangle(), permute_anonymous_j=True) == 6
    assert automorphism_order(_triangle()) == 1


def test_odd_symmetry_of_theta():
    # swapping two parallel edges is an odd permutation of edges
    assert has_odd_symmetry(_theta())


def test_permutation_sign():
    assert permutation_sign([1, 2, 3], [1, 2, 3]) == 1
    assert permutation_sign([1, 2, 3], [2, 1, 3]) == -1
    assert permutation_sign([1, 2, 3], [2, 3, 1]) == 1


def test_validate_rejects_bivalent_vertex():
    b = GraphBuilder()
    u, v = b.add_vertex(), b.add_vertex(1, "vbar")
    b.add_edge(u, v)
    b.add_hair(u, "j1")
    with pytest.raises(Violation):
        validate(b.build())


def test_contract_crossed_merges_vertices():
    b = GraphBuilder()
    u, v = b.add_vertex(1, "vbar"), b.add_vertex()
    b.add_edge(u, v, crossed=True)
    b.add_hair(v, "j1")
    b.add_hair(v, "j2")
    g = contract_crossed(b.build())
    assert g.num_vertices == 1 and g.genus == (1,) and g.num_half_edges == 2


def test_serialization_round_trip():
    g = _theta()
    assert from_text(to_text(g)) == g
    assert from_json(to_json(g)) == g
