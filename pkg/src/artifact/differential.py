"""The differential as a sum of vertex splittings.

Every output term is built with the old edge order followed by the new
edge, and with B ordered by the stated substitution rules; ``normalize``
then produces the sign.  Graphs are in the contracted picture used by
``decoration_algebra``.
"""
from __future__ import annotations

from itertools import combinations

from .decoration_algebra import (FAMILY_A, VBAR, VT, Raw, canonical_raw, family_of,
                                 normalize)
from .graph_kernel import HalfEdgeGraph


class ChoiceInvalid(ValueError):
    pass


def _subsets(items, lo: int = 0, hi: int | None = None):
    items = list(items)
    hi = len(items) if hi is None else hi
    for k in range(lo, hi + 1):
        yield from combinations(items, k)


def split(raw: Raw, v: int, moved, colors: dict | None = None, q_color: str = "",
          z_color: str = "", z_mark: str = "", border=None) -> Raw:
    """Move half-edges ``moved`` from v to a new vertex z joined to v by a new edge.

    The new half-edges q (at v) and q' (at z) get ids n and n+1; the new edge
    is placed last.  ``colors`` overrides colours of existing half-edges; moved
    half-edges default to no colour.
    """
    g = raw.graph
    n = g.num_half_edges
    z = g.num_vertices
    vertex_of = list(g.vertex_of)
    cs = list(g.colors)
    for h in moved:
        vertex_of[h] = z
        cs[h] = ""
    if colors:
        for h, c in colors.items():
            cs[h] = c
    ng = HalfEdgeGraph(g.genus + (0,), g.marks + (z_mark,), tuple(vertex_of) + (v, z),
                       g.pair + (n + 1, n), g.labels + ("", ""), tuple(cs) + (q_color, z_color),
                       g.crossed)
    return Raw(ng, raw.border if border is None else tuple(border), raw.eorder + (n,))


def _add(out: dict, terms, scale) -> None:
    for k, c in terms:
        nv = out.get(k, 0) + c * scale
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)


def split_weight0(raw: Raw, v: int) -> list:
    """Diff1: (raw term, coefficient) pairs before normalisation."""
    g = raw.graph
    hs = sorted(g.at(v))
    rest = hs[1:]  # the first half-edge stays at v
    out = []
    for moved in _subsets(rest, 2, len(hs) - 2):
        out.append((split(raw, v, moved), 1))
    return out


def split_delta_irr(raw: Raw, v: int) -> list:
    return []


def _sides(g: HalfEdgeGraph, v: int):
    L = sorted(h for h in g.at(v) if g.colors[h] == "L")
    R = sorted(h for h in g.at(v) if g.colors[h] == "R")
    return L, R


def split_delta_partition(raw: Raw, v: int, choice=None) -> list:
    """Diff2 at the contracted crossed edge; sides are the L and R colours."""
    g = raw.graph
    A, Ap = _sides(g, v)
    if choice is None:
        choice = (A[0], A[1], Ap[0], Ap[1])
    x, y, xp, yp = choice
    if not ({x, y} <= set(A) and {xp, yp} <= set(Ap)) or x == y or xp == yp:
        raise ChoiceInvalid(choice)
    out = []
    # -psi on the A side: z takes A'
    for At in _subsets(A, 2, len(A) - 1):
        if x in At and y in At:
            cols = {h: ("L" if h in At else "R") for h in A}
            out.append((split(raw, v, Ap, cols, q_color="R"), -1))
    # -psi on the A' side: z takes A
    for At in _subsets(Ap, 2, len(Ap) - 1):
        if xp in At and yp in At:
            cols = {h: ("R" if h in At else "L") for h in Ap}
            out.append((split(raw, v, A, cols, q_color="L"), -1))
    for S in _subsets(Ap, 2, len(Ap) - 1):
        out.append((split(raw, v, S, q_color="R"), 1))
    for S in _subsets(A, 2, len(A) - 1):
        out.append((split(raw, v, S, q_color="L"), 1))
    return out


def split_omega(raw: Raw, v: int) -> list:
    """Diff11 at vbar carrying omega_B."""
    g = raw.graph
    Bc = sorted(h for h in g.at(v) if g.colors[h] == "E")
    out = []
    for S in _subsets(Bc, 2):
        out.append((split(raw, v, S, q_color="E"), 1))
    q = g.num_half_edges
    for S in _subsets(Bc, 1):
        for bt in raw.border:
            border = tuple(q if b == bt else b for b in raw.border)
            out.append((split(raw, v, S + (bt,), q_color="B", border=border), 1))
    return out


def split_Z(raw: Raw, v: int, choice=None) -> list:
    """Diff12 at vbar carrying Z_{B in A}; colours B, E (A minus B) and C (A^c)."""
    g = raw.graph
    E = sorted(h for h in g.at(v) if g.colors[h] == "E")
    C = sorted(h for h in g.at(v) if g.colors[h] == "C")
    if choice is None:
        choice = (C[0], C[1])
    x, y = choice
    if x == y or x not in C or y not in C:
        raise ChoiceInvalid(choice)
    q = g.num_half_edges
    out = []
    for S in _subsets(E, 2):
        out.append((split(raw, v, S, q_color="E"), 1))
    for S in _subsets(E, 1):
        for bt in raw.border:
            border = tuple(q if b == bt else b for b in raw.border)
            out.append((split(raw, v, S + (bt,), q_color="B", border=border), 1))
    for S in _subsets(C, 2, len(C) - 1):
        out.append((split(raw, v, S, q_color="C"), 1))
    for S in _subsets(E, 1):
        cols = {h: "L" for h in S}
        cols.update({h: "R" for h in C})
        out.append((split(raw, v, S + tuple(C), cols, q_color="B", z_color="L", z_mark=VT,
                          border=raw.border + (q,)), 1))
    for S in _subsets(E, 1):
        cols = {h: "C" for h in S}
        out.append((split(raw, v, C, cols, q_color="C"), -1))
    for S in _subsets(C, 2, len(C) - 1):
        if x in S and y in S:
            cols = {h: ("R" if h in S else "L") for h in C}
            out.append((split(raw, v, C, cols, q_color="B", z_color="L", z_mark=VT,
                              border=raw.border + (q,)), -1))
    return out


def raw_terms(raw: Raw) -> list:
    """All splitting terms of d(raw) as (raw, coefficient), before normalisation."""
    g = raw.graph
    fam = family_of(g)
    vbar = g.vertex(VBAR)
    out = []
    for v in range(g.num_vertices):
        mark = g.marks[v]
        if v == vbar:
            out.extend(split_Z(raw, v) if fam == FAMILY_A else split_omega(raw, v))
        elif mark == VT:
            out.extend(split_delta_partition(raw, v))
        elif mark:
            out.extend(split_delta_irr(raw, v))
        else:
            out.extend(split_weight0(raw, v))
    return out


def differential_raw(raw: Raw, pin: bool = True) -> dict:
    out: dict = {}
    for t, c in raw_terms(raw):
        _add(out, normalize(t, pin), c)
    return out


_CACHE: dict = {}


def total_differential(key, pin: bool = True) -> dict:
    """d of a canonical generator as {key: coefficient}."""
    ck = (key, pin)
    if ck not in _CACHE:
        _CACHE[ck] = differential_raw(canonical_raw(key), pin)
    return _CACHE[ck]


def apply(vec: dict, pin: bool = True) -> dict:
    """Linear extension of d to a formal sum."""
    out: dict = {}
    for k, c in vec.items():
        for k2, c2 in total_differential(k, pin).items():
            nv = out.get(k2, 0) + c * c2
            if nv:
                out[k2] = nv
            else:
                out.pop(k2, None)
    return out
