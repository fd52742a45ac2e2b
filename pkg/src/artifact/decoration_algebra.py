"""Decorations of the special vertices, their relations and normalisation.

A generator of the weight-13 complex is a stable graph whose special vertex
``vbar`` (genus 1) carries either a class Z_{B in A} (family A) or a class
omega_B together with a weight-2 class at a second special vertex (families
B1 and Birr).  Decoration membership is stored as half-edge colours:

* at ``vbar``: ``B`` for the ordered set B, ``C`` for the complement of A,
  ``E`` for the remaining half-edges;
* at ``vt`` (genus 0, family B1): ``L`` and ``R`` for the two sides of the
  boundary divisor delta{A/A'}; the pair of sides is unordered;
* ``virr`` (genus 1, one half-edge) carries delta_irr.

A raw generator additionally fixes an ordering of B and of the internal
edges; normalising it yields a canonical key and a sign, or zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from gmpy2 import mpq

from .exact_linalg import Reducer
from .graph_kernel import (ANON_J, GraphBuilder, HalfEdgeGraph, canonical_form, j_number,
                           permutation_sign, pin_anonymous_j)

VBAR = "vbar"
VT = "vt"
VIRR = "virr"

FAMILY_A = "A"
FAMILY_B1 = "B1"
FAMILY_BIRR = "Birr"

RULE4_COEFF = mpq(1, 12)


# ----------------------------------------------------------- abstract systems

@dataclass
class RelationSystem:
    """Generators indexed 0..N-1, relation vectors, and a rewrite into a basis."""

    generators: list
    relations: list
    reducer: Reducer
    basis: list

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return len(self.reducer)

    def index(self, gen) -> int:
        return self._index[gen]

    def rewrite(self, vec: dict) -> dict:
        return self.reducer.reduce(vec)

    def rewrite_generator(self, gen) -> dict:
        return self.reducer.reduce({self._index[gen]: mpq(1)})


def _system(gens: list, relations: list, prefer) -> RelationSystem:
    red = Reducer(prefer)
    for r in relations:
        red.add(r)
    basis = [g for i, g in enumerate(gens) if not red.is_pivot(i)]
    rs = RelationSystem(gens, relations, red, basis)
    rs._index = {g: i for i, g in enumerate(gens)}
    return rs


def delta_partitions(N: Iterable) -> list:
    """Unordered partitions {A, A'} of N with both sides of size at least 2.

    Each is returned as the side containing min(N), as a frozenset.
    """
    N = sorted(N)
    if len(N) < 4:
        return []
    first, rest = N[0], N[1:]
    out = []
    for k in range(1, len(rest) - 1):
        for comb in combinations(rest, k):
            side = frozenset((first,) + comb)
            if len(N) - len(side) >= 2:
                out.append(side)
    return out


def weight2_system(N: Iterable) -> RelationSystem:
    """delta classes on M_{0,N}-bar modulo the psi-elimination relations."""
    N = sorted(N)
    gens = delta_partitions(N)
    idx = {g: i for i, g in enumerate(gens)}
    full = frozenset(N)

    def side_of(A):
        return A if N[0] in A else full - A

    relations = []
    for i in N:
        others = [x for x in N if x != i]
        pairs = list(combinations(others, 2))
        sums = []
        for x, y in pairs:
            v = {}
            for g in gens:
                A = g if i in g else full - g
                if x not in A and y not in A:
                    v[idx[g]] = v.get(idx[g], 0) + 1
            sums.append(v)
        for v in sums[1:]:
            r = dict(sums[0])
            for k, a in v.items():
                r[k] = r.get(k, 0) - a
            r = {k: mpq(a) for k, a in r.items() if a}
            if r:
                relations.append(r)
    return _system(gens, relations, lambda c: c)


def weight11_system(N: Iterable, e=None) -> RelationSystem:
    """omega_B over increasing 11-subsets B; basis {omega_B : e in B}."""
    N = sorted(N)
    if e is None:
        e = N[0]
    gens = list(combinations(N, 11))
    idx = {g: i for i, g in enumerate(gens)}
    relations = []
    for E in combinations(N, 12):
        r = {}
        for i in range(12):
            B = E[:i] + E[i + 1:]
            r[idx[B]] = mpq(-1 if (i + 1) % 2 else 1)
        relations.append(r)
    return _system(gens, relations, lambda c: (e in gens[c], c))


def weight13_system(N: Iterable) -> RelationSystem:
    """Z_{B in A} classes; the |A^c| = 2 blocks are reduced to pairs holding min(E)."""
    N = sorted(N)
    gens = []
    for B in combinations(N, 10):
        rest = [x for x in N if x not in B]
        for k in range(2, len(rest) + 1):
            for C in combinations(rest, k):
                gens.append((B, frozenset(C)))
    idx = {g: i for i, g in enumerate(gens)}
    relations = []
    for E in combinations(N, 12):
        for i, j, k in combinations(range(12), 3):
            r = {}
            for (a, b), s in (((i, j), (-1) ** (i + j)), ((i, k), -(-1) ** (i + k)),
                              ((j, k), (-1) ** (j + k))):
                B = tuple(x for t, x in enumerate(E) if t not in (a, b))
                r[idx[(B, frozenset((E[a], E[b])))]] = mpq(s)
            relations.append(r)

    def prefer(c):
        B, C = gens[c]
        if len(C) != 2:
            return (1, c)
        E = sorted(set(B) | C)
        return (0 if E[0] in C else -1, c)

    return _system(gens, relations, prefer)


# ------------------------------------------------------------- generators

@dataclass(frozen=True)
class Raw:
    """A decorated stable graph with explicit orderings of B and of the edges."""

    graph: HalfEdgeGraph
    border: tuple
    eorder: tuple


def family_of(graph: HalfEdgeGraph) -> str:
    if VT in graph.marks:
        return FAMILY_B1
    if VIRR in graph.marks:
        return FAMILY_BIRR
    return FAMILY_A


def default_raw(graph: HalfEdgeGraph) -> Raw:
    """Orient by increasing half-edge ids for B and by first half-edge for edges."""
    border = tuple(h for h, c in enumerate(graph.colors) if c == "B")
    eorder = tuple(a for a, _ in graph.internal_edges())
    return Raw(graph, border, eorder)


def degree_of(graph: HalfEdgeGraph) -> int:
    return 13 + graph.num_internal_edges()


def _weight0_ok(g: HalfEdgeGraph) -> bool:
    for v in range(g.num_vertices):
        if g.marks[v]:
            continue
        if g.genus[v] != 0 or g.valence(v) < 3:
            return False
    for a, b in g.edges():
        u = g.vertex_of[a]
        if u == g.vertex_of[b] and not g.marks[u]:
            return False
    if VIRR in g.marks:
        h = g.at(g.vertex(VIRR))[0]
        if g.marks[g.vertex_of[g.pair[h]]] != VBAR:
            return False
    return True


_ODD: dict = {}
REGISTRY: dict = {}


def _sign_of_auto(hm, raw: Raw) -> int:
    s = permutation_sign([hm[h] for h in raw.border], raw.border)
    g = raw.graph
    index = {}
    for i, h in enumerate(raw.eorder):
        index[h] = i
        index[g.pair[h]] = i
    return s * permutation_sign([index[hm[h]] for h in raw.eorder], list(range(len(raw.eorder))))


def _canon_orient(raw: Raw, iso) -> int:
    hm = iso.half_edge_map
    b_img = [hm[h] for h in raw.border]
    e_img = [hm[h] // 2 for h in raw.eorder]
    return permutation_sign(b_img, sorted(b_img)) * permutation_sign(e_img, sorted(e_img))


def _swap_sides(g: HalfEdgeGraph) -> HalfEdgeGraph:
    sw = {"L": "R", "R": "L"}
    return g.relabel_colors([sw.get(c, c) for c in g.colors])


def _aut_generators(g: HalfEdgeGraph) -> tuple:
    """Canonical form of ``g`` (minimal over side swaps for B1) and generators of Aut."""
    c = canonical_form(g)
    if family_of(g) != FAMILY_B1:
        return c, c.iso, list(c.aut_generators)
    c2 = canonical_form(_swap_sides(g))
    gens = list(c.aut_generators)
    if c2.key == c.key:
        gens.append(c.iso.inverse().compose(c2.iso))
    if c2.key < c.key:
        return c2, c2.iso, gens
    return c, c.iso, gens


def _canonicalize(raw: Raw, pin: bool):
    """Return (key, sign) or None when an odd symmetry exists."""
    g = raw.graph
    c, iso, gens = _aut_generators(g)
    key = (family_of(g), c.key)
    sign = _canon_orient(raw, iso)
    odd = _ODD.get((key, pin))
    if odd is None:
        if pin and any(lab == ANON_J for lab in g.labels):
            gens = _aut_generators(pin_anonymous_j(g))[2]
        odd = any(_sign_of_auto(a.half_edge_map, raw) < 0 for a in gens)
        _ODD[(key, pin)] = odd
    if odd:
        return None
    if key not in REGISTRY:
        REGISTRY[key] = c.graph
    return key, sign


def is_valid_shape(g: HalfEdgeGraph) -> bool:
    return _weight0_ok(g)


def rule4_target(raw: Raw):
    """For a family-A loop generator with A^c equal to the loop, the Birr raw graph.

    Returns None when rule 4 does not apply.
    """
    g = raw.graph
    cs = [h for h, c in enumerate(g.colors) if c == "C"]
    if len(cs) != 2:
        return None
    s, t = cs
    if g.pair[s] != t:
        return None
    b = GraphBuilder()
    vmap = {}
    for v in range(g.num_vertices):
        vmap[v] = b.add_vertex(g.genus[v], g.marks[v])
    vbar = g.vertex(VBAR)
    hmap = {}
    done = set()
    for h in range(g.num_half_edges):
        if h in (s, t) or h in done:
            continue
        p = g.pair[h]
        if p < 0:
            hmap[h] = b.add_hair(vmap[g.vertex_of[h]], g.labels[h], g.colors[h])
        else:
            x, y = b.add_edge(vmap[g.vertex_of[h]], vmap[g.vertex_of[p]], g.colors[h], g.colors[p])
            hmap[h], hmap[p] = x, y
            done.add(p)
    tv = b.add_vertex(1, VIRR)
    pp, pq = b.add_edge(vmap[vbar], tv, "B", "")
    ng = b.build()
    border = tuple(hmap[h] for h in raw.border) + (pp,)
    eorder = tuple(pp if h in (s, t) else hmap[h] for h in raw.eorder)
    return Raw(ng, border, eorder)


def normalize(raw: Raw, pin: bool = True) -> list:
    """Normalise a raw generator into a list of (key, coefficient).

    The list is empty for zero.  Rule 4 rewrites the family-A loop case as
    1/12 times a Birr generator; rule 3a and the one-sided loop case of 3b give
    zero; weight-0 vertices violating the simplified-complex rules give zero.
    ``pin`` holds anonymous marked points fixed when testing for odd symmetry.
    """
    g = raw.graph
    if not _weight0_ok(g):
        return []
    fam = family_of(g)
    coeff = mpq(1)
    if fam == FAMILY_A:
        vbar = g.vertex(VBAR)
        cs = [h for h in g.at(vbar) if g.colors[h] == "C"]
        loops = [(a, b) for a, b in g.loops_at(vbar)]
        cset = set(cs)
        for a, b in loops:
            if a in cset and b in cset:
                if len(cs) >= 3:
                    return []
                t = rule4_target(raw)
                return [(k, s * RULE4_COEFF) for k, s in normalize(t, pin)]
    elif fam == FAMILY_B1:
        vt = g.vertex(VT)
        for a, b in g.loops_at(vt):
            if g.colors[a] == g.colors[b]:
                return []
    res = _canonicalize(raw, pin)
    if res is None:
        return []
    key, sign = res
    return [(key, coeff * sign)]


def canonical_raw(key) -> Raw:
    return default_raw(REGISTRY[key])


def key_graph(key) -> HalfEdgeGraph:
    return REGISTRY[key]


def sn_act(sigma: dict, key, pin: bool = True) -> list:
    """Relabel numbered marked points by ``sigma`` (a dict k -> sigma(k))."""
    g = REGISTRY[key]
    labels = []
    for lab in g.labels:
        k = j_number(lab)
        labels.append(f"j{sigma.get(k, k)}" if k is not None else lab)
    raw = default_raw(g)
    return normalize(Raw(g.relabel_labels(labels), raw.border, raw.eorder), pin)


def recolor(raw: Raw, colors: dict, border: tuple) -> Raw:
    """Same graph and edge order with some half-edge colours and B order changed."""
    g = raw.graph
    cs = list(g.colors)
    for h, c in colors.items():
        cs[h] = c
    return Raw(g.relabel_colors(cs), border, raw.eorder)


# ------------------------------------------------------------ local relations

def _add_term(vec: dict, terms: list, scale) -> None:
    for k, c in terms:
        nv = vec.get(k, 0) + c * scale
        if nv:
            vec[k] = nv
        else:
            vec.pop(k, None)


def weight11_relations(raw: Raw, pin: bool = True) -> list:
    """Relations11 for every 12-set E = B + {e}, e a non-B half-edge at vbar."""
    g = raw.graph
    vbar = g.vertex(VBAR)
    out = []
    others = [h for h in g.at(vbar) if g.colors[h] == "E"]
    for e in others:
        E = sorted(raw.border + (e,))
        vec: dict = {}
        for i in range(12):
            B = tuple(E[:i] + E[i + 1:])
            colors = {h: "B" for h in B}
            colors[E[i]] = "E"
            _add_term(vec, normalize(recolor(raw, colors, B), pin), -1 if (i + 1) % 2 else 1)
        out.append(vec)
    return out


def pulled_back(raw: Raw, pin: bool = True) -> dict:
    """The class of an |A^c| = 2 generator pulled back from its 12-point block.

    It is the sum over T in A minus B of the generator with A^c enlarged by T;
    the three-term relations hold among these sums, not among the plain terms.
    """
    g = raw.graph
    vbar = g.vertex(VBAR)
    rest = [h for h in g.at(vbar) if g.colors[h] == "E"]
    vec: dict = {}
    for T in _subsets(rest):
        _add_term(vec, normalize(recolor(raw, {h: "C" for h in T}, raw.border), pin), 1)
    return vec


def weight13_relations(raw: Raw, pin: bool = True) -> list:
    """Relations13 on the block E = B + A^c of an |A^c| = 2 generator.

    The 55 triples containing the first element of E span all relations of
    the block.
    """
    g = raw.graph
    vbar = g.vertex(VBAR)
    cs = [h for h in g.at(vbar) if g.colors[h] == "C"]
    if len(cs) != 2:
        return []
    E = sorted(raw.border + tuple(cs))
    out = []
    for j, k in combinations(range(1, 12), 2):
        i = 0
        vec: dict = {}
        for (a, b), s in (((i, j), (-1) ** (i + j)), ((i, k), -(-1) ** (i + k)),
                          ((j, k), (-1) ** (j + k))):
            B = tuple(x for t, x in enumerate(E) if t not in (a, b))
            colors = {h: "B" for h in B}
            colors[E[a]] = "C"
            colors[E[b]] = "C"
            for key, c in pulled_back(recolor(raw, colors, B), pin).items():
                vec[key] = vec.get(key, 0) + s * c
        out.append({k: c for k, c in vec.items() if c})
    return out


def _subsets(items) -> list:
    items = list(items)
    return [c for r in range(len(items) + 1) for c in combinations(items, r)]


def weight2_relations(raw: Raw, pin: bool = True) -> list:
    """Relations2 and the two-sided loop identity at ``vt`` for a B1 generator."""
    g = raw.graph
    vt = g.vertex(VT)
    N = sorted(g.at(vt))
    full = frozenset(N)
    parts = delta_partitions(N)

    def term(side):
        colors = {h: ("L" if h in side else "R") for h in N}
        return normalize(recolor(raw, colors, raw.border), pin)

    cache = {side: term(side) for side in parts}
    out = []
    for i in N:
        others = [x for x in N if x != i]
        pairs = list(combinations(others, 2))
        sums = []
        for x, y in pairs:
            v: dict = {}
            for side in parts:
                A = side if i in side else full - side
                if x not in A and y not in A:
                    _add_term(v, cache[side], 1)
            sums.append(v)
        for v in sums[1:]:
            r = dict(sums[0])
            _add_term(r, list(v.items()), -1)
            if r:
                out.append(r)
    for a, b in g.loops_at(vt):
        v: dict = {}
        for side in parts:
            if (a in side) != (b in side):
                _add_term(v, cache[side], 1)
        if v:
            out.append(v)
    return out


def context_key(raw: Raw, kind: str):
    """Isomorphism class of the data shared by one relation family."""
    g = raw.graph
    if kind == "w11":
        cs = ["B" if c in ("B", "E") and g.vertex_of[h] == g.vertex(VBAR) else c
              for h, c in enumerate(g.colors)]
        return (kind, canonical_form(g.relabel_colors(cs)).key)
    if kind == "w13":
        cs = ["B" if c in ("B", "C") else c for c in g.colors]
        return (kind, canonical_form(g.relabel_colors(cs)).key)
    if kind == "w2":
        cs = ["" if c in ("L", "R") else c for c in g.colors]
        return (kind, canonical_form(g.relabel_colors(cs)).key)
    raise ValueError(kind)


def context_key_w11(raw: Raw, e: int):
    g = raw.graph
    cs = list(g.colors)
    cs[e] = "B"
    return ("w11", canonical_form(g.relabel_colors(cs)).key)


def local_relations(raw: Raw, pin: bool = True, seen: set | None = None) -> list:
    """All local relations anchored at ``raw``; contexts in ``seen`` are skipped."""
    seen = seen if seen is not None else set()
    g = raw.graph
    fam = family_of(g)
    out = []
    if fam in (FAMILY_B1, FAMILY_BIRR):
        vbar = g.vertex(VBAR)
        for e in [h for h in g.at(vbar) if g.colors[h] == "E"]:
            ck = context_key_w11(raw, e)
            if ck in seen:
                continue
            seen.add(ck)
            E = sorted(raw.border + (e,))
            vec: dict = {}
            for i in range(12):
                B = tuple(E[:i] + E[i + 1:])
                colors = {h: "B" for h in B}
                colors[E[i]] = "E"
                _add_term(vec, normalize(recolor(raw, colors, B), pin), -1 if (i + 1) % 2 else 1)
            if vec:
                out.append(vec)
    if fam == FAMILY_B1:
        ck = context_key(raw, "w2")
        if ck not in seen:
            seen.add(ck)
            out.extend(weight2_relations(raw, pin))
    if fam == FAMILY_A:
        vbar = g.vertex(VBAR)
        cs = [h for h in g.at(vbar) if g.colors[h] == "C"]
        if len(cs) == 2:
            ck = context_key(raw, "w13")
            if ck not in seen:
                seen.add(ck)
                out.extend(r for r in weight13_relations(raw, pin) if r)
    return out
