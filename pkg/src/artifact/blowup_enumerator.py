"""Blown-up components, virtual blown-up representations and the census.

Deleting the genus-1 vertex ``vbar`` from a generator leaves connected
components whose half-edges formerly at ``vbar`` become hairs labelled
``omega`` (in B) or ``eps`` (not in B).  Components are stored as small
graphs with vertex marks:

* ``w``: the crossed vertex of family A; it carries an implicit crossed
  omega hair, and its half-edges form the complement of A;
* ``vt``: the contracted crossed edge of family B1;
* ``virr``: the genus-1 vertex carrying delta_irr (family Birr).

Lone double hairs have no vertices and are stored by their label pair.
A virtual representation is a multiset of components with positive excess
plus exactly one special component; completing it adds omega-j hairs and
omega tripods.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product

from .decoration_algebra import (VBAR, VIRR, VT, Raw, default_raw, delta_partitions, key_graph,
                                 normalize, recolor, weight2_relations)
from .exact_linalg import Reducer
from .graph_kernel import GraphBuilder, HalfEdgeGraph, canonical_form

OMEGA = "omega"
EPS = "eps"
U = "u"
J = "j"

PLAIN = "plain"
LONE = "lone"
W = "w"
IRR = "irr"

A3 = "A3"
A2 = "A2"
B1 = "B1"
BIRR = "Birr"
FAMILIES = (A3, A2, B1, BIRR)


class NotInRange(ValueError):
    pass


def excess(g: int, n: int) -> int:
    return 3 * g + 2 * n


def component_e(g: int, eps: int, omega: int, n: int) -> int:
    return 3 * (g - 1) + 3 * eps + omega + 2 * n


@dataclass(frozen=True)
class Component:
    """A blown-up component; ``omega`` includes the crossed hair of a w-component."""

    kind: str
    graph: HalfEdgeGraph | None
    lone: tuple = ()
    template: tuple = ()
    key: tuple = field(default=(), compare=True)

    def _count(self, label: str) -> int:
        if self.kind == LONE:
            return self.lone.count(label)
        return sum(1 for h in self.graph.hairs() if self.graph.labels[h] == label)

    @property
    def eps(self) -> int:
        return self._count(EPS)

    @property
    def omega(self) -> int:
        return self._count(OMEGA) + (1 if self.kind == W else 0)

    @property
    def n(self) -> int:
        return self._count(J)

    @property
    def g(self) -> int:
        if self.kind == LONE:
            return 0
        gr = self.graph
        return gr.betti() + sum(gr.genus)

    @property
    def e(self) -> int:
        return component_e(self.g, self.eps, self.omega, self.n)

    @property
    def edges(self) -> int:
        """Internal edges this component contributes to the contracted generator."""
        if self.kind == LONE:
            return 0 if J in self.lone else 1
        gr = self.graph
        return len(gr.edges()) + self._count(OMEGA) + self._count(EPS)

    @property
    def crossed(self) -> bool:
        return self.kind in (W, VT, IRR)

    def label(self) -> str:
        if self.kind == LONE:
            return "-".join(self.lone)
        return f"{self.kind}:{self.key!r}"


def _lone(a: str, b: str) -> Component:
    pair = tuple(sorted((a, b)))
    return Component(LONE, None, pair, (), (LONE, pair))


def _key(kind: str, g: HalfEdgeGraph) -> tuple:
    return (kind, canonical_form(g).key)


def _make(kind: str, g: HalfEdgeGraph, template: tuple) -> Component:
    return Component(kind, g, (), template, _key(kind, g))


def _skeletons(nv: int, special: str | None):
    """Connected multigraph skeletons on nv labelled vertices; vertex 0 is special."""
    pairs = list(combinations(range(nv), 2))
    choices = []
    for i, j in pairs:
        choices.append((0, 1, 2) if (special == VT and i == 0) else (0, 1))
    loop_choices = (0, 1) if special == VT else (0,)
    for mult in product(*choices):
        for loops in loop_choices:
            deg = [0] * nv
            for (i, j), m in zip(pairs, mult):
                deg[i] += m
                deg[j] += m
            deg[0] += 2 * loops
            if nv > 1 and any(d == 0 for d in deg):
                continue
            # connectivity
            seen = {0}
            stack = [0]
            while stack:
                v = stack.pop()
                for (i, j), m in zip(pairs, mult):
                    if m and v in (i, j):
                        w = j if v == i else i
                        if w not in seen:
                            seen.add(w)
                            stack.append(w)
            if len(seen) != nv:
                continue
            yield tuple(mult), loops, deg


def _hair_options(need: int, budget_u: int, budget_j: int):
    for u in range(budget_u + 1):
        for j in range(budget_j + 1):
            if u + j >= need:
                yield u, j


def unmarked_components(rmax: int) -> list:
    """Unmarked templates with u hairs; each entry is (kind, graph)."""
    out = {}
    for special in (None, W, VT):
        for nv in range(1, rmax + 3):
            pairs = list(combinations(range(nv), 2))
            for mult, loops, deg in _skeletons(nv, special):
                nedges = sum(mult) + loops
                betti = nedges - nv + 1
                base = 3 * (betti - 1) + (1 if special == W else 0)
                if base > rmax:
                    continue
                needs = []
                for v in range(nv):
                    lo = 3
                    if v == 0 and special == VT:
                        lo = 4
                    if v == 0 and special == W:
                        lo = 2
                    needs.append(max(0, lo - deg[v]))
                if base + sum(needs) > rmax:
                    continue
                budget = rmax - base
                per_vertex = [list(_hair_options(needs[v], budget, budget // 2)) for v in range(nv)]

                def rec(v, acc, cost):
                    if v == nv:
                        yield list(acc)
                        return
                    for u, j in per_vertex[v]:
                        c = u + 2 * j
                        if cost + c > budget:
                            continue
                        acc.append((u, j))
                        yield from rec(v + 1, acc, cost + c)
                        acc.pop()

                for hairs in rec(0, [], 0):
                    if special != W and sum(u for u, _ in hairs) == 0:
                        continue
                    b = GraphBuilder()
                    for v in range(nv):
                        mark = special if (v == 0 and special) else ""
                        b.add_vertex(0, mark)
                    for (i, j), m in zip(pairs, mult):
                        for _ in range(m):
                            b.add_edge(i, j)
                    for _ in range(loops):
                        b.add_edge(0, 0)
                    for v, (u, j) in enumerate(hairs):
                        for _ in range(u):
                            b.add_hair(v, U)
                        for _ in range(j):
                            b.add_hair(v, J)
                    g = b.build()
                    kind = special or PLAIN
                    k = _key(kind, g)
                    out.setdefault(k, (kind, g))
    return [out[k] for k in sorted(out)]


def _markings(g: HalfEdgeGraph):
    us = [h for h in g.hairs() if g.labels[h] == U]
    for k in range(len(us) + 1):
        for eps in combinations(us, k):
            labels = list(g.labels)
            for h in us:
                labels[h] = EPS if h in eps else OMEGA
            yield g.relabel_labels(labels)


def _irr_seed(label: str) -> Component:
    b = GraphBuilder()
    v = b.add_vertex(1, VIRR)
    b.add_hair(v, label)
    return _make(IRR, b.build(), (IRR,))


def _w_loop() -> Component:
    b = GraphBuilder()
    v = b.add_vertex(0, W)
    b.add_edge(v, v)
    return _make(W, b.build(), (W, "loop"))


def manual_components() -> list:
    return [_lone(OMEGA, OMEGA), _lone(OMEGA, EPS), _lone(EPS, EPS), _lone(OMEGA, J),
            _lone(EPS, J), _irr_seed(OMEGA), _irr_seed(EPS), _w_loop()]


def generate_components(rmax: int) -> list:
    """All marked components with 0 <= e <= rmax plus the manual graphs."""
    out = {}
    for kind, g in unmarked_components(rmax):
        template = _key(kind, g)
        for m in _markings(g):
            c = _make(kind, m, template)
            if 0 <= c.e <= rmax:
                out.setdefault(c.key, c)
    comps = [out[k] for k in sorted(out)]
    return comps + manual_components()


# ------------------------------------------------------------- reassembly

def reassemble(components, n_omega_j: int = 0, n_tripods: int = 0) -> HalfEdgeGraph:
    """Glue components back onto vbar in the contracted picture.

    Hairs become edges to vbar coloured B (omega) or E (eps); the w vertex is
    identified with vbar and its half-edges are coloured C.
    """
    b = GraphBuilder()
    vbar = b.add_vertex(1, VBAR)
    for comp in components:
        if comp.kind == LONE:
            x, y = comp.lone
            col = {OMEGA: "B", EPS: "E"}
            if J in (x, y):
                other = x if y == J else y
                b.add_hair(vbar, J, col[other])
            else:
                b.add_edge(vbar, vbar, col[x], col[y])
            continue
        g = comp.graph
        vmap = {}
        for v in range(g.num_vertices):
            if g.marks[v] == W:
                vmap[v] = vbar
            else:
                vmap[v] = b.add_vertex(g.genus[v], g.marks[v])
        for h in range(g.num_half_edges):
            v = g.vertex_of[h]
            p = g.pair[h]
            here = "C" if g.marks[v] == W else ""
            if p < 0:
                lab = g.labels[h]
                if lab == J:
                    b.add_hair(vmap[v], J, here)
                else:
                    b.add_edge(vmap[v], vbar, here, "B" if lab == OMEGA else "E")
            elif h < p:
                w = g.vertex_of[p]
                b.add_edge(vmap[v], vmap[w], here, "C" if g.marks[w] == W else "")
    for _ in range(n_omega_j):
        b.add_hair(vbar, J, "B")
    for _ in range(n_tripods):
        t = b.add_vertex(0, "")
        for _ in range(3):
            b.add_edge(t, vbar, "", "B")
    g = b.build()
    return _order_vbar(g)


def _order_vbar(g: HalfEdgeGraph) -> HalfEdgeGraph:
    return g


# ------------------------------------------------------------- virtual reps

@dataclass
class VirtualRep:
    """One census entry: a component multiset plus the anonymous generator key.

    A B1 multiset contributes one entry per weight-2 basis element.
    """

    components: tuple
    family: str
    edge_group: int
    key: tuple
    graph: HalfEdgeGraph | None = None

    @property
    def special(self) -> Component:
        return next(c for c in self.components if c.crossed)

    @property
    def omega(self) -> int:
        return sum(c.omega for c in self.components)

    @property
    def eps(self) -> int:
        return sum(c.eps for c in self.components)

    @property
    def n_virtual(self) -> int:
        return sum(c.n for c in self.components)

    @property
    def reduced_excess(self) -> int:
        return sum(c.e for c in self.components)

    @property
    def id(self) -> str:
        return hashlib.sha1(repr((self.family, self.key)).encode()).hexdigest()[:12]

    def existence_range(self) -> list:
        return existence_range(self)


def _edges_of(components) -> int:
    return sum(c.edges for c in components)


def edge_group_of(components) -> int:
    """b such that completions have b - n internal edges."""
    om = sum(c.omega for c in components)
    nv = sum(c.n for c in components)
    return _edges_of(components) + 11 - om + nv


def existence_range(rep) -> list:
    comps = rep.components if isinstance(rep, VirtualRep) else rep
    om = sum(c.omega for c in comps)
    nv = sum(c.n for c in comps)
    out = []
    free = 11 - om
    for t in range(free + 1):
        if (free - t) % 3:
            continue
        n = nv + t
        g = genus_of(comps, t, (free - t) // 3)
        out.append((g, n))
    return sorted(out, key=lambda gn: -gn[1])


def genus_of(comps, n_omega_j: int, n_tripods: int) -> int:
    return 1 + sum(c.g + c.eps + c.omega - 1 for c in comps) + 2 * n_tripods


def complete(rep, g: int, n: int) -> tuple:
    """Return (components, #omega-j, #tripods) for the (g, n) completion."""
    comps = rep.components if isinstance(rep, VirtualRep) else rep
    for gg, nn in existence_range(comps):
        if (gg, nn) == (g, n):
            nv = sum(c.n for c in comps)
            t = n - nv
            return comps, t, (11 - sum(c.omega for c in comps) - t) // 3
    raise NotInRange((g, n))


def family_of_components(comps) -> str:
    sp = next(c for c in comps if c.crossed)
    if sp.kind == IRR:
        return BIRR
    if sp.kind == VT:
        return B1
    g = sp.graph
    w = g.vertex(W)
    return A2 if g.valence(w) == 2 else A3


def _w_has_omega_or_loop(comp: Component) -> bool:
    g = comp.graph
    w = g.vertex(W)
    if g.loops_at(w):
        return True
    return any(g.labels[h] == OMEGA for h in g.at(w) if g.pair[h] < 0)


def b1_quotient(graph: HalfEdgeGraph) -> tuple:
    """Keys of the weight-2 and 3b quotient at vt: (all nonzero keys, basis keys)."""
    vt = graph.vertex(VT)
    N = sorted(graph.at(vt))
    raw0 = default_raw(graph)
    keys = set()
    for side in delta_partitions(N):
        colors = {h: ("L" if h in side else "R") for h in N}
        for k, _ in normalize(recolor(raw0, colors, raw0.border)):
            keys.add(k)
    if not keys:
        return (), ()
    order = sorted(keys)
    idx = {k: i for i, k in enumerate(order)}
    red = Reducer(lambda c: -c)
    for r in weight2_relations(recolor(raw0, {h: "L" for h in N}, raw0.border)):
        v = {idx[k]: c for k, c in r.items()}
        red.add(v)
    basis = tuple(order[i] for i in range(len(order)) if not red.is_pivot(i))
    return tuple(order), basis


def _special_ok(comp: Component, rmax: int) -> bool:
    return comp.crossed and 0 <= comp.e <= rmax


def generate_virtual_reps(reduced_excess: int, components: list | None = None) -> list:
    """All nonzero virtual representations with total excess ``reduced_excess``."""
    R = reduced_excess
    comps = components if components is not None else generate_components(R)
    specials = [c for c in comps if _special_ok(c, R)]
    plain = [c for c in comps if not c.crossed and c.e >= 1 and c.e <= R]
    plain.sort(key=lambda c: (c.e, c.key))
    out = []
    for sp in specials:
        rest = R - sp.e
        for k in range(0, rest + 1):
            for combo in combinations_with_replacement(range(len(plain)), k):
                cs = [plain[i] for i in combo]
                if sum(c.e for c in cs) != rest:
                    continue
                members = (sp,) + tuple(cs)
                if sum(c.omega for c in members) > 11:
                    continue
                out.extend(_classify(members))
    out.sort(key=lambda r: (FAMILIES.index(r.family), r.edge_group, r.id))
    return out


def _classify(members: tuple) -> list:
    fam = family_of_components(members)
    sp = members[0]
    if fam == A2 and _w_has_omega_or_loop(sp):
        return []
    g = reassemble(members)
    eg = edge_group_of(members)
    if fam == B1:
        _, basis = b1_quotient(g)
        return [VirtualRep(members, fam, eg, k, g) for k in basis]
    terms = normalize(default_raw(g))
    if not terms:
        return []
    return [VirtualRep(members, fam, eg, terms[0][0], g)]


def census_table(reps: list) -> dict:
    """(family, edge_group) -> number of census entries."""
    table = {}
    for r in reps:
        k = (r.family, r.edge_group)
        table[k] = table.get(k, 0) + 1
    return table


def virtual_multisets(reduced_excess: int, components: list | None = None):
    """Every special component plus positive-excess multiset summing to the excess.

    Unlike ``generate_virtual_reps`` nothing is filtered by family rules; this
    spans every nonzero generator of the given excess after completion.
    """
    R = reduced_excess
    comps = components if components is not None else generate_components(R)
    specials = [c for c in comps if _special_ok(c, R)]
    plain = sorted((c for c in comps if not c.crossed and 1 <= c.e <= R), key=lambda c: (c.e, c.key))
    for sp in specials:
        rest = R - sp.e
        for k in range(0, rest + 1):
            for combo in combinations_with_replacement(range(len(plain)), k):
                cs = tuple(plain[i] for i in combo)
                if sum(c.e for c in cs) == rest and sp.omega + sum(c.omega for c in cs) <= 11:
                    yield (sp,) + cs


def completed_graphs(g: int, n: int, components: list | None = None) -> list:
    """Anonymous completed graphs of type (g, n), one per virtual multiset in range."""
    R = excess(g, n) - 25
    if R < 0:
        return []
    out = []
    for members in virtual_multisets(R, components):
        if (g, n) in existence_range(members):
            _, t, k = complete(members, g, n)
            out.append((members, reassemble(members, t, k)))
    return out


def complete_raw(raw: Raw, n_omega_j: int, n_tripods: int) -> Raw:
    """Append omega-j hairs and omega tripods to a contracted generator."""
    g = raw.graph
    vbar = g.vertex(VBAR)
    genus, marks = list(g.genus), list(g.marks)
    vertex_of, pair = list(g.vertex_of), list(g.pair)
    labels, colors = list(g.labels), list(g.colors)
    border, eorder = list(raw.border), list(raw.eorder)

    def half(v, p, lab, col):
        vertex_of.append(v)
        pair.append(p)
        labels.append(lab)
        colors.append(col)
        return len(vertex_of) - 1

    for _ in range(n_omega_j):
        border.append(half(vbar, -1, J, "B"))
    for _ in range(n_tripods):
        t = len(genus)
        genus.append(0)
        marks.append("")
        for _ in range(3):
            a = len(vertex_of)
            half(t, a + 1, "", "")
            half(vbar, a, "", "B")
            border.append(a + 1)
            eorder.append(a)
    ng = HalfEdgeGraph(tuple(genus), tuple(marks), tuple(vertex_of), tuple(pair), tuple(labels),
                       tuple(colors), g.crossed)
    return Raw(ng, tuple(border), tuple(eorder))


def _drop_completion(g: HalfEdgeGraph, colour: str) -> HalfEdgeGraph:
    """Delete j hairs and tripods attached to vbar through ``colour``; these are
    what completions add."""
    vbar = g.vertex(VBAR)
    drop = set()
    for h in g.at(vbar):
        if g.pair[h] < 0 and g.labels[h] == J and g.colors[h] == colour:
            drop.add(h)
    dead = set()
    for v in range(g.num_vertices):
        hs = g.at(v)
        if (v != vbar and not g.marks[v] and len(hs) == 3
                and all(g.pair[h] >= 0 and g.vertex_of[g.pair[h]] == vbar
                        and g.colors[g.pair[h]] == colour for h in hs)):
            dead.add(v)
            for h in hs:
                drop.update((h, g.pair[h]))
    keep = [h for h in range(g.num_half_edges) if h not in drop]
    hmap = {h: i for i, h in enumerate(keep)}
    vkeep = [v for v in range(g.num_vertices) if v not in dead]
    vmap = {v: i for i, v in enumerate(vkeep)}
    return HalfEdgeGraph(tuple(g.genus[v] for v in vkeep), tuple(g.marks[v] for v in vkeep),
                         tuple(vmap[g.vertex_of[h]] for h in keep),
                         tuple(hmap[g.pair[h]] if g.pair[h] >= 0 else -1 for h in keep),
                         tuple(g.labels[h] for h in keep), tuple(g.colors[h] for h in keep),
                         frozenset(hmap[h] for h in g.crossed if h in hmap))


def _recoloured_key(g: HalfEdgeGraph, mapping: dict, colour: str) -> tuple:
    vbar = g.vertex(VBAR)
    cs = list(g.colors)
    for h in g.at(vbar):
        cs[h] = mapping.get(cs[h], cs[h])
    return canonical_form(_drop_completion(g.relabel_colors(cs), colour)).key


def weight13_group_key(rep: VirtualRep) -> tuple:
    """A2 reps sharing this key differ by which of the twelve omega hairs sit at the crossed vertex."""
    return _recoloured_key(rep.graph, {"C": "B"}, "B")


def weight11_group_key(rep: VirtualRep) -> tuple:
    """Same unmarked component list and the same number of eps hairs.

    B1 entries keep their delta colouring, so weight-2 siblings stay apart.
    """
    g = key_graph(rep.key) if rep.family == B1 else rep.graph
    keys = [_recoloured_key(g, {"B": U, "E": U}, U)]
    if rep.family == B1:
        swap = {"L": "R", "R": "L"}
        keys.append(_recoloured_key(g.relabel_colors([swap.get(c, c) for c in g.colors]),
                                    {"B": U, "E": U}, U))
    return (rep.family, rep.eps, min(keys))


def relation_groups(reps: list) -> list:
    """Candidate relation groups (weight 13 for A2, weight 11 for B1 and Birr)."""
    groups: dict = {}
    for r in reps:
        if r.family == A2:
            k = ("w13", r.edge_group, weight13_group_key(r))
        elif r.family in (B1, BIRR):
            k = ("w11", r.edge_group, weight11_group_key(r))
        else:
            continue
        groups.setdefault(k, []).append(r)
    return [groups[k] for k in sorted(groups)]
