"""Half-edge multigraphs with labels, colours and crossed features.

A graph is a tuple of vertices (genus and an optional mark such as ``vbar``)
and a tuple of half-edges.  A half-edge is either paired with another one (an
internal edge, possibly a loop) or is a hair carrying a label.  Every
half-edge also carries a colour string used for decoration membership, for
instance ``B`` for the half-edges of the special vertex indexed by an omega
class.  At most one feature (edge, loop or hair) can be flagged as crossed.

Canonical forms are computed by individualisation and refinement over vertex
orderings; the search keeps every ordering that reaches the minimal encoding,
which yields the full automorphism group together with the local symmetries
permuting interchangeable edges, loop ends and hairs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial

OMEGA = "omega"
EPSILON = "eps"
U = "u"
ANON_J = "j"

EDGES = "edges"
EDGES_AND_B = "edges_and_b"
EDGES_AND_EPS = "edges_and_eps"

PLAIN = "plain"
CROSSED = "crossed"


def J(k: int | None = None) -> str:
    """Label of a marked point; ``J()`` is an anonymous marked point."""
    return ANON_J if k is None else f"j{k}"


def is_j(label: str) -> bool:
    return label == ANON_J or (label.startswith("j") and label[1:].isdigit())


def j_number(label: str) -> int | None:
    return int(label[1:]) if label.startswith("j") and label[1:].isdigit() else None


class Violation(ValueError):
    pass


class NoCrossedEdge(ValueError):
    pass


@dataclass(frozen=True)
class HalfEdgeGraph:
    genus: tuple
    marks: tuple
    vertex_of: tuple
    pair: tuple
    labels: tuple
    colors: tuple
    crossed: frozenset = frozenset()
    _at: tuple = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        at = [[] for _ in self.genus]
        for h, v in enumerate(self.vertex_of):
            at[v].append(h)
        object.__setattr__(self, "_at", tuple(tuple(x) for x in at))

    @property
    def num_vertices(self) -> int:
        return len(self.genus)

    @property
    def num_half_edges(self) -> int:
        return len(self.vertex_of)

    def at(self, v: int) -> tuple:
        return self._at[v]

    def valence(self, v: int) -> int:
        return len(self._at[v])

    def is_hair(self, h: int) -> bool:
        return self.pair[h] < 0

    def hairs(self) -> list:
        return [h for h, p in enumerate(self.pair) if p < 0]

    def edges(self) -> list:
        """All paired half-edge couples (h, h') with h < h', crossed included."""
        return [(h, p) for h, p in enumerate(self.pair) if p > h]

    def internal_edges(self) -> list:
        """Edges that are not crossed; these carry the orientation."""
        return [(h, p) for h, p in self.edges() if h not in self.crossed]

    def num_internal_edges(self) -> int:
        return len(self.internal_edges())

    def vertices_with_mark(self, mark: str) -> list:
        return [v for v, m in enumerate(self.marks) if m == mark]

    def vertex(self, mark: str) -> int:
        vs = self.vertices_with_mark(mark)
        if len(vs) != 1:
            raise KeyError(mark)
        return vs[0]

    def is_connected(self) -> bool:
        n = self.num_vertices
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for h in self._at[v]:
                p = self.pair[h]
                if p >= 0:
                    w = self.vertex_of[p]
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return len(seen) == n

    def betti(self) -> int:
        return len(self.edges()) - self.num_vertices + 1

    def loops_at(self, v: int) -> list:
        return [(h, p) for h, p in self.edges() if self.vertex_of[h] == v and self.vertex_of[p] == v]

    def neighbours(self, v: int) -> list:
        return [self.vertex_of[self.pair[h]] for h in self._at[v] if self.pair[h] >= 0]

    def relabel_colors(self, colors) -> "HalfEdgeGraph":
        return HalfEdgeGraph(self.genus, self.marks, self.vertex_of, self.pair, self.labels,
                             tuple(colors), self.crossed)

    def relabel_labels(self, labels) -> "HalfEdgeGraph":
        return HalfEdgeGraph(self.genus, self.marks, self.vertex_of, self.pair, tuple(labels),
                             self.colors, self.crossed)

    def with_marks(self, marks) -> "HalfEdgeGraph":
        return HalfEdgeGraph(self.genus, tuple(marks), self.vertex_of, self.pair, self.labels,
                             self.colors, self.crossed)


class GraphBuilder:
    """Mutable helper assembling a HalfEdgeGraph."""

    def __init__(self):
        self.genus = []
        self.marks = []
        self.vertex_of = []
        self.pair = []
        self.labels = []
        self.colors = []
        self.crossed = set()

    def add_vertex(self, genus: int = 0, mark: str = "") -> int:
        self.genus.append(genus)
        self.marks.append(mark)
        return len(self.genus) - 1

    def _half(self, v: int, label: str = "", color: str = "") -> int:
        self.vertex_of.append(v)
        self.pair.append(-1)
        self.labels.append(label)
        self.colors.append(color)
        return len(self.vertex_of) - 1

    def add_edge(self, u: int, v: int, cu: str = "", cv: str = "", crossed: bool = False) -> tuple:
        a = self._half(u, "", cu)
        b = self._half(v, "", cv)
        self.pair[a] = b
        self.pair[b] = a
        if crossed:
            self.crossed.update((a, b))
        return a, b

    def add_hair(self, v: int, label: str, color: str = "", crossed: bool = False) -> int:
        h = self._half(v, label, color)
        if crossed:
            self.crossed.add(h)
        return h

    def build(self) -> HalfEdgeGraph:
        return HalfEdgeGraph(tuple(self.genus), tuple(self.marks), tuple(self.vertex_of),
                             tuple(self.pair), tuple(self.labels), tuple(self.colors),
                             frozenset(self.crossed))


def validate(graph: HalfEdgeGraph, mode: str = "stable-graph") -> None:
    """Raise Violation when ``graph`` breaks the rules of ``mode``.

    ``stable-graph``: connected, stable vertices, unmarked genus-0 vertices at
    least trivalent, without loops and without multiple edges between two
    unmarked vertices.  ``blown-component``: connected and every vertex at
    least trivalent.
    """
    g = graph
    for h, p in enumerate(g.pair):
        if p >= 0 and g.pair[p] != h:
            raise Violation("pairing is not an involution")
        if p == h:
            raise Violation("pairing has a fixed point")
        if p >= 0 and g.labels[h]:
            raise Violation("label on a paired half-edge")
        if p < 0 and not g.labels[h]:
            raise Violation("unlabelled hair")
    crossed_edges = {frozenset((h, g.pair[h])) if g.pair[h] >= 0 else frozenset((h,)) for h in g.crossed}
    if len(crossed_edges) > 1:
        raise Violation("more than one crossed feature")
    if not g.is_connected():
        raise Violation("connectivity")
    if mode == "stable-graph":
        for v in range(g.num_vertices):
            if 2 * g.genus[v] - 2 + g.valence(v) <= 0:
                raise Violation(f"stability at vertex {v}")
            if g.marks[v]:
                continue
            if g.genus[v] != 0:
                raise Violation(f"genus at unmarked vertex {v}")
            if g.valence(v) < 3:
                raise Violation(f"valence at vertex {v}")
            if g.loops_at(v):
                raise Violation(f"loop at unmarked vertex {v}")
        seen = set()
        for h, p in g.edges():
            u, w = g.vertex_of[h], g.vertex_of[p]
            if u == w or g.marks[u] or g.marks[w]:
                continue
            key = (min(u, w), max(u, w))
            if key in seen:
                raise Violation(f"multiple edge between {u} and {w}")
            seen.add(key)
    elif mode == "blown-component":
        for v in range(g.num_vertices):
            if g.valence(v) < 3:
                raise Violation(f"valence at vertex {v}")
    else:
        raise ValueError(mode)


def _attr(g: HalfEdgeGraph, h: int) -> str:
    return f"{g.colors[h]}|{g.labels[h]}|{'x' if h in g.crossed else ''}"


@dataclass
class GraphIso:
    """A structure preserving bijection given by vertex and half-edge maps."""

    vertex_map: tuple
    half_edge_map: tuple

    def compose(self, other: "GraphIso") -> "GraphIso":
        """``self`` after ``other``."""
        return GraphIso(tuple(self.vertex_map[v] for v in other.vertex_map),
                        tuple(self.half_edge_map[h] for h in other.half_edge_map))

    def inverse(self) -> "GraphIso":
        vm = [0] * len(self.vertex_map)
        for a, b in enumerate(self.vertex_map):
            vm[b] = a
        hm = [0] * len(self.half_edge_map)
        for a, b in enumerate(self.half_edge_map):
            hm[b] = a
        return GraphIso(tuple(vm), tuple(hm))

    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self.half_edge_map)) and \
            all(a == b for a, b in enumerate(self.vertex_map))


@dataclass
class Canon:
    """Canonical form of a graph.

    ``iso`` maps the input onto ``graph``, the canonical representative.
    ``aut_generators`` generate the automorphism group of the input and
    ``aut_order`` is its order.
    """

    key: tuple
    graph: HalfEdgeGraph
    iso: GraphIso
    aut_generators: list
    aut_order: int
    _leaf_isos: list = field(default_factory=list, repr=False)
    _local: list = field(default_factory=list, repr=False)

    @property
    def encoding(self) -> bytes:
        return repr(self.key).encode()


def _refine(cls: list, adj: list) -> list:
    ncls = len(set(cls))
    while True:
        sigs = [(cls[v], tuple(sorted((a, cls[w], b) for a, w, b in adj[v]))) for v in range(len(cls))]
        order = sorted(set(sigs))
        if len(order) == ncls:
            rank = {s: i for i, s in enumerate(order)}
            return [rank[s] for s in sigs]
        ncls = len(order)
        rank = {s: i for i, s in enumerate(order)}
        cls = [rank[s] for s in sigs]


def canonical_form(graph: HalfEdgeGraph) -> Canon:
    g = graph
    nv = g.num_vertices
    attr = [_attr(g, h) for h in range(g.num_half_edges)]
    adj = [[] for _ in range(nv)]
    for h, p in enumerate(g.pair):
        if p >= 0:
            adj[g.vertex_of[h]].append((attr[h], g.vertex_of[p], attr[p]))
    init = []
    for v in range(nv):
        hs = g.at(v)
        init.append((g.genus[v], g.marks[v],
                     tuple(sorted((attr[h], g.pair[h] < 0) for h in hs))))
    order = sorted(set(init))
    rank = {s: i for i, s in enumerate(order)}
    cls = _refine([rank[s] for s in init], adj)
    edges = g.edges()
    hairs = g.hairs()
    vinfo = [(g.genus[v], g.marks[v]) for v in range(nv)]

    best = [None]
    leaves = []

    def leaf(pos):
        vert = [None] * nv
        for v in range(nv):
            vert[pos[v]] = vinfo[v]
        ekeys = []
        for a, b in edges:
            e1 = (pos[g.vertex_of[a]], attr[a])
            e2 = (pos[g.vertex_of[b]], attr[b])
            if e2 < e1:
                ekeys.append((e2, e1, b, a))
            else:
                ekeys.append((e1, e2, a, b))
        ekeys.sort(key=lambda t: (t[0], t[1]))
        hkeys = sorted(((pos[g.vertex_of[h]], attr[h]), h) for h in hairs)
        enc = (tuple(vert), tuple((e1, e2) for e1, e2, _, _ in ekeys), tuple(k for k, _ in hkeys))
        if best[0] is None or enc < best[0]:
            best[0] = enc
            leaves.clear()
        if enc == best[0]:
            leaves.append((tuple(pos), ekeys, hkeys))

    def search(c):
        cells = {}
        for v, x in enumerate(c):
            cells.setdefault(x, []).append(v)
        target = None
        for x in sorted(cells):
            if len(cells[x]) > 1:
                target = x
                break
        if target is None:
            leaf(c)
            return
        for v in cells[target]:
            c2 = [2 * x + (1 if (x == target and u != v) else 0) for u, x in enumerate(c)]
            search(_refine(c2, adj))

    search(cls)
    enc = best[0]
    ne = len(edges)

    def iso_of(lf) -> GraphIso:
        pos, ekeys, hkeys = lf
        hm = [0] * g.num_half_edges
        for i, (_, _, a, b) in enumerate(ekeys):
            hm[a] = 2 * i
            hm[b] = 2 * i + 1
        for i, (_, h) in enumerate(hkeys):
            hm[h] = 2 * ne + i
        return GraphIso(pos, tuple(hm))

    isos = [iso_of(lf) for lf in leaves]
    iso0 = isos[0]
    # canonical representative
    nh = g.num_half_edges
    c_vertex_of = [0] * nh
    c_pair = [-1] * nh
    c_labels = [""] * nh
    c_colors = [""] * nh
    c_crossed = set()
    for h in range(nh):
        nh_ = iso0.half_edge_map[h]
        c_vertex_of[nh_] = iso0.vertex_map[g.vertex_of[h]]
        p = g.pair[h]
        c_pair[nh_] = iso0.half_edge_map[p] if p >= 0 else -1
        c_labels[nh_] = g.labels[h]
        c_colors[nh_] = g.colors[h]
        if h in g.crossed:
            c_crossed.add(nh_)
    cg = HalfEdgeGraph(tuple(x[0] for x in enc[0]), tuple(x[1] for x in enc[0]),
                       tuple(c_vertex_of), tuple(c_pair), tuple(c_labels), tuple(c_colors),
                       frozenset(c_crossed))
    # local symmetries of the canonical representative (vertex-fixing)
    local = []
    local_order = 1
    ekeys_c = enc[1]
    i = 0
    while i < ne:
        j = i
        while j + 1 < ne and ekeys_c[j + 1] == ekeys_c[i]:
            j += 1
        run = j - i + 1
        local_order *= factorial(run)
        flippable = ekeys_c[i][0] == ekeys_c[i][1]
        if flippable:
            local_order *= 2 ** run
            local.append(("flip", 2 * i))
        for k in range(i, j):
            local.append(("swap_edges", 2 * k, 2 * k + 2))
        i = j + 1
    hk = enc[2]
    nhair = len(hk)
    i = 0
    while i < nhair:
        j = i
        while j + 1 < nhair and hk[j + 1] == hk[i]:
            j += 1
        local_order *= factorial(j - i + 1)
        for k in range(i, j):
            local.append(("swap_hairs", 2 * ne + k, 2 * ne + k + 1))
        i = j + 1
    local_perms = []
    for item in local:
        p = list(range(nh))
        if item[0] == "flip":
            a = item[1]
            p[a], p[a + 1] = a + 1, a
        elif item[0] == "swap_edges":
            a, b = item[1], item[2]
            p[a], p[b] = b, a
            p[a + 1], p[b + 1] = b + 1, a + 1
        else:
            a, b = item[1], item[2]
            p[a], p[b] = b, a
        local_perms.append(GraphIso(tuple(range(nv)), tuple(p)))
    inv0 = iso0.inverse()
    gens = []
    for iso in isos[1:]:
        gens.append(inv0.compose(iso))
    for lp in local_perms:
        gens.append(inv0.compose(lp).compose(iso0))
    return Canon(enc, cg, iso0, gens, len(isos) * local_order, isos, local_perms)


def iter_automorphisms(graph: HalfEdgeGraph, canon: Canon | None = None):
    """Enumerate every automorphism of ``graph`` (small groups only)."""
    c = canon or canonical_form(graph)
    inv0 = c.iso.inverse()
    cg = c.graph
    nh = cg.num_half_edges
    nv = cg.num_vertices
    # rebuild the full local group as a product of symmetric groups and flips
    enc = c.key
    ne = len(enc[1])
    blocks = []
    i = 0
    while i < ne:
        j = i
        while j + 1 < ne and enc[1][j + 1] == enc[1][i]:
            j += 1
        blocks.append(("edges", list(range(i, j + 1)), enc[1][i][0] == enc[1][i][1]))
        i = j + 1
    hk = enc[2]
    i = 0
    while i < len(hk):
        j = i
        while j + 1 < len(hk) and hk[j + 1] == hk[i]:
            j += 1
        blocks.append(("hairs", list(range(i, j + 1)), False))
        i = j + 1
    choices = []
    for kind, idx, flip in blocks:
        opts = []
        for perm in permutations(idx):
            flips = product((0, 1), repeat=len(idx)) if flip else [(0,) * len(idx)]
            for fl in flips:
                opts.append((kind, idx, perm, fl))
        choices.append(opts)
    locals_ = []
    for combo in product(*choices):
        p = list(range(nh))
        for kind, idx, perm, fl in combo:
            for a, b, f in zip(idx, perm, fl):
                if kind == "edges":
                    if f:
                        p[2 * a], p[2 * a + 1] = 2 * b + 1, 2 * b
                    else:
                        p[2 * a], p[2 * a + 1] = 2 * b, 2 * b + 1
                else:
                    p[2 * ne + a] = 2 * ne + b
        locals_.append(GraphIso(tuple(range(nv)), tuple(p)))
    for iso in c._leaf_isos:
        for lp in locals_:
            yield inv0.compose(lp).compose(iso)


def automorphisms(graph: HalfEdgeGraph, fix_numbered_j: bool = True,
                  permute_anonymous_j: bool = False) -> list:
    """Full automorphism group of ``graph`` as a list of GraphIso.

    Numbered marked points are always fixed because their labels differ.
    Anonymous marked points are held fixed unless ``permute_anonymous_j``.
    """
    if permute_anonymous_j:
        return list(iter_automorphisms(graph))
    g = pin_anonymous_j(graph)
    return list(iter_automorphisms(g))


def automorphism_order(graph: HalfEdgeGraph, permute_anonymous_j: bool = False) -> int:
    g = graph if permute_anonymous_j else pin_anonymous_j(graph)
    return canonical_form(g).aut_order


def pin_anonymous_j(graph: HalfEdgeGraph) -> HalfEdgeGraph:
    """Give anonymous marked points distinct labels so automorphisms fix them."""
    labels = list(graph.labels)
    k = 0
    changed = False
    for h, lab in enumerate(labels):
        if lab == ANON_J:
            labels[h] = f"j#{k}"
            k += 1
            changed = True
    return graph.relabel_labels(labels) if changed else graph


def permutation_sign(seq_from, seq_to) -> int:
    """Sign of the permutation taking the ordering ``seq_from`` to ``seq_to``."""
    index = {x: i for i, x in enumerate(seq_to)}
    perm = [index[x] for x in seq_from]
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def edge_sign(auto: GraphIso, graph: HalfEdgeGraph) -> int:
    """Parity of the permutation induced on non-crossed internal edges."""
    edges = graph.internal_edges()
    index = {}
    for i, (a, b) in enumerate(edges):
        index[a] = i
        index[b] = i
    hm = auto.half_edge_map
    image = [index[hm[a]] for a, _ in edges]
    return permutation_sign(list(range(len(edges))), image)


def _ordered_sign(auto: GraphIso, members: list) -> int:
    hm = auto.half_edge_map
    return permutation_sign(members, [hm[h] for h in members])


def sign_of(auto: GraphIso, graph: HalfEdgeGraph, convention: str = EDGES) -> int:
    s = edge_sign(auto, graph)
    if convention == EDGES:
        return s
    if convention == EDGES_AND_B:
        return s * _ordered_sign(auto, [h for h, c in enumerate(graph.colors) if c == "B"])
    if convention == EDGES_AND_EPS:
        return s * _ordered_sign(auto, [h for h in graph.hairs() if graph.labels[h] == EPSILON])
    raise ValueError(convention)


def has_odd_symmetry(graph: HalfEdgeGraph, convention: str = EDGES,
                     permute_anonymous_j: bool = False) -> bool:
    g = graph if permute_anonymous_j else pin_anonymous_j(graph)
    c = canonical_form(g)
    return any(sign_of(a, g, convention) < 0 for a in c.aut_generators)


def contract_crossed(graph: HalfEdgeGraph) -> HalfEdgeGraph:
    """Merge the two ends of the crossed internal edge and delete it."""
    g = graph
    ce = [(h, p) for h, p in g.edges() if h in g.crossed]
    if not ce:
        raise NoCrossedEdge("no crossed internal edge")
    a, b = ce[0]
    u, w = g.vertex_of[a], g.vertex_of[b]
    if u == w:
        raise NoCrossedEdge("crossed feature is a loop")
    keep_v = [v for v in range(g.num_vertices) if v != w]
    vnew = {v: i for i, v in enumerate(keep_v)}
    vnew[w] = vnew[u]
    keep_h = [h for h in range(g.num_half_edges) if h not in (a, b)]
    hnew = {h: i for i, h in enumerate(keep_h)}
    genus = tuple(g.genus[v] for v in keep_v)
    genus = tuple(x + (g.genus[w] if v == u else 0) for v, x in zip(keep_v, genus))
    marks = tuple(g.marks[v] or (g.marks[w] if v == u else "") for v in keep_v)
    return HalfEdgeGraph(genus, marks,
                         tuple(vnew[g.vertex_of[h]] for h in keep_h),
                         tuple(hnew[g.pair[h]] if g.pair[h] >= 0 else -1 for h in keep_h),
                         tuple(g.labels[h] for h in keep_h),
                         tuple(g.colors[h] for h in keep_h),
                         frozenset())


def induced_subgraph(graph: HalfEdgeGraph, vertices) -> tuple:
    """Subgraph on ``vertices``; half-edges leaving it become hairs.

    Returns (subgraph, map old half-edge -> new half-edge).
    """
    vs = sorted(vertices)
    vnew = {v: i for i, v in enumerate(vs)}
    hs = [h for h in range(graph.num_half_edges) if graph.vertex_of[h] in vnew]
    hnew = {h: i for i, h in enumerate(hs)}
    pair = []
    for h in hs:
        p = graph.pair[h]
        pair.append(hnew[p] if p >= 0 and p in hnew else -1)
    sub = HalfEdgeGraph(tuple(graph.genus[v] for v in vs), tuple(graph.marks[v] for v in vs),
                        tuple(vnew[graph.vertex_of[h]] for h in hs), tuple(pair),
                        tuple(graph.labels[h] for h in hs), tuple(graph.colors[h] for h in hs),
                        frozenset(hnew[h] for h in graph.crossed if h in hnew))
    return sub, hnew


# ---------------------------------------------------------------- serialization

def to_text(graph: HalfEdgeGraph) -> str:
    lines = []
    for v, (gv, m) in enumerate(zip(graph.genus, graph.marks)):
        lines.append(f"v {v} {gv} {m or '-'}")
    for h in range(graph.num_half_edges):
        lines.append(f"h {h} {graph.vertex_of[h]} {graph.pair[h]} {graph.labels[h] or '-'} "
                     f"{graph.colors[h] or '-'} {1 if h in graph.crossed else 0}")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> HalfEdgeGraph:
    genus, marks, vo, pair, labels, colors, crossed = [], [], [], [], [], [], set()
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "v":
            genus.append(int(parts[2]))
            marks.append("" if parts[3] == "-" else parts[3])
        elif parts[0] == "h":
            h = int(parts[1])
            vo.append(int(parts[2]))
            pair.append(int(parts[3]))
            labels.append("" if parts[4] == "-" else parts[4])
            colors.append("" if parts[5] == "-" else parts[5])
            if parts[6] == "1":
                crossed.add(h)
        else:
            raise ValueError(f"bad line {line!r}")
    return HalfEdgeGraph(tuple(genus), tuple(marks), tuple(vo), tuple(pair), tuple(labels),
                         tuple(colors), frozenset(crossed))


def to_json(graph: HalfEdgeGraph) -> dict:
    return {"genus": list(graph.genus), "marks": list(graph.marks),
            "vertex_of": list(graph.vertex_of), "pair": list(graph.pair),
            "labels": list(graph.labels), "colors": list(graph.colors),
            "crossed": sorted(graph.crossed)}


def from_json(data: dict) -> HalfEdgeGraph:
    return HalfEdgeGraph(tuple(data["genus"]), tuple(data["marks"]), tuple(data["vertex_of"]),
                         tuple(data["pair"]), tuple(data["labels"]), tuple(data["colors"]),
                         frozenset(data["crossed"]))


def dumps(graph: HalfEdgeGraph) -> str:
    return json.dumps(to_json(graph), sort_keys=True)


def to_dot(graph: HalfEdgeGraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v, (gv, m) in enumerate(zip(graph.genus, graph.marks)):
        label = m or ""
        if gv:
            label += f" g={gv}"
        out.append(f'  v{v} [label="{label.strip()}"];')
    for a, b in graph.edges():
        style = ' [style=dashed, label="x"]' if a in graph.crossed else ""
        ca, cb = graph.colors[a], graph.colors[b]
        if ca or cb:
            style = style[:-1] + f', taillabel="{ca}", headlabel="{cb}"]' if style else \
                f' [taillabel="{ca}", headlabel="{cb}"]'
        out.append(f"  v{graph.vertex_of[a]} -- v{graph.vertex_of[b]}{style};")
    for h in graph.hairs():
        out.append(f'  h{h} [shape=plaintext, label="{graph.labels[h]}"];')
        style = " [style=dashed]" if h in graph.crossed else ""
        out.append(f"  v{graph.vertex_of[h]} -- h{h}{style};")
    out.append("}")
    return "\n".join(out) + "\n"
