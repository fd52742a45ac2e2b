"""Assembly of the relation-resolved complex, cohomology and reports."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from gmpy2 import mpq

from . import differential
from .blowup_enumerator import (A2, FAMILIES, VirtualRep, census_table, complete, complete_raw,
                                completed_graphs, generate_virtual_reps, relation_groups)
from .decoration_algebra import (VT, Raw, canonical_raw, default_raw, degree_of,
                                 delta_partitions, key_graph, local_relations, normalize,
                                 pulled_back, recolor, sn_act)
from .exact_linalg import Reducer, SparseMat, trace_on_cohomology
from .graph_kernel import ANON_J, HalfEdgeGraph, to_dot
from .symmetric_rep import SnCharacter, decompose, partitions


class TooLarge(ValueError):
    pass


class OutsideUniverse(RuntimeError):
    """A relation or differential term left the enumerated generator set."""


def colorings(graph: HalfEdgeGraph) -> list:
    """The graph itself, or all delta partitions at vt for family B1."""
    if VT not in graph.marks:
        return [default_raw(graph)]
    vt = graph.vertex(VT)
    N = sorted(graph.at(vt))
    raw0 = default_raw(graph)
    out = []
    for side in delta_partitions(N):
        out.append(recolor(raw0, {h: ("L" if h in side else "R") for h in N}, raw0.border))
    return out


def _set_partitions(labels: list, sizes: list):
    if not sizes:
        yield []
        return
    for first in combinations(labels, sizes[0]):
        rest = [x for x in labels if x not in first]
        for tail in _set_partitions(rest, sizes[1:]):
            yield [first] + tail


def labelings(graph: HalfEdgeGraph, n: int):
    """Numbered versions of ``graph``, one per assignment of label sets to
    classes of j hairs sharing a vertex and a colour."""
    js = [h for h, lab in enumerate(graph.labels) if lab == ANON_J]
    if len(js) != n:
        raise ValueError("marked point count mismatch")
    classes: dict = {}
    for h in js:
        classes.setdefault((graph.vertex_of[h], graph.colors[h]), []).append(h)
    groups = [classes[k] for k in sorted(classes)]
    for parts in _set_partitions(list(range(1, n + 1)), [len(gp) for gp in groups]):
        labels = list(graph.labels)
        for gp, part in zip(groups, parts):
            for h, k in zip(gp, part):
                labels[h] = f"j{k}"
        yield graph.relabel_labels(labels)


def labeled_generators(g: int, n: int, rank_of=None) -> dict:
    """All nonzero canonical labelled generators of type (g, n), by degree.

    Keys are sorted by ``(rank_of(key), key)``; quotient bases prefer early keys.
    """
    seen = set()
    by_degree: dict = {}
    for _, graph in completed_graphs(g, n):
        for lg in labelings(graph, n):
            for raw in colorings(lg):
                for key, _ in normalize(raw):
                    if key not in seen:
                        seen.add(key)
                        by_degree.setdefault(degree_of(key_graph(key)), []).append(key)
    sort_key = (lambda k: (rank_of(k), k)) if rank_of else None
    for k in by_degree:
        by_degree[k].sort(key=sort_key)
    return by_degree


@dataclass
class AssembledComplex:
    g: int
    n: int
    universe: dict
    reducers: dict
    basis: dict
    d: dict = field(default_factory=dict)
    log: dict = field(default_factory=dict)

    @property
    def degrees(self) -> list:
        return sorted(self.universe)

    def coords(self, degree: int, vec: dict) -> dict:
        """Coordinates of a formal sum in the quotient basis of ``degree``."""
        idx = self.universe_index[degree]
        for k in vec:
            if k not in idx:
                raise OutsideUniverse(k)
        red = self.reducers[degree]
        v = red.reduce({idx[k]: c for k, c in vec.items()})
        bidx = self.basis_index[degree]
        return {bidx[c]: a for c, a in v.items()}

    def dims(self) -> dict:
        return {k: len(self.basis[k]) for k in self.degrees}


def _resolve(universe: dict) -> tuple:
    reducers = {}
    basis = {}
    log = {}
    index = {k: {key: i for i, key in enumerate(keys)} for k, keys in universe.items()}
    seen: set = set()
    for deg, keys in universe.items():
        red = Reducer(lambda c: -c)
        idx = index[deg]
        nrel = 0
        for key in keys:
            for r in local_relations(canonical_raw(key), True, seen):
                for k in r:
                    if k not in idx:
                        raise OutsideUniverse(k)
                red.add({idx[k]: c for k, c in r.items()})
                nrel += 1
        reducers[deg] = red
        basis[deg] = [key for i, key in enumerate(keys) if not red.is_pivot(i)]
        log[deg] = {"generators": len(keys), "relations": nrel, "rank": len(red)}
    return reducers, basis, log, index


def build_complex(g: int, n: int, max_n: int = 5, force: bool = False,
                  rank_of=None) -> AssembledComplex:
    if n > max_n and not force:
        raise TooLarge(n)
    universe = labeled_generators(g, n, rank_of)
    reducers, basis, log, index = _resolve(universe)
    cx = AssembledComplex(g, n, universe, reducers, basis, log=log)
    cx.universe_index = index
    cx.basis_index = {k: {index[k][key]: i for i, key in enumerate(basis[k])} for k in basis}
    for deg in cx.degrees:
        cols = []
        for key in basis[deg]:
            img = differential.total_differential(key)
            if not img:
                cols.append({})
                continue
            if deg + 1 not in universe:
                raise OutsideUniverse(next(iter(img)))
            cols.append(cx.coords(deg + 1, img))
        nrows = len(basis.get(deg + 1, []))
        cx.d[deg] = SparseMat.from_columns(nrows, cols)
    return cx


def check_d_squared(cx: AssembledComplex) -> bool:
    for deg in cx.degrees:
        if deg + 1 in cx.d:
            if not cx.d[deg + 1].matmul(cx.d[deg]).is_zero():
                return False
    return True


def _zero(nrows: int, ncols: int) -> SparseMat:
    return SparseMat(nrows, ncols, {})


def action_matrix(cx: AssembledComplex, degree: int, sigma: dict) -> SparseMat:
    cols = []
    for key in cx.basis[degree]:
        vec: dict = {}
        for k, c in sn_act(sigma, key):
            vec[k] = vec.get(k, 0) + c
        cols.append(cx.coords(degree, vec))
    m = len(cx.basis[degree])
    return SparseMat.from_columns(m, cols)


def _perm_of_type(mu) -> dict:
    sigma = {}
    start = 1
    for part in mu:
        for i in range(part):
            sigma[start + i] = start + (i + 1) % part
        start += part
    return sigma


def cohomology(cx: AssembledComplex, specht: bool = True) -> dict:
    """Per-degree {"dim": int, "specht": SpechtDecomposition | None}."""
    out = {}
    for deg in cx.degrees:
        m = len(cx.basis[deg])
        d_prev = cx.d.get(deg - 1, _zero(m, len(cx.basis.get(deg - 1, []))))
        d_next = cx.d.get(deg, _zero(len(cx.basis.get(deg + 1, [])), m))
        if d_prev.nrows != m:
            d_prev = _zero(m, 0)
        ident = SparseMat.identity(m)
        dim = int(trace_on_cohomology(d_prev, d_next, ident))
        entry = {"dim": dim, "specht": None}
        if specht and dim:
            vals = {}
            for mu in partitions(cx.n):
                act = action_matrix(cx, deg, _perm_of_type(mu))
                vals[mu] = trace_on_cohomology(d_prev, d_next, act)
            entry["specht"] = decompose(SnCharacter(cx.n, vals))
        out[deg] = entry
    return out


# ------------------------------------------------- virtual representation level

def excess_pairs(reduced_excess: int) -> list:
    """All (g, n) with g >= 1 and 3g + 2n = 25 + reduced_excess, largest n first."""
    E = 25 + reduced_excess
    return [(g, (E - 3 * g) // 2) for g in range(1, E // 3 + 1) if (E - 3 * g) % 2 == 0]


def rep_degree(rep: VirtualRep, n: int) -> int:
    return 13 + rep.edge_group - n


def member_vectors(rep: VirtualRep, g: int, n: int) -> list:
    """Formal sums spanning the subspace contributed by ``rep`` at (g, n).

    A2 entries contribute the pulled-back classes on which the weight-13
    relations act; every other entry contributes plain generators.
    """
    _, t, k = complete(rep, g, n)
    raw = complete_raw(canonical_raw(rep.key), t, k)
    seen = set()
    out = []
    for lg in labelings(raw.graph, n):
        r = Raw(lg, raw.border, raw.eorder)
        vec = pulled_back(r) if rep.family == A2 else dict(normalize(r))
        if not vec:
            continue
        tag = tuple(sorted(vec))
        if tag not in seen:
            seen.add(tag)
            out.append(vec)
    return out


def _span(cx: AssembledComplex, degree: int, vecs) -> Reducer:
    red = Reducer()
    for v in vecs:
        red.add(cx.coords(degree, v))
    return red


@dataclass
class GroupResult:
    family: str
    edge_group: int
    members: list
    redundant: list
    independent: bool

    @property
    def size(self) -> int:
        return len(self.members)


def _group_ok(group: list, drop: tuple, complexes: dict, vectors) -> bool:
    kept = [m for m in group if m not in drop]
    for (g, n), cx in complexes.items():
        here = [m for m in group if (g, n) in m.existence_range()]
        if not here:
            continue
        deg = rep_degree(here[0], n)
        full = len(_span(cx, deg, [v for m in here for v in vectors(m, g, n)]))
        parts = [len(_span(cx, deg, vectors(m, g, n))) for m in kept if m in here]
        joint = len(_span(cx, deg, [v for m in kept if m in here for v in vectors(m, g, n)]))
        if joint != full or sum(parts) != joint:
            return False
    return True


def relation_group_report(reduced_excess: int, complexes: dict | None = None) -> list:
    """Nontrivial weight-13/11 relation groups and their redundant members.

    The redundant members are a smallest set whose removal leaves the rest of
    the group independent and spanning at every (g, n); ties go to the first
    set in census order.
    """
    reps = generate_virtual_reps(reduced_excess)
    complexes = excess_complexes(reduced_excess, complexes)
    cache: dict = {}

    def vectors(m, g, n):
        ck = (m.id, g, n)
        if ck not in cache:
            cache[ck] = member_vectors(m, g, n)
        return cache[ck]

    out = []
    for group in relation_groups(reps):
        if len(group) < 2:
            continue
        found = None
        for size in range(len(group)):
            for drop in combinations(group, size):
                if _group_ok(group, drop, complexes, vectors):
                    found = list(drop)
                    break
            if found is not None:
                break
        out.append(GroupResult(group[0].family, group[0].edge_group, group, found or [],
                               found is not None))
    return out


def excess_complexes(reduced_excess: int, complexes: dict | None = None) -> dict:
    """Full labeled complexes at every (g, n) of the excess, reusing ``complexes``."""
    complexes = complexes if complexes is not None else {}
    for gn in excess_pairs(reduced_excess):
        if gn not in complexes:
            complexes[gn] = build_complex(*gn, force=True)
    return complexes


class _Solver:
    """Coordinates with respect to a basis given as vectors in quotient coordinates."""

    def __init__(self, vectors: list, dim: int):
        self.dim = dim
        self.size = len(vectors)
        self.red = Reducer(lambda c: (c >= dim, c))
        for i, v in enumerate(vectors):
            w = dict(v)
            w[dim + i] = mpq(1)
            self.red.add(w)

    @property
    def square(self) -> bool:
        return self.size == self.dim and all(self.red.is_pivot(c) for c in range(self.dim))

    def solve(self, y: dict) -> dict:
        r = self.red.reduce(y)
        if any(c < self.dim for c in r):
            raise ValueError("vector outside the span")
        return {c - self.dim: -a for c, a in r.items()}


def _invert(block: list) -> list:
    """Gauss-Jordan inverse of a square dense matrix of mpq; None when singular."""
    m = len(block)
    a = [list(row) + [mpq(1) if i == j else mpq(0) for j in range(m)] for i, row in enumerate(block)]
    for col in range(m):
        piv = next((r for r in range(col, m) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(m):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[m:] for row in a]


@dataclass
class _PairState:
    """Differentials of one (g, n) in a basis adapted to the virtual representations."""

    g: int
    n: int
    cx: AssembledComplex
    blocks: dict            # degree -> {rep id: [positions]}
    vectors: dict           # degree -> list of basis vectors (formal sums)
    solvers: dict           # degree -> _Solver
    d: dict                 # degree -> {col: {row: value}}

    def block(self, k: int, src: list, tgt: list) -> list:
        tset = {p: i for i, p in enumerate(tgt)}
        out = [[mpq(0)] * len(src) for _ in tgt]
        for j, c in enumerate(src):
            for r, a in self.d[k].get(c, {}).items():
                if r in tset:
                    out[tset[r]][j] = a
        return out

    def eliminate(self, k: int, src: list, tgt: list) -> None:
        inv = _invert(self.block(k, src, tgt))
        sset, tset = set(src), set(tgt)
        tidx = {p: i for i, p in enumerate(tgt)}
        dk = self.d[k]
        for c in list(dk):
            if c in sset:
                continue
            beta = [mpq(0)] * len(tgt)
            for r, a in dk[c].items():
                if r in tidx:
                    beta[tidx[r]] = a
            if not any(beta):
                continue
            x = [sum((inv[i][j] * beta[j] for j in range(len(tgt)) if beta[j]), mpq(0))
                 for i in range(len(src))]
            col = dk[c]
            for s, xs in zip(src, x):
                if not xs:
                    continue
                for r, a in dk.get(s, {}).items():
                    nv = col.get(r, 0) - xs * a
                    if nv:
                        col[r] = nv
                    else:
                        col.pop(r, None)
        for c in src:
            dk.pop(c, None)
        for c in dk:
            for r in tset:
                dk[c].pop(r, None)
        if k - 1 in self.d:
            for c in self.d[k - 1]:
                for r in sset:
                    self.d[k - 1][c].pop(r, None)
        if k + 1 in self.d:
            for c in tset:
                self.d[k + 1].pop(c, None)


class RepresentationMismatch(RuntimeError):
    """The kept virtual representations do not form a basis of a chain group."""


def _pair_state(cx: AssembledComplex, kept: list, vectors) -> _PairState:
    g, n = cx.g, cx.n
    blocks, vecs, solvers = {}, {}, {}
    for deg in cx.degrees:
        dim = len(cx.basis[deg])
        blocks[deg], vecs[deg] = {}, []
        coords = []
        for m in kept:
            if (g, n) not in m.existence_range() or rep_degree(m, n) != deg:
                continue
            red = Reducer()
            for v in vectors(m, g, n):
                cv = cx.coords(deg, v)
                if red.add(cv):
                    blocks[deg].setdefault(m.id, []).append(len(vecs[deg]))
                    vecs[deg].append(v)
                    coords.append(cv)
        solvers[deg] = _Solver(coords, dim)
        if not solvers[deg].square:
            raise RepresentationMismatch((g, n, deg, len(coords), dim))
    d = {}
    for deg in cx.degrees:
        if deg + 1 not in cx.degrees:
            d[deg] = {}
            continue
        cols = {}
        for j, v in enumerate(vecs[deg]):
            img = cx.d[deg].apply(cx.coords(deg, v))
            x = solvers[deg + 1].solve(img)
            if x:
                cols[j] = x
        d[deg] = cols
    return _PairState(g, n, cx, blocks, vecs, solvers, d)


@dataclass
class EliminationResult:
    reduced_excess: int
    survivors: list
    steps: list
    states: dict
    redundant: list

    def block_partitions(self) -> dict:
        """(source id, target id, (g, n)) -> partitions where the reduced block is nonzero."""
        out = {}
        for gn, st in self.states.items():
            for k, blocks in st.blocks.items():
                for sid, src in blocks.items():
                    for tid, tgt in st.blocks.get(k + 1, {}).items():
                        mat = st.block(k, src, tgt)
                        if not any(any(row) for row in mat):
                            continue
                        out[(sid, tid, gn)] = _image_partitions(st, k, src, tgt)
        return out


def _local_action(st: _PairState, k: int, pos: list, sigma: dict) -> SparseMat:
    idx = {p: i for i, p in enumerate(pos)}
    cols = []
    for p in pos:
        vec: dict = {}
        for key, c in st.vectors[k][p].items():
            for k2, c2 in sn_act(sigma, key):
                vec[k2] = vec.get(k2, 0) + c * c2
        x = st.solvers[k].solve(st.cx.coords(k, vec))
        if any(q not in idx for q in x):
            raise RepresentationMismatch("action leaves the representation")
        cols.append({idx[q]: a for q, a in x.items()})
    return SparseMat.from_columns(len(pos), cols)


def _image_partitions(st: _PairState, k: int, src: list, tgt: list) -> list:
    mat = st.block(k, src, tgt)
    bmat = SparseMat.from_rows(len(src), [{j: a for j, a in enumerate(row) if a} for row in mat])
    vals = {}
    for mu in partitions(st.n):
        act = _local_action(st, k, src, _perm_of_type(mu))
        ker = trace_on_cohomology(_zero(len(src), 0), bmat, act)
        vals[mu] = act.trace() - ker
    dec = decompose(SnCharacter(st.n, vals))
    return sorted(lam for lam, m in dec.mult)


def _source_order(r: VirtualRep) -> tuple:
    return (r.edge_group, r.family != "A3", -r.eps, FAMILIES.index(r.family), r.id)


def eliminate_representations(reduced_excess: int, complexes: dict | None = None,
                              max_set: int = 2) -> EliminationResult:
    """Cancel virtual representations in pairs (or small sets) whose differential
    block is invertible at every (g, n) of their common existence range."""
    complexes = excess_complexes(reduced_excess, complexes)
    groups = relation_group_report(reduced_excess, complexes)
    redundant = {r.id for gr in groups for r in gr.redundant}
    reps = [r for r in generate_virtual_reps(reduced_excess) if r.id not in redundant]
    cache: dict = {}

    def vectors(m, g, n):
        ck = (m.id, g, n)
        if ck not in cache:
            cache[ck] = member_vectors(m, g, n)
        return cache[ck]

    states = {gn: _pair_state(cx, reps, vectors) for gn, cx in complexes.items()}
    alive = {r.id: r for r in reps}
    steps = []

    def positions(st, rid, n):
        return st.blocks.get(rep_degree(alive[rid], n), {}).get(rid)

    def invertible(srcs, tgts) -> bool:
        rng = set(alive[srcs[0]].existence_range())
        for rid in srcs + tgts:
            if set(alive[rid].existence_range()) != rng:
                return False
        for gn in rng:
            st = states[gn]
            src = [p for rid in srcs for p in positions(st, rid, gn[1])]
            tgt = [p for rid in tgts for p in positions(st, rid, gn[1])]
            if len(src) != len(tgt):
                return False
            k = rep_degree(alive[srcs[0]], gn[1])
            if _invert(st.block(k, src, tgt)) is None:
                return False
        return True

    def apply(srcs, tgts):
        for gn in alive[srcs[0]].existence_range():
            st = states[gn]
            src = [p for rid in srcs for p in positions(st, rid, gn[1])]
            tgt = [p for rid in tgts for p in positions(st, rid, gn[1])]
            k = rep_degree(alive[srcs[0]], gn[1])
            st.eliminate(k, src, tgt)
            for rid in srcs:
                del st.blocks[k][rid]
            for rid in tgts:
                del st.blocks[k + 1][rid]
        steps.append((tuple(srcs), tuple(tgts)))
        for rid in srcs + tgts:
            del alive[rid]

    def touches(sid, tid) -> bool:
        for gn in alive[sid].existence_range():
            st = states[gn]
            src, tgt = positions(st, sid, gn[1]), positions(st, tid, gn[1])
            if src and tgt:
                k = rep_degree(alive[sid], gn[1])
                if any(any(row) for row in st.block(k, src, tgt)):
                    return True
        return False

    progress = True
    while progress:
        progress = False
        for size in range(1, max_set + 1):
            srcs_all = sorted(alive.values(), key=_source_order)
            for combo in combinations(srcs_all, size):
                eg = combo[0].edge_group
                if any(r.edge_group != eg for r in combo):
                    continue
                sids = [r.id for r in combo]
                targets = sorted((r for r in alive.values() if r.edge_group == eg + 1
                                  and any(touches(s, r.id) for s in sids)), key=_source_order)
                for tcombo in combinations(targets, size):
                    tids = [r.id for r in tcombo]
                    if invertible(sids, tids):
                        apply(sids, tids)
                        progress = True
                        break
                if progress:
                    break
            if progress:
                break
    survivors = sorted(alive.values(), key=_source_order)
    return EliminationResult(reduced_excess, survivors, steps, states, sorted(redundant))


# ------------------------------------------------------------ characters

def chain_character(cx: AssembledComplex, degree: int, mu) -> mpq:
    """Trace of a permutation of cycle type ``mu`` on the quotient chain group."""
    if not cx.basis.get(degree):
        return mpq(0)
    if not any(p > 1 for p in mu):
        return mpq(len(cx.basis[degree]))
    return action_matrix(cx, degree, _perm_of_type(mu)).trace()


def equivariant_euler(cx: AssembledComplex) -> SnCharacter:
    """Sum over degrees of (-1)^k times the chain character."""
    vals = {}
    for mu in partitions(cx.n):
        vals[mu] = sum(((-1) ** k * chain_character(cx, k, mu) for k in cx.degrees), mpq(0))
    return SnCharacter(cx.n, vals)


def expected_euler(n: int, k1: int, Z: dict, k2: int, W: dict) -> SnCharacter:
    a = SnCharacter.from_decomposition(n, Z).scaled((-1) ** k1)
    b = SnCharacter.from_decomposition(n, W).scaled((-1) ** k2)
    return a + b


# ------------------------------------------------------------ reports

def census_report(reduced_excess: int) -> dict:
    reps = generate_virtual_reps(reduced_excess)
    table = census_table(reps)
    groups = sorted({eg for _, eg in table})
    rows = {fam: {eg: table.get((fam, eg), 0) for eg in groups} for fam in FAMILIES}
    return {"reduced_excess": reduced_excess, "edge_groups": groups, "table": rows,
            "total": len(reps)}


def format_census(report: dict) -> str:
    groups = report["edge_groups"]
    lines = ["family " + " ".join(f"{eg:>4}-n" for eg in groups)]
    for fam, row in report["table"].items():
        lines.append(f"{fam:<6} " + " ".join(f"{row[eg]:>6}" for eg in groups))
    lines.append(f"total  {report['total']}")
    return "\n".join(lines)


def rep_record(rep: VirtualRep) -> dict:
    return {"id": rep.id, "family": rep.family, "edge_group": rep.edge_group,
            "eps": rep.eps, "components": [c.label() for c in rep.components],
            "existence_range": [list(gn) for gn in rep.existence_range()]}


def leading_term_report(reduced_excess: int, g: int, n: int,
                        complexes: dict | None = None) -> dict:
    """Source rep id -> sorted target rep ids hit by d of its first basis vector
    at (g, n), before any elimination."""
    complexes = excess_complexes(reduced_excess, complexes)
    groups = relation_group_report(reduced_excess, complexes)
    redundant = {r.id for gr in groups for r in gr.redundant}
    reps = [r for r in generate_virtual_reps(reduced_excess) if r.id not in redundant]
    st = _pair_state(complexes[(g, n)], reps, lambda m, gg, nn: member_vectors(m, gg, nn))
    owner = {}
    for k, blocks in st.blocks.items():
        for rid, pos in blocks.items():
            for p in pos:
                owner[(k, p)] = rid
    out = {}
    for k, blocks in st.blocks.items():
        for rid, pos in blocks.items():
            col = st.d[k].get(pos[0], {})
            out[rid] = sorted({owner[(k + 1, r)] for r in col})
    return out


def verify(g: int, n: int, cx: AssembledComplex | None = None) -> dict:
    """Invariant battery for one (g, n); every value is True on success."""
    out = {}
    try:
        cx = cx or build_complex(g, n, force=True)
        out["relation closure"] = True
    except OutsideUniverse:
        return {"relation closure": False}
    out["d squared"] = check_d_squared(cx)
    ok = True
    if n >= 2:
        sigma = _perm_of_type((2,) + (1,) * (n - 2))
        for deg in cx.degrees:
            if deg + 1 not in cx.basis or not cx.basis[deg] or not cx.basis[deg + 1]:
                continue
            lhs = cx.d[deg].matmul(action_matrix(cx, deg, sigma))
            rhs = action_matrix(cx, deg + 1, sigma).matmul(cx.d[deg])
            if lhs.entries != rhs.entries:
                ok = False
    out["equivariance"] = ok
    R = 3 * g + 2 * n - 25
    out["excess additivity"] = all(r.reduced_excess == R for r in generate_virtual_reps(R)) \
        if R >= 0 else True
    coh = cohomology(cx, specht=False)
    chain = sum((-1) ** k * len(cx.basis[k]) for k in cx.degrees)
    out["euler"] = chain == sum((-1) ** k * coh[k]["dim"] for k in cx.degrees)
    return out


# ------------------------------------------------------------ export

def export_census(reduced_excess: int, fmt: str, out_dir) -> list:
    """Write the census as JSON lines, a CSV table or a DOT bundle; returns paths."""
    import csv
    import json
    from pathlib import Path

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    reps = generate_virtual_reps(reduced_excess)
    written = []
    if fmt == "json":
        path = out_dir / f"census_r{reduced_excess}.jsonl"
        with path.open("w") as fh:
            for r in reps:
                fh.write(json.dumps(rep_record(r), sort_keys=True) + "\n")
        written.append(path)
    elif fmt == "csv":
        rep = census_report(reduced_excess)
        path = out_dir / f"census_r{reduced_excess}.csv"
        with path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["family"] + [f"{eg}-n" for eg in rep["edge_groups"]])
            for fam, row in rep["table"].items():
                w.writerow([fam] + [row[eg] for eg in rep["edge_groups"]])
            w.writerow(["total", rep["total"]])
        written.append(path)
    elif fmt == "dot":
        for r in reps:
            path = out_dir / f"{r.family}_{r.edge_group}_{r.id}.dot"
            path.write_text(to_dot(key_graph(r.key), f"rep_{r.id}"))
            written.append(path)
    else:
        raise ValueError(fmt)
    return written

