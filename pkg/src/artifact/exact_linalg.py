"""Exact rational sparse linear algebra.

Vectors are dicts mapping an index to a nonzero rational.  All arithmetic is
done with ``gmpy2.mpq``; no floating point is involved anywhere.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from gmpy2 import mpq

Q = mpq
Vec = dict  # dict[int, mpq]


class DimensionMismatch(ValueError):
    pass


class NotAChainMap(ValueError):
    pass


def to_q(x) -> mpq:
    if isinstance(x, str):
        return mpq(x)
    return mpq(x)


def vec_add(target: Vec, source: Mapping[int, mpq], scale=1) -> None:
    """In place ``target += scale * source`` with zero pruning."""
    for k, v in source.items():
        nv = target.get(k, 0) + scale * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


def vec_scale(v: Mapping[int, mpq], s) -> Vec:
    if not s:
        return {}
    return {k: x * s for k, x in v.items()}


@dataclass
class SparseMat:
    nrows: int
    ncols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise DimensionMismatch(f"entry ({r},{c}) outside {self.nrows}x{self.ncols}")
            v = to_q(v)
            if v:
                clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def from_columns(cls, nrows: int, columns: Iterable[Mapping[int, mpq]]) -> "SparseMat":
        entries = {}
        ncols = 0
        for c, col in enumerate(columns):
            ncols = c + 1
            for r, v in col.items():
                entries[(r, c)] = v
        return cls(nrows, ncols, entries)

    @classmethod
    def from_rows(cls, ncols: int, rows: Iterable[Mapping[int, mpq]]) -> "SparseMat":
        entries = {}
        nrows = 0
        for r, row in enumerate(rows):
            nrows = r + 1
            for c, v in row.items():
                entries[(r, c)] = v
        return cls(nrows, ncols, entries)

    @classmethod
    def identity(cls, n: int) -> "SparseMat":
        return cls(n, n, {(i, i): mpq(1) for i in range(n)})

    def rows(self) -> list:
        out = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def columns(self) -> list:
        out = [dict() for _ in range(self.ncols)]
        for (r, c), v in self.entries.items():
            out[c][r] = v
        return out

    def transpose(self) -> "SparseMat":
        return SparseMat(self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()})

    def matmul(self, other: "SparseMat") -> "SparseMat":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        rows = self.rows()
        orows = other.rows()
        entries = {}
        for r, row in enumerate(rows):
            acc: Vec = {}
            for k, v in row.items():
                vec_add(acc, orows[k], v)
            for c, v in acc.items():
                entries[(r, c)] = v
        return SparseMat(self.nrows, other.ncols, entries)

    def apply(self, v: Mapping[int, mpq]) -> Vec:
        """Matrix times column vector."""
        cols = self._cols_cache()
        out: Vec = {}
        for k, x in v.items():
            if not 0 <= k < self.ncols:
                raise DimensionMismatch(f"index {k} outside {self.ncols} columns")
            vec_add(out, cols[k], x)
        return out

    def _cols_cache(self):
        cache = self.__dict__.get("_cols")
        if cache is None:
            cache = self.columns()
            self.__dict__["_cols"] = cache
        return cache

    def is_zero(self) -> bool:
        return not self.entries

    def trace(self) -> mpq:
        return sum((v for (r, c), v in self.entries.items() if r == c), mpq(0))

    def to_text(self) -> str:
        """Matrix-market style coordinate dump with exact p/q entries."""
        lines = ["%%MatrixMarket matrix coordinate rational general",
                 f"{self.nrows} {self.ncols} {len(self.entries)}"]
        for (r, c) in sorted(self.entries):
            lines.append(f"{r + 1} {c + 1} {self.entries[(r, c)]}")
        return "\n".join(lines) + "\n"


@dataclass
class Elimination:
    """Result of row elimination.

    ``rows`` lists (pivot column, row) in elimination order.  Each row has had
    every earlier pivot column removed, so reducing a vector against the rows in
    order decides row-space membership.
    """

    ncols: int
    rows: list
    reduced: bool = False
    _kernel: list | None = None

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list:
        return [p for p, _ in self.rows]

    def reduce(self, v: Mapping[int, mpq], witness: bool = False):
        """Residual of ``v`` modulo the row span, optionally with coefficients."""
        res = dict(v)
        coeffs: Vec = {}
        for i, (p, row) in enumerate(self.rows):
            x = res.get(p)
            if x:
                f = x / row[p]
                vec_add(res, row, -f)
                if witness:
                    coeffs[i] = f
        return (res, coeffs) if witness else res

    def kernel(self) -> list:
        """Basis of the right kernel of the eliminated matrix.

        Kernel vector number ``i`` has entry 1 at the ``i``-th free column and 0
        at every other free column.
        """
        if self._kernel is not None:
            return self._kernel
        piv = self.pivots
        pset = set(piv)
        free = [c for c in range(self.ncols) if c not in pset]
        basis = []
        for f in free:
            x: Vec = {f: mpq(1)}
            for p, row in reversed(self.rows):
                s = mpq(0)
                for c, a in row.items():
                    if c != p:
                        xc = x.get(c)
                        if xc:
                            s += a * xc
                if s:
                    x[p] = -s / row[p]
            basis.append(x)
        self._kernel = basis
        return basis

    def free_columns(self) -> list:
        pset = set(self.pivots)
        return [c for c in range(self.ncols) if c not in pset]


def _eliminate_rows(rows: list, ncols: int, col_key: Callable | None = None) -> Elimination:
    """Right-looking sparse elimination with a cheap Markowitz heuristic.

    The pivot column is one with fewest live entries (ties broken by
    ``col_key`` then index); within it the shortest row is used (ties by row
    index).  The procedure is deterministic for a fixed input order.
    """
    rows = [dict(r) for r in rows]
    col_rows: dict = {}
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    keyf = col_key or (lambda c: 0)
    heap = [(len(s), keyf(c), c) for c, s in col_rows.items()]
    heapq.heapify(heap)
    done_cols = set()
    out = []
    while heap:
        cnt, _, c = heapq.heappop(heap)
        if c in done_cols:
            continue
        live = col_rows.get(c)
        if not live:
            done_cols.add(c)
            continue
        if cnt != len(live):
            heapq.heappush(heap, (len(live), keyf(c), c))
            continue
        r = min(live, key=lambda i: (len(rows[i]), i))
        prow = rows[r]
        pv = prow[c]
        done_cols.add(c)
        for c2 in prow:
            col_rows[c2].discard(r)
        touched = set()
        for i in list(live):
            if i == r:
                continue
            row = rows[i]
            f = row[c] / pv
            for c2, a in prow.items():
                nv = row.get(c2, 0) - f * a
                if nv:
                    if c2 not in row:
                        col_rows[c2].add(i)
                    row[c2] = nv
                else:
                    if c2 in row:
                        del row[c2]
                        col_rows[c2].discard(i)
                touched.add(c2)
        rows[r] = None
        out.append((c, prow))
        for c2 in touched:
            if c2 not in done_cols:
                heapq.heappush(heap, (len(col_rows[c2]), keyf(c2), c2))
    return Elimination(ncols, out)


def eliminate(m: SparseMat, col_key: Callable | None = None) -> Elimination:
    """Row-eliminate ``m``; rank, echelon rows, pivots and kernel are exact."""
    return _eliminate_rows(m.rows(), m.ncols, col_key)


def eliminate_vectors(vectors: Iterable[Mapping[int, mpq]], ncols: int,
                      col_key: Callable | None = None) -> Elimination:
    return _eliminate_rows([v for v in vectors if v], ncols, col_key)


def rank(m: SparseMat) -> int:
    if m.nrows <= m.ncols:
        return eliminate(m).rank
    return eliminate(m.transpose()).rank


def rref(elim: Elimination) -> Elimination:
    """Back-substitute so every row is zero on every other pivot column."""
    if elim.reduced:
        return elim
    rows = [(p, {c: a / r[p] for c, a in r.items()}) for p, r in elim.rows]
    index = {p: i for i, (p, _) in enumerate(rows)}
    for i in range(len(rows) - 1, -1, -1):
        p, r = rows[i]
        for c in [c for c in r if c != p and c in index]:
            j = index[c]
            if j > i:
                a = r.get(c)
                if a:
                    vec_add(r, rows[j][1], -a)
    return Elimination(elim.ncols, rows, reduced=True)


def image_membership(v: Mapping[int, mpq], basis: Elimination):
    """Decide whether ``v`` lies in the row span of ``basis``.

    Returns ``(is_member, coefficients)`` where the coefficients index the rows
    of ``basis`` in elimination order.
    """
    for k in v:
        if not 0 <= k < basis.ncols:
            raise DimensionMismatch(f"index {k} outside {basis.ncols}")
    res, coeffs = basis.reduce(v, witness=True)
    if res:
        return False, {}
    return True, coeffs


class Reducer:
    """Incremental fully reduced echelon form used as a quotient map.

    Each added vector is reduced, then normalised at a pivot chosen by
    ``prefer`` (smallest key wins) and eliminated from all earlier rows.  After
    any number of additions, ``reduce(v)`` returns the canonical representative
    of ``v`` modulo the span, supported on non-pivot coordinates only.
    """

    def __init__(self, prefer: Callable | None = None):
        self.prefer = prefer or (lambda c: c)
        self.rows: dict = {}
        self.col_index: dict = {}

    def __len__(self):
        return len(self.rows)

    def is_pivot(self, c) -> bool:
        return c in self.rows

    def reduce(self, v: Mapping) -> Vec:
        res: Vec = {}
        for c, a in v.items():
            row = self.rows.get(c)
            if row is None:
                nv = res.get(c, 0) + a
                if nv:
                    res[c] = nv
                else:
                    res.pop(c, None)
            else:
                for c2, b in row.items():
                    nv = res.get(c2, 0) + a * b
                    if nv:
                        res[c2] = nv
                    else:
                        res.pop(c2, None)
        return res

    def add(self, v: Mapping) -> bool:
        """Add ``v`` to the span; returns True when the rank grows."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r, key=self.prefer)
        s = -1 / r[p]
        # store the substitution x_p -> sum_c row[c] x_c
        row = {c: a * s for c, a in r.items() if c != p}
        for i in list(self.col_index.get(p, ())):
            other = self.rows[i]
            a = other.pop(p)
            self.col_index[p].discard(i)
            for c2, b in row.items():
                nv = other.get(c2, 0) + a * b
                if nv:
                    if c2 not in other:
                        self.col_index.setdefault(c2, set()).add(i)
                    other[c2] = nv
                else:
                    if c2 in other:
                        del other[c2]
                        self.col_index[c2].discard(i)
        self.col_index.pop(p, None)
        self.rows[p] = row
        for c2 in row:
            self.col_index.setdefault(c2, set()).add(p)
        return True


def trace_on_cohomology(d_prev: SparseMat, d_next: SparseMat, action: SparseMat,
                        check: bool = True) -> mpq:
    """Trace of ``action`` on ker(d_next) / im(d_prev).

    ``d_prev`` maps into the middle space (its columns are images) and
    ``d_next`` maps out of it.  The action must preserve both subspaces.
    """
    n = action.nrows
    if action.ncols != n or d_prev.nrows != n or d_next.ncols != n:
        raise DimensionMismatch("incompatible shapes")
    if check and not d_next.matmul(d_prev).is_zero():
        raise NotAChainMap("d_next * d_prev is not zero")
    kern = eliminate(d_next)
    free = kern.free_columns()
    zbasis = kern.kernel()
    tz = mpq(0)
    for f, z in zip(free, zbasis):
        sz = action.apply(z)
        if check and d_next.apply(sz):
            raise NotAChainMap("action does not preserve the kernel")
        tz += sz.get(f, 0)
    bel = rref(eliminate_vectors(d_prev.columns(), n))
    tb = mpq(0)
    for p, b in bel.rows:
        sb = action.apply(b)
        if check and bel.reduce(sb):
            raise NotAChainMap("action does not preserve the image")
        tb += sb.get(p, 0)
    return tz - tb
