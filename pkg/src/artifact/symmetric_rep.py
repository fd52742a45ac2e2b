"""Partitions, S_n character tables and Specht decompositions.

Characters are stored as maps from cycle types (partitions of n) to
rationals.  Irreducible characters come from the Murnaghan-Nakayama rule on
beta-sets.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod

from gmpy2 import mpq

Partition = tuple


class NotACharacter(ValueError):
    pass


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def cycle_type(perm) -> Partition:
    """Cycle type of a permutation given as a sequence or dict i -> perm[i]."""
    items = perm.items() if isinstance(perm, dict) else enumerate(perm)
    p = dict(items)
    seen = set()
    lengths = []
    for s in p:
        if s in seen:
            continue
        n = 0
        x = s
        while x not in seen:
            seen.add(x)
            x = p[x]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def centralizer_order(mu: Partition) -> int:
    c = Counter(mu)
    return prod(k ** m * factorial(m) for k, m in c.items())


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def hook_dimension(lam: Partition) -> int:
    n = sum(lam)
    lc = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (lc[j] - i - 1) + 1
    return factorial(n) // hooks


def _beta(lam: Partition) -> tuple:
    k = len(lam)
    return tuple(sorted((lam[i] + (k - 1 - i) for i in range(k)), reverse=True))


def _from_beta(beta) -> Partition:
    b = sorted(beta, reverse=True)
    k = len(b)
    return tuple(p for p in (b[i] - (k - 1 - i) for i in range(k)) if p > 0)


@lru_cache(maxsize=None)
def irreducible_value(lam: Partition, mu: Partition) -> int:
    """chi^lam at cycle type mu by Murnaghan-Nakayama."""
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    r = mu[0]
    rest = mu[1:]
    beta = _beta(lam)
    bset = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in bset:
            continue
        sign = -1 if sum(1 for x in beta if t < x < b) % 2 else 1
        nb = [x for x in beta if x != b] + [t]
        total += sign * irreducible_value(_from_beta(nb), rest)
    return total


def character_table(n: int) -> dict:
    """Map (lam, mu) -> chi^lam(mu) for all partitions lam, mu of n."""
    if not 0 <= n <= 12:
        raise ValueError("n must lie in 0..12")
    ps = partitions(n)
    return {(lam, mu): irreducible_value(lam, mu) for lam in ps for mu in ps}


@dataclass
class SnCharacter:
    n: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = {tuple(k): mpq(v) for k, v in self.values.items()}

    def __call__(self, mu: Partition) -> mpq:
        return self.values.get(tuple(mu), mpq(0))

    def __add__(self, other: "SnCharacter") -> "SnCharacter":
        keys = set(self.values) | set(other.values)
        return SnCharacter(self.n, {k: self(k) + other(k) for k in keys})

    def scaled(self, s) -> "SnCharacter":
        return SnCharacter(self.n, {k: v * s for k, v in self.values.items()})

    def degree(self) -> mpq:
        return self((1,) * self.n)

    @classmethod
    def irreducible(cls, lam: Partition) -> "SnCharacter":
        n = sum(lam)
        return cls(n, {mu: irreducible_value(tuple(lam), mu) for mu in partitions(n)})

    @classmethod
    def from_decomposition(cls, n: int, mult: dict) -> "SnCharacter":
        out = cls(n, {mu: 0 for mu in partitions(n)})
        for lam, m in mult.items():
            out = out + cls.irreducible(tuple(lam)).scaled(m)
        return out

    def inner(self, other: "SnCharacter") -> mpq:
        total = mpq(0)
        for mu in partitions(self.n):
            total += class_size(mu) * self(mu) * other(mu)
        return total / factorial(self.n)


def signed_multiplicities(chi: SnCharacter) -> dict:
    """<chi, chi_lam> for every lam; may be negative for virtual characters."""
    out = {}
    for lam in partitions(chi.n):
        m = chi.inner(SnCharacter.irreducible(lam))
        if m.denominator != 1:
            raise NotACharacter(f"non-integral multiplicity {m} at {lam}")
        if m:
            out[lam] = int(m)
    return out


@dataclass(frozen=True)
class SpechtDecomposition:
    n: int
    mult: tuple  # sorted tuple of (partition, multiplicity)

    @classmethod
    def of(cls, n: int, mult: dict) -> "SpechtDecomposition":
        return cls(n, tuple(sorted(((tuple(k), v) for k, v in mult.items() if v),
                                   key=lambda kv: -partitions(n).index(kv[0]))))

    def as_dict(self) -> dict:
        return dict(self.mult)

    def dimension(self) -> int:
        return sum(m * hook_dimension(lam) for lam, m in self.mult)

    def __str__(self) -> str:
        return format_decomposition(self.as_dict())


def decompose(chi: SnCharacter) -> SpechtDecomposition:
    mult = signed_multiplicities(chi)
    if any(m < 0 for m in mult.values()):
        raise NotACharacter(f"negative multiplicities {mult}")
    return SpechtDecomposition.of(chi.n, mult)


def partition_name(lam: Partition) -> str:
    """Notation such as V_{221^7}: parts above one repeated, ones with an exponent."""
    if not lam:
        return "V_{}"
    if lam[0] >= 10:
        return "V_{" + ",".join(map(str, lam)) + "}"
    parts = []
    for k, m in sorted(Counter(lam).items(), reverse=True):
        if k == 1:
            parts.append(f"1^{m}" if m > 1 else "1")
        else:
            parts.append(str(k) * m)
    body = "".join(parts)
    return f"V_{{{body}}}"


def format_decomposition(mult: dict) -> str:
    if not mult:
        return "0"
    terms = []
    n = sum(next(iter(mult)))
    order = partitions(n)
    for lam in sorted(mult, key=lambda l: -order.index(tuple(l))):
        m = mult[lam]
        name = partition_name(tuple(lam))
        if m == 1:
            terms.append(name)
        elif m == -1:
            terms.append("-" + name)
        else:
            terms.append(f"{m}*{name}")
    return " + ".join(terms).replace("+ -", "- ")


def parse_partition(text: str) -> Partition:
    """Parse notation like '21^9', '221^7', '1^11' or '5'."""
    text = text.strip().removeprefix("V_").strip("{}")
    out = []
    i = 0
    while i < len(text):
        base = int(text[i])
        i += 1
        exp = 1
        if i < len(text) and text[i] == "^":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            exp = int(text[i + 1:j])
            i = j
        out.extend([base] * exp)
    return tuple(sorted(out, reverse=True))


def induced_sign_character(n: int, class_weights: dict, group_order: int) -> SnCharacter:
    """Character of Ind_H^{S_n} of a one-dimensional character of H.

    ``class_weights`` maps a cycle type of S_n to the sum of the H-character
    over the elements of H whose image has that cycle type.
    """
    vals = {}
    for mu in partitions(n):
        w = class_weights.get(mu, 0)
        if w:
            vals[mu] = mpq(centralizer_order(mu)) * w / group_order
    return SnCharacter(n, vals)


def symmetric_group_class_sums(m: int, signed: bool) -> dict:
    """Sum over S_m of the trivial (or sign) character grouped by cycle type."""
    out = {}
    for mu in partitions(m):
        s = class_size(mu)
        if signed and (m - len(mu)) % 2:
            s = -s
        out[mu] = s
    return out


def merge_types(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))
