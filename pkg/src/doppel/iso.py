"""
Permutation action on tables, canonical forms and automorphism groups.

Canonical forms are the lexicographic minimum of the flattened entries
over all n! relabelings.  That is only practical for small carriers, which
is all this package deals with.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .core import CayleyTable, DoppelTable, dual, parse_table

Table = Union[CayleyTable, DoppelTable]


@dataclass(frozen=True, order=True)
class Permutation:
    image: tuple

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"{image} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __call__(self, x: int) -> int:
        return self.image[x]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self`` after ``other``."""
        return Permutation(tuple(self.image[other.image[x]] for x in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(tuple(inv))

    def order(self) -> int:
        k, p, ident = 1, self, Permutation.identity(self.n)
        while p != ident:
            p = p.compose(self)
            k += 1
        return k

    def __str__(self):
        return ",".join(map(str, self.image))


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple:
    return tuple(itertools.permutations(range(n)))


def _permuted_entries(entries: tuple, n: int, p: tuple) -> tuple:
    # out[p(i), p(j)] = p(t[i, j])
    inv = [0] * n
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(p[entries[inv[i] * n + inv[j]]] for i in range(n) for j in range(n))


def apply_perm(t: Table, p: Permutation) -> Table:
    if isinstance(t, DoppelTable):
        return DoppelTable(apply_perm(t.left, p), apply_perm(t.right, p))
    if p.n != t.n:
        raise ValueError(f"order mismatch: permutation on {p.n}, table of order {t.n}")
    return CayleyTable(t.n, _permuted_entries(t.entries, t.n, p.image))


@dataclass(frozen=True)
class CanonicalForm:
    canon: Table
    witness: Permutation

    def encode(self) -> str:
        return f"{self.canon.encode()} perm={self.witness}"

    @classmethod
    def parse(cls, text: str) -> "CanonicalForm":
        table_text, _, perm_text = text.strip().partition(" perm=")
        if not perm_text:
            raise ValueError(f"missing perm= field in {text!r}")
        return cls(parse_table(table_text), Permutation(tuple(int(v) for v in perm_text.split(","))))


@lru_cache(maxsize=200_000)
def _canonical_entries(entries: tuple, n: int, parts: int):
    size = n * n
    best, best_p = None, None
    for p in all_permutations(n):
        cand = ()
        for k in range(parts):
            cand += _permuted_entries(entries[k * size:(k + 1) * size], n, p)
        if best is None or cand < best:
            best, best_p = cand, p
    return best, best_p


def canonical_semigroup(t: CayleyTable) -> CanonicalForm:
    entries, p = _canonical_entries(t.entries, t.n, 1)
    return CanonicalForm(CayleyTable(t.n, entries), Permutation(p))


def canonical_doppel(d: DoppelTable) -> CanonicalForm:
    entries, p = _canonical_entries(d.entries, d.n, 2)
    size = d.n * d.n
    canon = DoppelTable(CayleyTable(d.n, entries[:size]), CayleyTable(d.n, entries[size:]))
    return CanonicalForm(canon, Permutation(p))


def canonical(x: Table) -> CanonicalForm:
    if isinstance(x, DoppelTable):
        return canonical_doppel(x)
    return canonical_semigroup(x)


def are_isomorphic(a: Table, b: Table) -> bool:
    if type(a) is not type(b) or a.n != b.n:
        return False
    return canonical(a).canon == canonical(b).canon


def are_anti_isomorphic(a: CayleyTable, b: CayleyTable) -> bool:
    return are_isomorphic(dual(a), b)


def dual_doppel(d: DoppelTable) -> DoppelTable:
    return DoppelTable(dual(d.left), dual(d.right))


# element-order multisets (sorted) of every group of order <= 12
_GROUP_SIGNATURES = {}


def _register(label: str, orders: dict):
    sig = tuple(sorted(Counter(orders).elements()))
    _GROUP_SIGNATURES[sig] = label


_register("C_1", {1: 1})
_register("C_2", {1: 1, 2: 1})
_register("C_3", {1: 1, 3: 2})
_register("C_4", {1: 1, 2: 1, 4: 2})
_register("C_2×C_2", {1: 1, 2: 3})
_register("C_5", {1: 1, 5: 4})
_register("C_6", {1: 1, 2: 1, 3: 2, 6: 2})
_register("S_3", {1: 1, 2: 3, 3: 2})
_register("C_7", {1: 1, 7: 6})
_register("C_8", {1: 1, 2: 1, 4: 2, 8: 4})
_register("C_4×C_2", {1: 1, 2: 3, 4: 4})
_register("C_2×C_2×C_2", {1: 1, 2: 7})
_register("D_4", {1: 1, 2: 5, 4: 2})
_register("Q_8", {1: 1, 2: 1, 4: 6})
_register("C_9", {1: 1, 3: 2, 9: 6})
_register("C_3×C_3", {1: 1, 3: 8})
_register("C_10", {1: 1, 2: 1, 5: 4, 10: 4})
_register("D_5", {1: 1, 2: 5, 5: 4})
_register("C_11", {1: 1, 11: 10})
_register("C_12", {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4})
_register("C_6×C_2", {1: 1, 2: 3, 3: 2, 6: 6})
_register("A_4", {1: 1, 2: 3, 3: 8})
_register("D_6", {1: 1, 2: 7, 3: 2, 6: 2})
_register("Dic_3", {1: 1, 2: 1, 3: 2, 4: 6, 6: 2})


def group_label(elements) -> str:
    """Small-group name from the multiset of element orders; groups larger
    than 12 are labelled ``order-k``."""
    elements = list(elements)
    sig = tuple(sorted(p.order() for p in elements))
    return _GROUP_SIGNATURES.get(sig, f"order-{len(elements)}")


@dataclass(frozen=True)
class AutGroup:
    elements: tuple  # sorted Permutations
    label: str

    @property
    def order(self) -> int:
        return len(self.elements)

    def __str__(self):
        return f"{self.label} (order {self.order})"


def automorphisms(x: Table) -> AutGroup:
    n, entries = x.n, x.entries
    size = n * n
    found = []
    for p in all_permutations(n):
        image = ()
        for k in range(len(entries) // size):
            image += _permuted_entries(entries[k * size:(k + 1) * size], n, p)
        if image == entries:
            found.append(Permutation(p))
    return AutGroup(tuple(found), group_label(found))
