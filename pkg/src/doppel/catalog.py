"""
Named model semigroups and recognition of tables as named models.

Element order conventions (frozen, so encodings never drift):

* ``C{n}`` is addition mod n.
* ``O{n}`` has zero 0; ``L{n}`` is min on 0..n-1 (zero 0, identity n-1).
* ``O{n,m}``: idempotent non-zero elements 0..m-1, zero n-1.
* ``M{r,m}``: element k-1 stands for the k-th power of the generator.
* ``LO~0{m,k}`` / ``RO~0{m,k}``: X = 0..k-1, A = 0..m-1, zero k.
* ``LOB{n}``, ``LOarrow{n-1,n}`` and their duals: a = 0, c = n-1.
* Decorations ``+0``, ``+1``, ``~1`` append the new element last.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .core import CayleyTable, DoppelTable, dual, identity_of
from .iso import CanonicalForm, canonical_doppel, canonical_semigroup

FAMILIES = ("C", "O", "L", "LO", "RO", "M", "LO~0", "RO~0", "LOB", "ROB", "LOarrow", "ROarrow")
DECORATIONS = ("+0", "+1", "~1")
MAX_NAMED_ORDER = 4

_NAME_RE = re.compile(
    r"^(LOarrow|ROarrow|LO~0|RO~0|LOB|ROB|LO|RO|C|O|L|M)\{(\d+(?:,\d+)*)\}((?:\+0|\+1|~1)*)$")


@dataclass(frozen=True)
class ModelName:
    family: str
    params: tuple
    decorations: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        object.__setattr__(self, "decorations", tuple(self.decorations))
        _validate(self)

    @property
    def base_order(self) -> int:
        f, p = self.family, self.params
        if f == "M":
            return p[0] + p[1] - 1
        if f in ("LO~0", "RO~0"):
            return p[1] + 1
        if f in ("LOarrow", "ROarrow"):
            return p[1]
        return p[0]

    @property
    def order(self) -> int:
        return self.base_order + len(self.decorations)

    def __str__(self):
        return f"{self.family}{{{','.join(map(str, self.params))}}}{''.join(self.decorations)}"

    @classmethod
    def parse(cls, text: str) -> "ModelName":
        m = _NAME_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a model name: {text!r}")
        decorations = re.findall(r"\+0|\+1|~1", m.group(3))
        return cls(m.group(1), tuple(int(v) for v in m.group(2).split(",")), tuple(decorations))

    def decorate(self, decoration: str) -> "ModelName":
        return ModelName(self.family, self.params, self.decorations + (decoration,))


def _validate(name: ModelName):
    f, p = name.family, name.params
    if f not in FAMILIES:
        raise ValueError(f"unknown family {f!r}")
    arity = {"M": 2, "LO~0": 2, "RO~0": 2, "LOarrow": 2, "ROarrow": 2}.get(f, 1)
    if f == "O" and len(p) in (1, 2):
        arity = len(p)
    if len(p) != arity:
        raise ValueError(f"{f} takes {arity} parameter(s), got {p}")
    if f == "M" and (p[0] < 1 or p[1] < 1):
        raise ValueError(f"M needs index >= 1 and period >= 1, got {p}")
    if f == "O" and len(p) == 2 and not 0 <= p[1] <= p[0] - 1:
        raise ValueError(f"O{{n,m}} needs 0 <= m <= n-1, got {p}")
    if f in ("LO~0", "RO~0") and not 0 <= p[0] <= p[1]:
        raise ValueError(f"{f} needs 0 <= m <= k, got {p}")
    if f in ("LOB", "ROB") and p[0] < 2:
        raise ValueError(f"{f} needs at least two elements")
    if f in ("LOarrow", "ROarrow") and (p[1] < 2 or p[0] != p[1] - 1):
        raise ValueError(f"{f}{{m,n}} needs m = n-1 and n >= 2, got {p}")
    if any(v < 1 for v in p[:1]) and f not in ("LO~0", "RO~0"):
        raise ValueError(f"{f} needs a positive order, got {p}")
    for d in name.decorations:
        if d not in DECORATIONS:
            raise ValueError(f"unknown decoration {d!r}")


# ---- constructions ---------------------------------------------------------

def adjoin_zero(t: CayleyTable) -> CayleyTable:
    n, z = t.n, t.n
    return CayleyTable.from_function(n + 1, lambda x, y: z if z in (x, y) else t[x, y])


def adjoin_identity(t: CayleyTable) -> CayleyTable:
    n, e = t.n, t.n

    def op(x, y):
        if x == e:
            return y
        if y == e:
            return x
        return t[x, y]
    return CayleyTable.from_function(n + 1, op)


def adjoin_tilde_one(t: CayleyTable) -> CayleyTable:
    """Adjoin u with u*u = e and u acting as identity on the monoid."""
    e = identity_of(t)
    if e is None:
        raise ValueError(f"~1 needs a monoid, {t} has no identity")
    u = t.n

    def op(x, y):
        if x == u and y == u:
            return e
        if x == u:
            return y
        if y == u:
            return x
        return t[x, y]
    return CayleyTable.from_function(t.n + 1, op)


def null_semigroup(n: int, zero: int = 0) -> CayleyTable:
    return CayleyTable(n, (zero,) * (n * n))


def o_subset(n: int, subset: Iterable[int], zero: int) -> CayleyTable:
    """x*x = x on ``subset``, every other product is ``zero``."""
    subset = frozenset(subset)
    if zero in subset:
        raise ValueError("zero must lie outside the idempotent subset")
    return CayleyTable.from_function(n, lambda x, y: x if x == y and x in subset else zero)


def lo_tilde_zero(k: int, subset: Iterable[int]) -> CayleyTable:
    """Carrier 0..k with zero k: x*y = x when y is in ``subset``, else k."""
    subset = frozenset(subset)
    return CayleyTable.from_function(k + 1, lambda x, y: x if y in subset else k)


def ro_tilde_zero(k: int, subset: Iterable[int]) -> CayleyTable:
    subset = frozenset(subset)
    return CayleyTable.from_function(k + 1, lambda x, y: y if x in subset else k)


def lob(n: int, a: int = 0, c: Optional[int] = None) -> CayleyTable:
    c = n - 1 if c is None else c

    def op(x, y):
        if x != c:
            return x
        return c if y == c else a
    return CayleyTable.from_function(n, op)


def lo_arrow(n: int, a: int = 0, c: Optional[int] = None) -> CayleyTable:
    c = n - 1 if c is None else c
    return CayleyTable.from_function(n, lambda x, y: x if x != c else a)


def monogenic(r: int, m: int) -> CayleyTable:
    n = r + m - 1

    def power(s):
        return s if s <= n else r + (s - r) % m
    return CayleyTable.from_function(n, lambda x, y: power(x + y + 2) - 1)


def _build_base(name: ModelName) -> CayleyTable:
    f, p = name.family, name.params
    if f == "C":
        return CayleyTable.from_function(p[0], lambda x, y: (x + y) % p[0])
    if f == "O":
        if len(p) == 1:
            return null_semigroup(p[0])
        return o_subset(p[0], range(p[1]), p[0] - 1)
    if f == "L":
        return CayleyTable.from_function(p[0], min)
    if f == "LO":
        return CayleyTable.from_function(p[0], lambda x, y: x)
    if f == "RO":
        return CayleyTable.from_function(p[0], lambda x, y: y)
    if f == "M":
        return monogenic(*p)
    if f == "LO~0":
        return lo_tilde_zero(p[1], range(p[0]))
    if f == "RO~0":
        return ro_tilde_zero(p[1], range(p[0]))
    if f == "LOB":
        return lob(p[0])
    if f == "ROB":
        return dual(lob(p[0]))
    if f == "LOarrow":
        return lo_arrow(p[1])
    if f == "ROarrow":
        return dual(lo_arrow(p[1]))
    raise ValueError(f"unknown family {f!r}")


_DECORATE = {"+0": adjoin_zero, "+1": adjoin_identity, "~1": adjoin_tilde_one}


def build(name) -> CayleyTable:
    if isinstance(name, str):
        name = ModelName.parse(name)
    t = _build_base(name)
    for d in name.decorations:
        t = _DECORATE[d](t)
    return t


# ---- catalog and recognition -------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: ModelName
    table: CayleyTable
    canon: CanonicalForm


def _base_candidates(n: int):
    yield ModelName("C", (n,))
    yield ModelName("O", (n,))
    yield ModelName("L", (n,))
    yield ModelName("LO", (n,))
    yield ModelName("RO", (n,))
    for r in range(2, n + 1):
        yield ModelName("M", (r, n - r + 1))
    for m in range(1, n):
        yield ModelName("O", (n, m))
    for m in range(1, n - 1):
        yield ModelName("LO~0", (m, n - 1))
        yield ModelName("RO~0", (m, n - 1))
    if n >= 2:
        yield ModelName("LOB", (n,))
        yield ModelName("ROB", (n,))
        yield ModelName("LOarrow", (n - 1, n))
        yield ModelName("ROarrow", (n - 1, n))


def _candidates(n: int):
    yield from _base_candidates(n)
    if n >= 2:
        for entry in catalog(n - 1):
            yield entry.name.decorate("+0")
            yield entry.name.decorate("+1")
            if identity_of(entry.table) is not None:
                yield entry.name.decorate("~1")


@lru_cache(maxsize=None)
def catalog(n: int) -> tuple:
    """Named classes of order n.  Candidates are tried in a fixed priority
    order and a name is kept only if its class is not already named, so no
    two entries are isomorphic."""
    if not 1 <= n <= MAX_NAMED_ORDER:
        return ()
    entries, seen = [], set()
    for name in _candidates(n):
        table = build(name)
        cf = canonical_semigroup(table)
        if cf.canon in seen:
            continue
        seen.add(cf.canon)
        entries.append(CatalogEntry(name, table, cf))
    return tuple(entries)


@lru_cache(maxsize=None)
def _name_index(n: int) -> dict:
    return {e.canon.canon: e.name for e in catalog(n)}


def recognize(t: CayleyTable) -> Optional[ModelName]:
    return _name_index(t.n).get(canonical_semigroup(t).canon)


def doppel_adjoin_zero(d: DoppelTable) -> DoppelTable:
    return DoppelTable(adjoin_zero(d.left), adjoin_zero(d.right))


JOIN_UTF8 = "⋈"
JOIN_ASCII = "><"


def component_name(t: CayleyTable) -> str:
    name = recognize(t)
    return str(name) if name is not None else canonical_semigroup(t).canon.encode()


@lru_cache(maxsize=None)
def _doppel_name_groups(n: int) -> dict:
    """Map each non-trivially named doppel canon to its #k suffix, for
    component-name pairs shared by several classes."""
    from .search import SearchBudget, doppel_classes

    groups = {}
    for cf in doppel_classes(n, SearchBudget(max(n, 3))):
        d = cf.canon
        key = (component_name(d.left), component_name(d.right))
        groups.setdefault(key, []).append(d)
    suffix = {}
    for members in groups.values():
        if len(members) < 2:
            continue
        members.sort(key=lambda d: d.entries)
        for k, d in enumerate(members, 1):
            suffix[d] = k
    return suffix


def doppel_name(d: DoppelTable, ascii: bool = False) -> str:
    if d.is_trivial():
        return component_name(d.left)
    join = JOIN_ASCII if ascii else JOIN_UTF8
    base = f"{component_name(d.left)}{join}{component_name(d.right)}"
    if d.n > MAX_NAMED_ORDER:
        return base
    k = _doppel_name_groups(d.n).get(canonical_doppel(d).canon)
    return f"{base}#{k}" if k else base
