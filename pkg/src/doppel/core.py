"""
Cayley tables, the doppelsemigroup axioms and structural predicates.

Elements of an order-n carrier are the integers 0..n-1.  A table stores
its products row-major, so ``t.entries[i * n + j]`` is ``i * j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

SelfMap = tuple  # tuple of n images in 0..n-1, not necessarily bijective


class EncodingError(ValueError):
    """Malformed table encoding.  ``position`` is the character offset of
    the first offending token."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class CayleyTable:
    n: int
    entries: tuple

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        if len(entries) != self.n * self.n:
            raise ValueError(
                f"expected {self.n * self.n} entries for order {self.n}, got {len(entries)}")
        for v in entries:
            if not 0 <= v < self.n:
                raise ValueError(f"entry {v} out of range for order {self.n}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "CayleyTable":
        n = len(rows)
        return cls(n, tuple(v for row in rows for v in row))

    @classmethod
    def from_function(cls, n: int, op) -> "CayleyTable":
        return cls(n, tuple(op(i, j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.n + j]

    @property
    def rows(self) -> list:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def encode(self) -> str:
        return f"S:{self.n}:" + ",".join(map(str, self.entries))

    def __str__(self):
        return self.encode()

    def __lt__(self, other):
        return (self.n, self.entries) < (other.n, other.entries)


@dataclass(frozen=True)
class DoppelTable:
    """Two operations on one carrier: ``left`` plays the role of the
    first operation and ``right`` the second.  Construction only checks the
    orders agree; use :func:`is_doppelsemigroup` for the axioms."""

    left: CayleyTable
    right: CayleyTable

    def __post_init__(self):
        if self.left.n != self.right.n:
            raise ValueError(f"order mismatch: {self.left.n} vs {self.right.n}")

    @property
    def n(self) -> int:
        return self.left.n

    @property
    def entries(self) -> tuple:
        return self.left.entries + self.right.entries

    def swap(self) -> "DoppelTable":
        return DoppelTable(self.right, self.left)

    def is_trivial(self) -> bool:
        return self.left == self.right

    def encode(self) -> str:
        return (f"D:{self.n}:" + ",".join(map(str, self.left.entries)) + ":"
                + ",".join(map(str, self.right.entries)))

    def __str__(self):
        return self.encode()

    def __lt__(self, other):
        return (self.n, self.entries) < (other.n, other.entries)


Table = Union[CayleyTable, DoppelTable]


def _parse_entries(text: str, offset: int, n: int) -> tuple:
    tokens = text.split(",")
    values = []
    pos = offset
    for tok in tokens:
        if not tok.isdigit():
            raise EncodingError(f"bad entry {tok!r}", pos)
        v = int(tok)
        if v >= n:
            raise EncodingError(f"entry {v} out of range for order {n}", pos)
        values.append(v)
        pos += len(tok) + 1
    if len(values) != n * n:
        raise EncodingError(
            f"expected {n * n} entries, got {len(values)}",
            offset if len(values) < n * n else offset + len(",".join(tokens[:n * n])) + 1)
    return tuple(values)


def parse_table(text: str) -> Table:
    """Parse ``S:<n>:<entries>`` or ``D:<n>:<left>:<right>``."""
    text = text.strip()
    parts = text.split(":")
    kind = parts[0]
    if kind not in ("S", "D"):
        raise EncodingError(f"unknown kind {kind!r}, expected 'S' or 'D'", 0)
    expected = 3 if kind == "S" else 4
    if len(parts) != expected:
        raise EncodingError(
            f"expected {expected} ':'-separated fields, got {len(parts)}",
            len(text) if len(parts) < expected else sum(len(p) + 1 for p in parts[:expected]) - 1)
    if not parts[1].isdigit() or int(parts[1]) < 1:
        raise EncodingError(f"bad order {parts[1]!r}", 2)
    n = int(parts[1])
    offset = len(parts[0]) + len(parts[1]) + 2
    first = _parse_entries(parts[2], offset, n)
    if kind == "S":
        return CayleyTable(n, first)
    offset += len(parts[2]) + 1
    second = _parse_entries(parts[3], offset, n)
    return DoppelTable(CayleyTable(n, first), CayleyTable(n, second))


def _check_orders(a: CayleyTable, b: CayleyTable):
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")


def is_associative(t: CayleyTable) -> bool:
    n, e = t.n, t.entries
    for i in range(n):
        for j in range(n):
            ij = e[i * n + j]
            for k in range(n):
                if e[ij * n + k] != e[i * n + e[j * n + k]]:
                    return False
    return True


def is_commutative(t: CayleyTable) -> bool:
    n, e = t.n, t.entries
    return all(e[i * n + j] == e[j * n + i] for i in range(n) for j in range(i + 1, n))


def is_interassociative(a: CayleyTable, b: CayleyTable) -> bool:
    """Both mixed associativity laws with ``a`` on the left of the first
    and ``b`` on the left of the second:
    (x a y) b z = x a (y b z) and (x b y) a z = x b (y a z)."""
    _check_orders(a, b)
    n, p, q = a.n, a.entries, b.entries
    for x in range(n):
        for y in range(n):
            xpy = p[x * n + y]
            xqy = q[x * n + y]
            for z in range(n):
                if q[xpy * n + z] != p[x * n + q[y * n + z]]:
                    return False
                if p[xqy * n + z] != q[x * n + p[y * n + z]]:
                    return False
    return True


def is_doppelsemigroup(d: DoppelTable) -> bool:
    return (is_associative(d.left) and is_associative(d.right)
            and is_interassociative(d.left, d.right))


def is_strong_pair(a: CayleyTable, b: CayleyTable) -> bool:
    """x a (y b z) = x b (y a z) for all triples."""
    _check_orders(a, b)
    n, p, q = a.n, a.entries, b.entries
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if p[x * n + q[y * n + z]] != q[x * n + p[y * n + z]]:
                    return False
    return True


def is_strong(d: DoppelTable) -> bool:
    return is_strong_pair(d.left, d.right)


def dual(t: CayleyTable) -> CayleyTable:
    n, e = t.n, t.entries
    return CayleyTable(n, tuple(e[j * n + i] for i in range(n) for j in range(n)))


def is_monoid(t: CayleyTable) -> bool:
    return identity_of(t) is not None


def identity_of(t: CayleyTable) -> Optional[int]:
    n, e = t.n, t.entries
    for u in range(n):
        if all(e[u * n + x] == x and e[x * n + u] == x for x in range(n)):
            return u
    return None


def zero_of(t: CayleyTable) -> Optional[int]:
    n, e = t.n, t.entries
    for z in range(n):
        if all(e[z * n + x] == z and e[x * n + z] == z for x in range(n)):
            return z
    return None


@dataclass(frozen=True)
class Structure:
    zero: Optional[int]
    identity: Optional[int]
    left_zeros: frozenset
    right_zeros: frozenset
    idempotents: frozenset
    is_band: bool
    is_semilattice: bool
    is_rectangular_band: bool


def structural_probe(t: CayleyTable) -> Structure:
    n, e = t.n, t.entries
    zeros = [z for z in range(n)
             if all(e[z * n + x] == z and e[x * n + z] == z for x in range(n))]
    identities = [u for u in range(n)
                  if all(e[u * n + x] == x and e[x * n + u] == x for x in range(n))]
    # a second zero or identity would contradict uniqueness, i.e. a defect in t
    assert len(zeros) <= 1 and len(identities) <= 1, f"non-unique zero/identity in {t}"
    left_zeros = frozenset(z for z in range(n) if all(e[z * n + x] == z for x in range(n)))
    right_zeros = frozenset(z for z in range(n) if all(e[x * n + z] == z for x in range(n)))
    idempotents = frozenset(x for x in range(n) if e[x * n + x] == x)
    band = len(idempotents) == n
    rectangular = band and all(
        e[e[x * n + y] * n + x] == x for x in range(n) for y in range(n))
    return Structure(
        zero=zeros[0] if zeros else None,
        identity=identities[0] if identities else None,
        left_zeros=left_zeros,
        right_zeros=right_zeros,
        idempotents=idempotents,
        is_band=band,
        is_semilattice=band and is_commutative(t),
        is_rectangular_band=rectangular,
    )


@dataclass(frozen=True)
class MonogenicParams:
    index: int
    period: int
    generator: int


def monogenic_params(t: CayleyTable) -> Optional[MonogenicParams]:
    """Index and period of ``t`` if one element generates the carrier.
    The smallest such generator is reported."""
    n, e = t.n, t.entries
    for a in range(n):
        powers = [a]
        while True:
            nxt = e[powers[-1] * n + a]
            if nxt in powers:
                index = powers.index(nxt) + 1
                period = len(powers) + 1 - index
                break
            powers.append(nxt)
        if len(powers) == n:
            return MonogenicParams(index, period, a)
    return None


def variant(t: CayleyTable, a: int) -> CayleyTable:
    """The sandwich operation x . a . y."""
    n, e = t.n, t.entries
    if not 0 <= a < n:
        raise ValueError(f"element {a} out of range for order {n}")
    return CayleyTable(n, tuple(e[e[i * n + a] * n + j] for i in range(n) for j in range(n)))


def is_left_translation(t: CayleyTable, l: Sequence[int]) -> bool:
    n, e = t.n, t.entries
    if len(l) != n:
        return False
    return all(l[e[x * n + y]] == e[l[x] * n + y] for x in range(n) for y in range(n))


def interassociate_from_left_translation(t: CayleyTable, l: Sequence[int]) -> CayleyTable:
    """x * l(y); an interassociate of ``t`` whenever ``l`` is a left translation."""
    if not is_left_translation(t, l):
        raise ValueError(f"{tuple(l)} is not a left translation of {t}")
    n, e = t.n, t.entries
    return CayleyTable(n, tuple(e[i * n + l[j]] for i in range(n) for j in range(n)))


def is_inflation(t: CayleyTable, sub: Iterable[int], r: Sequence[int]) -> bool:
    n, e = t.n, t.entries
    sub = frozenset(sub)
    if len(r) != n or set(r) != sub:
        return False
    if any(r[r[x]] != r[x] for x in range(n)) or any(r[s] != s for s in sub):
        return False
    return all(e[r[a] * n + r[b]] == e[a * n + b] for a in range(n) for b in range(n))


def all_tables(n: int):
    """Every binary operation on n elements, in ascending entry order."""
    for entries in itertools.product(range(n), repeat=n * n):
        yield CayleyTable(n, entries)
