"""
Exhaustive enumeration of semigroups, interassociates and doppelsemigroups.

Unknown tables are filled cell by cell in row-major order.  After each
assignment only the triples that can mention the new cell are re-checked,
and any equation with an undecided side is skipped, so a branch dies as
soon as one fully decided instance of an axiom fails.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import (
    CayleyTable, DoppelTable, is_associative, is_interassociative,
    is_left_translation, is_strong_pair,
)
from .iso import CanonicalForm, canonical_doppel, canonical_semigroup


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_order: int = 3
    node_limit: Optional[int] = None

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max_order must be at least 1")

    def check_order(self, n: int):
        if n < 1:
            raise ValueError(f"order must be positive, got {n}")
        if n > self.max_order:
            raise BudgetExceeded(
                f"order {n} exceeds budget max_order={self.max_order}")


DEFAULT_BUDGET = SearchBudget()


@lru_cache(maxsize=None)
def _touching_triples(n: int) -> tuple:
    """For each cell (p, q), the triples whose associativity or D1/D2
    instance can read that cell."""
    out = []
    for p in range(n):
        for q in range(n):
            s = set()
            for k in range(n):
                s.add((p, q, k))
                s.add((k, p, q))
            for i in range(n):
                for j in range(n):
                    s.add((i, j, q))
                    s.add((p, i, j))
            out.append(tuple(sorted(s)))
    return tuple(out)


def _backtrack(n: int, base: Optional[tuple], node_limit: Optional[int]) -> list:
    """All associative tables b of order n, interassociative with ``base``
    when it is given, as entry tuples in ascending order."""
    size = n * n
    b = [-1] * size
    t = base
    touching = _touching_triples(n)
    results = []
    nodes = 0

    def consistent(cell: int) -> bool:
        for i, j, k in touching[cell]:
            ij = b[i * n + j]
            jk = b[j * n + k]
            if ij >= 0 and jk >= 0:
                lhs = b[ij * n + k]
                rhs = b[i * n + jk]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
            if t is not None:
                if jk >= 0:
                    lhs = b[t[i * n + j] * n + k]
                    if lhs >= 0 and lhs != t[i * n + jk]:
                        return False
                if ij >= 0:
                    rhs = b[i * n + t[j * n + k]]
                    if rhs >= 0 and t[ij * n + k] != rhs:
                        return False
        return True

    def extend(cell: int):
        nonlocal nodes
        if cell == size:
            results.append(tuple(b))
            return
        for v in range(n):
            nodes += 1
            if node_limit is not None and nodes > node_limit:
                raise BudgetExceeded(f"node limit {node_limit} exceeded")
            b[cell] = v
            if consistent(cell):
                extend(cell + 1)
        b[cell] = -1

    extend(0)
    return results


def _scan_associative(n: int) -> list:
    return [t for t in (CayleyTable(n, e) for e in itertools.product(range(n), repeat=n * n))
            if is_associative(t)]


def enumerate_associative(n: int, budget: SearchBudget = DEFAULT_BUDGET) -> list:
    """Every associative table of order n, ascending by encoding."""
    budget.check_order(n)
    return list(_associative_cached(n, budget.node_limit))


@lru_cache(maxsize=None)
def _associative_cached(n: int, node_limit) -> tuple:
    if n <= 3:
        return tuple(_scan_associative(n))
    return tuple(CayleyTable(n, e) for e in _backtrack(n, None, node_limit))


def semigroup_classes(n: int, budget: SearchBudget = DEFAULT_BUDGET) -> list:
    """One canonical form per isomorphism class of semigroups of order n."""
    budget.check_order(n)
    return list(_semigroup_classes_cached(n, budget.node_limit))


@lru_cache(maxsize=None)
def _semigroup_classes_cached(n: int, node_limit) -> tuple:
    seen = {}
    for t in _associative_cached(n, node_limit):
        seen.setdefault(canonical_semigroup(t).canon, None)
    return tuple(CanonicalForm(c, canonical_semigroup(c).witness) for c in sorted(seen))


def interassociates_of(t: CayleyTable, budget: Optional[SearchBudget] = None) -> list:
    """All semigroups on the carrier of ``t`` that are interassociates of it
    (the exact set, not up to isomorphism), ascending by encoding."""
    limit = budget.node_limit if budget is not None else None
    return [CayleyTable(t.n, e) for e in _interassociates_cached(t.entries, t.n, limit)]


@lru_cache(maxsize=4096)
def _interassociates_cached(entries: tuple, n: int, node_limit) -> tuple:
    return tuple(_backtrack(n, entries, node_limit))


def interassociates_by_scan(t: CayleyTable, budget: SearchBudget = SearchBudget(4)) -> list:
    """Generate-and-test over all associative tables.  Slow; kept as an
    independent check on :func:`interassociates_of`."""
    return [b for b in enumerate_associative(t.n, budget) if is_interassociative(t, b)]


def strong_interassociates_of(t: CayleyTable, budget: Optional[SearchBudget] = None) -> list:
    return [b for b in interassociates_of(t, budget) if is_strong_pair(t, b)]


def left_translations(t: CayleyTable) -> list:
    n = t.n
    return [l for l in itertools.product(range(n), repeat=n) if is_left_translation(t, l)]


def _doppel_canons_for(args) -> list:
    entries, n, node_limit = args
    t = CayleyTable(n, entries)
    return [canonical_doppel(DoppelTable(t, b)).canon
            for b in interassociates_of(t, SearchBudget(n, node_limit))]


def doppel_classes(n: int, budget: SearchBudget = DEFAULT_BUDGET, workers: int = 1) -> list:
    """Canonical representatives of the doppelsemigroups of order n.

    Every doppelsemigroup is isomorphic to one whose first operation is a
    canonical semigroup representative, so it suffices to pair each
    representative with all of its interassociates.
    """
    budget.check_order(n)
    return list(_doppel_classes_cached(n, budget.node_limit, max(1, workers)))


@lru_cache(maxsize=None)
def _doppel_classes_cached(n: int, node_limit, workers: int) -> tuple:
    jobs = [(cf.canon.entries, n, node_limit)
            for cf in _semigroup_classes_cached(n, node_limit)]
    if workers == 1:
        chunks = map(_doppel_canons_for, jobs)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_doppel_canons_for, jobs))
    canons = set()
    for chunk in chunks:
        canons.update(chunk)
    return tuple(CanonicalForm(c, canonical_doppel(c).witness) for c in sorted(canons))


def all_doppels(n: int, budget: SearchBudget = DEFAULT_BUDGET) -> list:
    """Every doppelsemigroup on 0..n-1, not reduced by isomorphism."""
    return [DoppelTable(t, b)
            for t in enumerate_associative(n, budget)
            for b in interassociates_of(t, budget)]
