"""
Full classification of doppelsemigroups of a given order, plus verifiers
that compare brute-force interassociate sets against their closed-form
characterizations.

Every verifier returns a :class:`Verification`; on failure ``counterexample``
holds the smallest offending encoding so regressions are easy to chase.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .catalog import (
    adjoin_identity, adjoin_tilde_one, adjoin_zero, build, doppel_name, lo_arrow,
    lo_tilde_zero, lob, null_semigroup, recognize, ro_tilde_zero,
)
from .core import (
    CayleyTable, DoppelTable, identity_of, is_associative, is_commutative,
    is_interassociative, is_strong, is_strong_pair, variant, zero_of,
)
from .iso import (
    are_isomorphic, automorphisms, canonical_doppel, canonical_semigroup, dual_doppel,
)
from .search import (
    DEFAULT_BUDGET, SearchBudget, all_doppels, doppel_classes, enumerate_associative,
    interassociates_of, semigroup_classes,
)


@dataclass(frozen=True)
class ClassRecord:
    id: int
    canon: DoppelTable
    name: str
    commutative: bool
    strong: bool
    trivial: bool
    aut_label: str
    aut_order: int
    dual_id: int
    swap_id: int


@dataclass(frozen=True)
class Counts:
    total: int
    commutative: int
    strong: int
    trivial: int
    dual_pairs: int

    def as_tuple(self) -> tuple:
        return (self.total, self.commutative, self.strong, self.trivial, self.dual_pairs)


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    records: tuple
    counts: Counts

    def by_name(self, name: str) -> Optional[ClassRecord]:
        for r in self.records:
            if r.name == name:
                return r
        return None


def count_records(records) -> Counts:
    return Counts(
        total=len(records),
        commutative=sum(r.commutative for r in records),
        strong=sum(r.strong for r in records),
        trivial=sum(r.trivial for r in records),
        dual_pairs=sum(1 for r in records if r.dual_id > r.id),
    )


def classify(n: int, budget: SearchBudget = DEFAULT_BUDGET, workers: int = 1) -> ClassificationReport:
    canons = [cf.canon for cf in doppel_classes(n, budget, workers)]
    ids = {d: i for i, d in enumerate(canons, 1)}
    records = []
    for d in canons:
        aut = automorphisms(d)
        records.append(ClassRecord(
            id=ids[d],
            canon=d,
            name=doppel_name(d),
            commutative=is_commutative(d.left) and is_commutative(d.right),
            strong=is_strong(d),
            trivial=d.is_trivial(),
            aut_label=aut.label,
            aut_order=aut.order,
            dual_id=ids[canonical_doppel(dual_doppel(d)).canon],
            swap_id=ids[canonical_doppel(d.swap()).canon],
        ))
    return ClassificationReport(n, tuple(records), count_records(records))


# ---- verification ------------------------------------------------------------

@dataclass
class Verification:
    name: str
    passed: bool = True
    details: list = field(default_factory=list)
    counterexample: Optional[str] = None

    def fail(self, message: str, witness=None):
        self.passed = False
        self.details.append(message)
        if witness is not None and self.counterexample is None:
            self.counterexample = witness.encode() if hasattr(witness, "encode") else str(witness)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name}"
        if self.details:
            out += ": " + "; ".join(self.details)
        return out


# (total, commutative, strong, trivial, dual_pairs) as published
PUBLISHED_COUNTS = {
    1: (1, 1, 1, 1, 0),
    2: (8, 6, 8, 5, 1),
    3: (75, 41, 65, 24, 17),
}

_TABLE_1 = {
    "C{2}": "C_1", "O{2}": "C_1", "L{2}": "C_1", "C{2}⋈C{2}#2": "C_1",
    "O{2}⋈L{2}": "C_1", "L{2}⋈O{2}": "C_1", "LO{2}": "C_2", "RO{2}": "C_2",
}

_TABLES_2_3 = {
    "C{3}": "C_2", "O{3}": "C_2", "M{2,2}": "C_1", "C{2}+1": "C_1", "C{2}~1": "C_1",
    "M{3,1}": "C_1", "O{2}+1": "C_1", "O{2}+0": "C_1", "L{3}": "C_1", "C{2}+0": "C_1",
    "O{3,2}": "C_2", "O{3,1}": "C_1",
    "LO{3}": "S_3", "RO{3}": "S_3", "LO{2}+0": "C_2", "RO{2}+0": "C_2",
    "LO~0{1,2}": "C_1", "RO~0{1,2}": "C_1", "LO{2}+1": "C_2", "RO{2}+1": "C_2",
    "LOB{3}": "C_1", "ROB{3}": "C_1", "LOarrow{2,3}": "C_2", "ROarrow{2,3}": "C_2",
}

# non-trivial commutative classes
_TABLE_NT_COMMUTATIVE = {
    "C{3}⋈C{3}#2": "C_1", "O{3}⋈M{3,1}": "C_1", "O{3}⋈O{2}+1": "C_1",
    "O{3}⋈O{2}+0": "C_1", "O{3}⋈L{3}": "C_1", "O{3}⋈C{2}+0": "C_1",
    "O{3}⋈O{3,2}": "C_2", "O{3}⋈O{3,1}": "C_1", "M{2,2}⋈C{2}+1": "C_1",
    "M{2,2}⋈C{2}~1": "C_1", "C{2}+1⋈C{2}~1": "C_1", "C{2}+1⋈M{2,2}": "C_1",
    "C{2}~1⋈M{2,2}": "C_1", "C{2}~1⋈C{2}+1": "C_1", "M{3,1}⋈O{2}+1": "C_1",
    "M{3,1}⋈O{3}": "C_1", "O{2}+1⋈M{3,1}": "C_1", "O{2}+1⋈O{3}": "C_1",
    "O{2}+0⋈L{3}": "C_1", "O{2}+0⋈O{3}": "C_1", "L{3}⋈O{3}": "C_1",
    "L{3}⋈O{2}+0": "C_1", "C{2}+0⋈C{2}+0#2": "C_1", "C{2}+0⋈O{3}": "C_1",
    "O{3,2}⋈O{3,1}": "C_1", "O{3,2}⋈O{3}": "C_2", "O{3,1}⋈O{3,1}#2": "C_1",
    "O{3,1}⋈O{3,2}": "C_1", "O{3,1}⋈O{3}": "C_1",
}

# non-trivial non-commutative strong classes
_TABLE_NT_STRONG = {
    "O{3}⋈LO{2}+0": "C_2", "O{3}⋈LO~0{1,2}": "C_1", "LO{2}+0⋈O{3}": "C_2",
    "LO~0{1,2}⋈O{3}": "C_1", "LOB{3}⋈LOarrow{2,3}": "C_1", "LOarrow{2,3}⋈LOB{3}": "C_1",
    "O{3}⋈RO{2}+0": "C_2", "O{3}⋈RO~0{1,2}": "C_1", "RO{2}+0⋈O{3}": "C_2",
    "RO~0{1,2}⋈O{3}": "C_1", "ROB{3}⋈ROarrow{2,3}": "C_1", "ROarrow{2,3}⋈ROB{3}": "C_1",
}

_TABLE_NON_STRONG = {
    "LO{2}+0⋈LO~0{1,2}": "C_1", "LO~0{1,2}⋈LO{2}+0": "C_1",
    "LO~0{1,2}⋈LO~0{1,2}#2": "C_1", "LO{2}+1⋈LOarrow{2,3}": "C_2",
    "LOarrow{2,3}⋈LO{2}+1": "C_2",
    "RO{2}+0⋈RO~0{1,2}": "C_1", "RO~0{1,2}⋈RO{2}+0": "C_1",
    "RO~0{1,2}⋈RO~0{1,2}#2": "C_1", "RO{2}+1⋈ROarrow{2,3}": "C_2",
    "ROarrow{2,3}⋈RO{2}+1": "C_2",
}

PUBLISHED_AUT = {
    1: {"C{1}": "C_1"},
    2: _TABLE_1,
    3: {**_TABLES_2_3, **_TABLE_NT_COMMUTATIVE, **_TABLE_NT_STRONG, **_TABLE_NON_STRONG},
}

PUBLISHED_NON_STRONG = frozenset(_TABLE_NON_STRONG)


def verify_theorem(n: int, report: Optional[ClassificationReport] = None) -> Verification:
    v = Verification(f"theorem counts n={n}")
    report = report or classify(n, SearchBudget(max(n, 3)))
    for r in report.records:
        if not r.strong and r.commutative:
            v.fail(f"non-strong commutative class {r.name}", r.canon)
    expected = PUBLISHED_COUNTS.get(n)
    if expected is None:
        v.details.append("no published counts; implication checked only")
        return v
    got = report.counts.as_tuple()
    labels = ("total", "commutative", "strong", "trivial", "dual_pairs")
    for label, e, g in zip(labels, expected, got):
        if e != g:
            v.fail(f"{label}: expected {e}, got {g}")
    if not v.passed and n in PUBLISHED_AUT:
        extra = [r for r in report.records if r.name not in PUBLISHED_AUT[n]]
        for r in extra:
            v.fail(f"class absent from published tables: {r.name} {r.canon.encode()}", r.canon)
    return v


def verify_aut_tables(n: int, report: Optional[ClassificationReport] = None) -> Verification:
    v = Verification(f"automorphism tables n={n}")
    published = PUBLISHED_AUT.get(n)
    if published is None:
        v.fail(f"no published automorphism table for order {n}")
        return v
    report = report or classify(n, SearchBudget(max(n, 3)))
    seen = set()
    for r in report.records:
        if "S:" in r.name:
            v.fail(f"unnamed class {r.canon.encode()}", r.canon)
            continue
        if r.name not in published:
            continue
        seen.add(r.name)
        if published[r.name] != r.aut_label:
            v.fail(f"Aut({r.name}): published {published[r.name]}, computed {r.aut_label}", r.canon)
    for name in sorted(set(published) - seen):
        v.fail(f"published class {name} not found")
    return v


def _compare_sets(v: Verification, brute: set, predicted: set):
    for t in sorted(brute - predicted):
        v.fail(f"found by search but not predicted: {t.encode()}", t)
    for t in sorted(predicted - brute):
        v.fail(f"predicted but not found by search: {t.encode()}", t)


def _subsets(items):
    items = list(items)
    return [frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]


def verify_prop_int_null_plus0(n: int, budget: SearchBudget = DEFAULT_BUDGET) -> Verification:
    """Int(O_X^{+0}) is the null table on the new zero plus every
    semigroup on X with zero z, extended by the new zero."""
    v = Verification(f"Int(O_{n - 1}^+0) characterization n={n}")
    budget.check_order(n)
    t = build(f"O{{{n - 1}}}+0")
    brute = set(interassociates_of(t, budget))
    predicted = {null_semigroup(n, n - 1)}
    predicted |= {adjoin_zero(s) for s in enumerate_associative(n - 1, budget) if zero_of(s) == 0}
    _compare_sets(v, brute, predicted)
    for b in brute:
        if not is_strong_pair(t, b):
            v.fail(f"non-strong interassociate {b.encode()}", b)
    v.details.append(f"{len(brute)} interassociates")
    return v


def _int_oa_predicted(n: int, m: int, budget: SearchBudget) -> set:
    z = n - 1
    rest = list(range(m, n))  # X \ A, zero last
    pos = {x: i for i, x in enumerate(rest)}
    out = set()
    subs = [s for s in enumerate_associative(len(rest), budget) if zero_of(s) == len(rest) - 1]
    for B in _subsets(range(m)):
        for s in subs:
            def op(x, y):
                if x < m and y < m:
                    return x if x == y and x in B else z
                if x < m or y < m:
                    return z
                return rest[s[pos[x], pos[y]]]
            cand = CayleyTable.from_function(n, op)
            if is_associative(cand):
                out.add(cand)
    return out


def verify_prop_int_OA(n: int, m: int, budget: SearchBudget = DEFAULT_BUDGET) -> Verification:
    v = Verification(f"Int(O_{n}^{m}) characterization")
    budget.check_order(n)
    t = build(f"O{{{n},{m}}}")
    brute = set(interassociates_of(t, budget))
    _compare_sets(v, brute, _int_oa_predicted(n, m, budget))
    for b in brute:
        if not is_strong_pair(t, b):
            v.fail(f"non-strong interassociate {b.encode()}", b)
    v.details.append(f"{len(brute)} interassociates")
    return v


def verify_prop_tilde1(monoid: CayleyTable, budget: SearchBudget = SearchBudget(4)) -> Verification:
    v = Verification(f"Int(M^~1) characterization for M={recognize(monoid) or monoid.encode()}")
    if identity_of(monoid) is None:
        raise ValueError(f"{monoid} is not a monoid")
    budget.check_order(monoid.n + 1)
    t = adjoin_tilde_one(monoid)
    brute = set(interassociates_of(t, budget))
    predicted = {adjoin_identity(monoid)} | {variant(t, a) for a in range(monoid.n)}
    _compare_sets(v, brute, predicted)
    if is_commutative(monoid):
        for b1 in sorted(brute):
            for b2 in sorted(brute):
                if not (is_interassociative(b1, b2) and is_strong_pair(b1, b2)):
                    v.fail(f"{b1.encode()} and {b2.encode()} are not strong interassociates", b1)
    v.details.append(f"{len(brute)} interassociates")
    return v


def verify_prop_intLO0(n: int, side: str = "left", budget: SearchBudget = DEFAULT_BUDGET) -> Verification:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    family = "LO" if side == "left" else "RO"
    make = lo_tilde_zero if side == "left" else ro_tilde_zero
    v = Verification(f"Int({family}_{n - 1}^+0) characterization")
    budget.check_order(n)
    k = n - 1
    t = build(f"{family}{{{k}}}+0")
    brute = set(interassociates_of(t, budget))
    members = {A: make(k, A) for A in _subsets(range(k))}
    _compare_sets(v, brute, set(members.values()))
    for A, ta in members.items():
        for B, tb in members.items():
            if not is_interassociative(ta, tb):
                v.fail(f"A={sorted(A)}, B={sorted(B)} not interassociative", ta)
            expected = A == B or not A or not B
            if is_strong_pair(tb, ta) != expected or is_strong_pair(ta, tb) != expected:
                v.fail(f"strongness for A={sorted(A)}, B={sorted(B)} should be {expected}", ta)
    v.details.append(f"{len(brute)} interassociates")
    return v


def verify_prop_LOB(n: int, budget: SearchBudget = DEFAULT_BUDGET) -> Verification:
    v = Verification(f"Int(LOB_{n}) characterization")
    budget.check_order(n)
    t = lob(n)
    brute = set(interassociates_of(t, budget))
    _compare_sets(v, brute, {t, lo_arrow(n)})
    for b in brute:
        if not is_strong_pair(t, b):
            v.fail(f"non-strong interassociate {b.encode()}", b)
    return v


def verify_monoid_interassociates(n: int, budget: SearchBudget = DEFAULT_BUDGET) -> Verification:
    """Every interassociate of a monoid is one of its variants."""
    v = Verification(f"monoid interassociates are variants n={n}")
    for cf in semigroup_classes(n, budget):
        t = cf.canon
        if identity_of(t) is None:
            continue
        brute = set(interassociates_of(t, budget))
        _compare_sets(v, brute, {variant(t, a) for a in range(n)})
    return v


def _is_lo_plus_zero(t: CayleyTable) -> bool:
    if t.n < 2:
        return False
    k = t.n - 1
    return (are_isomorphic(t, build(f"LO{{{k}}}+0"))
            or are_isomorphic(t, build(f"RO{{{k}}}+0")))


def verify_props_2x(n: int, budget: SearchBudget = DEFAULT_BUDGET,
                    report: Optional[ClassificationReport] = None) -> Verification:
    v = Verification(f"isomorphism/automorphism propositions n={n}")
    budget.check_order(n)
    report = report or classify(n, budget)
    classes = [r.canon for r in report.records]
    null = null_semigroup(n)

    # null left component: the right component alone decides the class
    null_left = [d for d in classes if are_isomorphic(d.left, null)]
    right_canons = [canonical_semigroup(d.right).canon for d in null_left]
    with_zero = {cf.canon for cf in semigroup_classes(n, budget) if zero_of(cf.canon) is not None}
    if len(set(right_canons)) != len(right_canons):
        v.fail("two null-left classes with isomorphic right components")
    if set(right_canons) != with_zero:
        v.fail(f"null-left classes {len(set(right_canons))} vs semigroups with zero {len(with_zero)}")

    # uniqueness hypothesis => components determine the class
    by_components = {}
    for d in classes:
        key = (canonical_semigroup(d.left).canon, canonical_semigroup(d.right).canon)
        by_components.setdefault(key, []).append(d)
    for d in classes:
        right_canon = canonical_semigroup(d.right).canon
        rivals = [b for b in interassociates_of(d.left, budget)
                  if canonical_semigroup(b).canon == right_canon]
        if rivals != [d.right]:
            continue
        key = (canonical_semigroup(d.left).canon, right_canon)
        if len(by_components[key]) > 1:
            v.fail(f"hypothesis holds but components do not determine {doppel_name(d)}", d)

    # automorphism equalities, over every doppelsemigroup on the carrier
    checked = 0
    for d in all_doppels(n, budget):
        if are_isomorphic(d.left, null) or _is_lo_plus_zero(d.left):
            checked += 1
            if set(automorphisms(d).elements) != set(automorphisms(d.right).elements):
                v.fail(f"Aut mismatch for {d.encode()}", d)
    v.details.append(f"{len(null_left)} null-left classes, {checked} doppels checked for Aut equality")
    return v


def verify_all(max_n: int = 3, budget: Optional[SearchBudget] = None,
               workers: int = 1) -> list:
    """Run every verifier up to order ``max_n``.  Whole-classification checks
    stop at order 3; interassociate characterizations go up to ``max_n``."""
    budget = budget or SearchBudget(max(max_n, 3))
    results = []
    for n in range(1, min(max_n, 3) + 1):
        report = classify(n, budget, workers)
        results.append(verify_theorem(n, report))
        results.append(verify_aut_tables(n, report))
        results.append(verify_props_2x(n, budget, report))
    for n in range(2, max_n + 1):
        results.append(verify_prop_int_null_plus0(n, budget))
        for m in range(n):
            results.append(verify_prop_int_OA(n, m, budget))
        for cf in semigroup_classes(n - 1, budget):
            if identity_of(cf.canon) is not None:
                results.append(verify_prop_tilde1(cf.canon, budget))
        results.append(verify_prop_intLO0(n, "left", budget))
        results.append(verify_prop_intLO0(n, "right", budget))
        results.append(verify_prop_LOB(n, budget))
        results.append(verify_monoid_interassociates(n, budget))
    return results
