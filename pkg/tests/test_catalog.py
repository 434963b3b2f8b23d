import itertools

import pytest
from doppel.catalog import (
    ModelName, build, catalog, component_name, doppel_adjoin_zero, doppel_name, recognize,
)
from doppel.core import (
    CayleyTable, DoppelTable, identity_of, is_associative, is_commutative, monogenic_params,
    structural_probe, zero_of,
)
from doppel.iso import are_isomorphic, canonical_semigroup
from doppel.search import SearchBudget, doppel_classes, semigroup_classes

# the 24 semigroup classes of order 3 as named in the literature
ORDER3_NAMES = [
    "C{3}", "O{3}", "M{2,2}", "C{2}+1", "C{2}~1", "M{3,1}", "O{2}+1", "O{2}+0", "L{3}",
    "C{2}+0", "O{3,2}", "O{3,1}", "LO{3}", "RO{3}", "LO{2}+0", "RO{2}+0", "LO~0{1,2}",
    "RO~0{1,2}", "LO{2}+1", "RO{2}+1", "LOB{3}", "ROB{3}", "LOarrow{2,3}", "ROarrow{2,3}",
]


@pytest.mark.parametrize("text", ORDER3_NAMES + ["C{1}~1", "O{4,0}", "LO~0{0,3}+0+1"])
def test_name_roundtrip(text):
    assert str(ModelName.parse(text)) == text


@pytest.mark.parametrize("text", ["X{3}", "C{}", "M{0,2}", "O{3,3}", "LO~0{3,2}", "C{3}+2",
                                  "LOarrow{1,3}", "LOB{1}", "C{3,1}"])
def test_bad_names_rejected(text):
    with pytest.raises(ValueError):
        ModelName.parse(text)


@pytest.mark.parametrize("text", ORDER3_NAMES)
def test_builds_are_semigroups_of_stated_order(text):
    t = build(text)
    assert t.n == ModelName.parse(text).order == 3
    assert is_associative(t)


def test_order3_names_cover_all_classes_once():
    canons = [canonical_semigroup(build(x)).canon for x in ORDER3_NAMES]
    assert len(set(canons)) == 24
    assert set(canons) == {cf.canon for cf in semigroup_classes(3)}


def test_recognize_round_trips_catalog_names():
    assert sorted(str(e.name) for e in catalog(3)) == sorted(ORDER3_NAMES)
    for x in ORDER3_NAMES:
        assert str(recognize(build(x))) == x


@pytest.mark.parametrize("n,size", [(1, 1), (2, 5), (3, 24)])
def test_catalog_is_complete_up_to_3(n, size):
    assert len(catalog(n)) == size


def test_catalog_order4_pairwise_distinct():
    entries = catalog(4)
    assert len({e.canon.canon for e in entries}) == len(entries)
    assert len(entries) < len(semigroup_classes(4, SearchBudget(4)))


def test_element_conventions():
    assert build("C{3}")[1, 2] == 0
    assert zero_of(build("O{3}")) == 0 and zero_of(build("O{3,1}")) == 2
    assert structural_probe(build("O{3,2}")).idempotents == {0, 1, 2}
    assert build("L{3}")[1, 2] == 1
    assert zero_of(build("LO~0{1,2}")) == 2
    assert identity_of(build("C{2}+1")) == 2 and zero_of(build("C{2}+0")) == 2
    t = build("C{2}~1")
    assert t[2, 2] == identity_of(build("C{2}")) == 0


@pytest.mark.parametrize("r,m", [(1, 2), (2, 2), (3, 1), (2, 1), (1, 4), (3, 2)])
def test_monogenic_build(r, m):
    t = build(f"M{{{r},{m}}}")
    p = monogenic_params(t)
    assert (p.index, p.period, p.generator) == (r, m, 0)
    assert is_commutative(t)


def test_lob_and_arrow_definitions():
    lob, arrow = build("LOB{3}"), build("LOarrow{2,3}")
    c, a = 2, 0
    for x, y in itertools.product(range(3), repeat=2):
        assert arrow[x, y] == (a if x == c else x)
        assert lob[x, y] == (x if x != c else (c if y == c else a))


def test_tilde_one_of_trivial_monoid_is_null():
    assert are_isomorphic(build("C{1}~1"), build("O{2}"))
    assert str(recognize(build("C{1}~1"))) == "O{2}"


def test_tilde_one_needs_monoid():
    with pytest.raises(ValueError):
        build("O{2}~1")


def test_unnamed_component_renders_as_encoding():
    t = canonical_semigroup(build("LO{5}")).canon
    assert component_name(t) == t.encode()


def test_doppel_names_order2():
    names = sorted(doppel_name(cf.canon) for cf in doppel_classes(2))
    assert names == sorted(["C{2}", "O{2}", "L{2}", "LO{2}", "RO{2}",
                            "O{2}⋈L{2}", "L{2}⋈O{2}", "C{2}⋈C{2}#2"])


def test_doppel_names_unique_order3():
    names = [doppel_name(cf.canon) for cf in doppel_classes(3)]
    assert len(set(names)) == 77
    assert all("S:" not in x for x in names)


def test_ascii_join():
    d = DoppelTable(build("O{2}"), build("L{2}"))
    assert doppel_name(d, ascii=True) == "O{2}><L{2}"


def test_doppel_name_is_invariant_under_relabelling():
    for cf in doppel_classes(3)[::7]:
        d = cf.canon
        flipped = DoppelTable(
            CayleyTable.from_function(3, lambda x, y: 2 - d.left[2 - x, 2 - y]),
            CayleyTable.from_function(3, lambda x, y: 2 - d.right[2 - x, 2 - y]))
        assert doppel_name(flipped) == doppel_name(d)


def test_doppel_adjoin_zero_preserves_axioms():
    from doppel.core import is_doppelsemigroup
    for cf in doppel_classes(2):
        d = doppel_adjoin_zero(cf.canon)
        assert is_doppelsemigroup(d) and d.n == 3
