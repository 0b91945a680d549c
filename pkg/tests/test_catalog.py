import json
from collections import Counter

import pytest

from confext import catalog as cat
from confext.cocycle import is_cocycle


@pytest.fixture(scope="module")
def entries():
    return cat.load_catalog()


def test_counts_per_theorem(entries):
    assert len(entries) == cat.TOTAL_ENTRIES == 86
    assert Counter(e.theorem for e in entries) == Counter(cat.THEOREM_COUNTS)
    assert len({e.id for e in entries}) == len(entries)


def test_every_entry_has_two_choices_and_provenance(entries):
    for e in entries:
        assert len(e.choices) >= 2 or e.claimed_dim == 0
        assert e.provenance["anchor"]


def test_filters(entries):
    assert len(cat.catalog_entries("family=TypeII,a=-4")) == 11
    assert len(cat.catalog_entries("family=type2,a=-6")) == 9
    t2 = cat.catalog_entries("shape=T2,family=solvable")
    assert [e.claimed_dim for e in t2] == [0]
    with pytest.raises(cat.CatalogError):
        cat.parse_filter("colour=red")


def test_dump_round_trip(entries):
    text = cat.dump_catalog(entries)
    again = cat.catalog_from_json(json.loads(text))
    assert again == entries
    assert cat.dump_catalog(again) == text


def test_constraints():
    env = {"a": cat._value("2", {}), "b": cat._value("3", {})}
    assert cat.evaluate_constraint("a + 1 == b", env)
    assert cat.evaluate_constraint("b - a in {0,1}", env)
    assert cat.evaluate_constraint("a notin {0,1}", env)
    assert not cat.evaluate_constraint("a != 2", env)


def test_instantiate_data_are_cocycles(entries):
    e = next(x for x in entries if x.id == "S6.T3.a=1.case(ii)")
    for choice in e.choices:
        inst = cat.instantiate_entry(e, choice)
        assert len(inst.data) == 1
        assert all(is_cocycle(inst.algebra, inst.sub, inst.quot, d) for d in inst.data)


def test_constraint_violation_raises(entries):
    e = next(x for x in entries if x.id == "S3.T1.delta1.alpha1=1")
    with pytest.raises(cat.ConstraintError):
        cat.instantiate_entry(e, {"dquot": "1", "alpha": "1", "beta": "1", "eta": "0"})


@pytest.mark.parametrize("eid", ["S2.T0", "S3.T1.delta1.alpha1=2", "S4.T1", "S4.T2", "S5.T2",
                                 "S4.T3.case(3)(ii).multiple"])
def test_verify_small_entries(entries, eid):
    e = next(x for x in entries if x.id == eid)
    rep = cat.verify_entry(e)
    assert rep["pass"], rep
    assert all(p["pass"] for p in rep["probes"])


def test_variants_reported(entries):
    e = next(x for x in entries if x.id == "S4.T3.case(2)(ii)")
    rep = cat.verify_entry(e, probes=False)
    assert rep["pass"]
    assert set(rep["variants"]) == {"R0", "R1"}
