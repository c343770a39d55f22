import pytest

from s4adm.catalog import DIAMOND_CATALOG, evaluate_catalog, implication_facts, modal_facts
from s4adm.kripke import valid_in
from s4adm.tableau import proves

THEOREMS = {12, 17, 18}


@pytest.mark.parametrize("label,f", modal_facts() + implication_facts(), ids=lambda x: str(x))
def test_facts_are_theorems(label, f):
    assert proves(f)


def test_prefix_instances_cover_length_three():
    labels = [k for k, _ in modal_facts() if k.startswith("8")]
    assert len(labels) == 1 + 2 + 4 + 8


@pytest.fixture(scope="module")
def catalog():
    return evaluate_catalog()


def test_catalog_size(catalog):
    assert len(catalog) == len(DIAMOND_CATALOG) == 18


def test_every_entry_is_diamond_theorem(catalog):
    assert all(e.diamond_theorem for e in catalog)


def test_theorem_split(catalog):
    assert {e.number for e in catalog if e.theorem} == THEOREMS


def test_countermodels_refute(catalog):
    for e in catalog:
        if e.number in THEOREMS:
            assert e.countermodel is None
            continue
        m = e.countermodel
        assert m.is_preorder() and len(m.worlds) <= 12
        assert not valid_in(m, e.formula)


def test_star_star_entries_give_rejecting_substitutions(catalog):
    from s4adm.decide import rejects
    for e in catalog:
        if e.star_star:
            assert rejects({1: e.formula}, ["<>p1", "p1 <-> []p1"], "p1")
        if e.star:
            assert rejects({1: e.formula}, ["<>p1"], "p1")


def test_json(catalog):
    js = catalog[0].to_json()
    assert js["number"] == 1 and js["star"] and js["countermodel_worlds"] >= 2
