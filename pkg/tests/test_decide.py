import itertools
import random

import pytest

from s4adm.decide import (invalidity_witness, is_admissible, is_valid_rule, joint_inadmissible,
                          joint_reflexive_extension, jointly_invalid, reflexive_extension, rejects)
from s4adm.rnf import RnfRule, consistent_ids, reflexive_id, rule_from_text
from s4adm.supp import in_supp1, in_supp2

D0, DD, DT = 0, 2, 3
DIA_RULE = RnfRule(1, {DD, DT}, {DT})


def test_validity_examples():
    assert is_valid_rule(RnfRule(1, {DT}, {DT}))
    assert not is_valid_rule(DIA_RULE)
    assert invalidity_witness([DIA_RULE]) == {DD, DT}
    assert not is_valid_rule(rule_from_text("<>p1 / p1"))


@pytest.mark.parametrize("text,admissible", [
    ("<>p1 / p1", False),
    ("<>p1, p1 <-> []p1 / p1", False),
    ("p1 / []p1", True),
    ("p1 / p1", True),
    ("[]p1 / p1", True),
    ("<>[]p1 / p1", False),
])
def test_admissibility_pipeline(text, admissible):
    ok, W = is_admissible(rule_from_text(text))
    assert ok == admissible
    assert (W is None) == admissible


def test_dia_rule_witness():
    assert is_admissible(rule_from_text("<>p1 / p1")) == (False, {DD, DT})


def test_joint():
    r1 = RnfRule(1, {DD, DT}, {DT})
    r2 = RnfRule(1, {DD, DT}, {DD})
    assert joint_inadmissible([r1, r2]) == (True, {DD, DT})
    assert joint_inadmissible([rule_from_text("<>p1 / p1")])[0]
    assert not joint_inadmissible([r1, RnfRule(1, {DT}, {DT})])[0]
    assert jointly_invalid([r1, r2])[0]
    with pytest.raises(ValueError):
        joint_inadmissible([])
    with pytest.raises(ValueError):
        joint_inadmissible([r1, RnfRule(2, {5}, {5})])


def test_rejects():
    assert rejects({1: "p1 -> []p1"}, ["<>p1"], "p1")
    assert not rejects({1: "~_|_"}, ["<>p1"], "p1")
    assert rejects({1: "[](<>p2 -> []<>p2)"}, ["<>p1", "p1 <-> []p1"], "p1")
    assert not rejects({1: "p1 -> []p1"}, ["<>p1", "p1 <-> []p1"], "p1")


def _one_var_rules():
    ids = consistent_ids(1)
    for k in range(1, len(ids) + 1):
        for P in itertools.combinations(ids, k):
            P = frozenset(P)
            yield RnfRule(1, P, 1)
            for m in range(len(P) + 1):
                for J in itertools.combinations(sorted(P), m):
                    yield RnfRule(1, P, frozenset(J))


def test_valid_implies_admissible_exhaustive():
    for r in _one_var_rules():
        if is_valid_rule(r):
            assert is_admissible(r)[0]


def test_reflexive_extension_exhaustive_one_and_two_vars():
    rules = list(_one_var_rules())
    rng = random.Random(5)
    ids = consistent_ids(2)
    for _ in range(200):
        P = frozenset(rng.sample(ids, rng.randint(1, 9)))
        rules.append(RnfRule(2, P, frozenset(x for x in P if rng.random() < 0.4)))
    for r in rules:
        if not is_valid_rule(r):
            assert not is_admissible(reflexive_extension(r))[0]


def test_reflexive_extension_examples():
    assert reflexive_extension(DIA_RULE) == DIA_RULE  # x = ({p1},{p1}) is already there
    with pytest.raises(ValueError):
        reflexive_extension(RnfRule(1, {DT}, {DT}))
    ext = reflexive_extension(RnfRule(1, {D0}, frozenset()))
    assert reflexive_id(1, 0) == D0 and D0 in ext.premise


def test_joint_reflexive_extension():
    rng = random.Random(9)
    ids = consistent_ids(2)
    seen = 0
    for _ in range(300):
        k = rng.randint(1, 3)
        rules = []
        for _ in range(k):
            P = frozenset(rng.sample(ids, rng.randint(2, 9)))
            rules.append(RnfRule(2, P, frozenset(x for x in P if rng.random() < 0.4)))
        if jointly_invalid(rules)[0]:
            seen += 1
            assert joint_inadmissible(list(joint_reflexive_extension(rules)))[0]
    assert seen > 20


def test_witnesses_are_members():
    for r in _one_var_rules():
        bad, W = joint_inadmissible([r])
        if bad:
            assert in_supp2(1, W)
        Wv = invalidity_witness([r])
        if Wv is not None:
            assert in_supp1(1, Wv)
