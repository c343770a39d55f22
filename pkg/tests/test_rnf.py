import itertools

import pytest

from s4adm.decide import rejects
from s4adm.formula import Var, apply_substitution, parse
from s4adm.rnf import (ArityError, Disjunct, RnfRule, all_disjuncts, consistent_disjuncts, disjunct_formula,
                       parse_rule, rule_from_text, to_rnf, translate)
from s4adm.tableau import proves, satisfiable

D0, DD, DT = 0, 2, 3  # (∅,∅), (∅,{p1}), ({p1},{p1}) over one variable


@pytest.mark.parametrize("n,count", [(1, 4), (2, 16), (3, 64)])
def test_all_disjuncts_count(n, count):
    ds = all_disjuncts(n)
    assert len(ds) == count == len({d.id for d in ds})
    assert [d.id for d in ds] == list(range(count))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_consistent_count(n):
    assert len(consistent_disjuncts(n)) == 3 ** n


@pytest.mark.parametrize("n", [1, 2])
def test_consistency_certified_by_prover(n):
    for d in all_disjuncts(n):
        phi = disjunct_formula(d)
        if d.consistent:
            assert satisfiable(phi) is not None
        else:
            assert proves(~phi)


def test_one_variable_consistent_ids():
    assert [d.id for d in consistent_disjuncts(1)] == [D0, DD, DT]
    assert str(Disjunct.from_id(1, DD)) == "({},{1})"


def test_distinct_disjuncts_contradict():
    ds = consistent_disjuncts(2)
    for a, b in itertools.combinations(ds, 2):
        assert proves(~(disjunct_formula(a) & disjunct_formula(b)))


def test_disjunct_formula_shapes():
    assert disjunct_formula(Disjunct.of(2, [1, 2], [1, 2])) == parse("p1 & p2 & <>p1 & <>p2")
    assert disjunct_formula(Disjunct.of(2, [2], [1])) == parse("~p1 & p2 & <>p1 & ~<>p2")
    assert disjunct_formula(Disjunct.of(2, [], [])) == parse("~p1 & ~p2 & ~<>p1 & ~<>p2")


def test_arity_guards():
    with pytest.raises(ArityError):
        all_disjuncts(0)
    with pytest.raises(ArityError):
        all_disjuncts(7)
    with pytest.raises(ArityError):
        Disjunct.from_id(1, 4)
    with pytest.raises(ArityError):
        RnfRule(1, {5}, 1)
    with pytest.raises(ArityError):
        RnfRule(1, {2}, 2)


def test_dia_rule():
    r = rule_from_text("<>p1 / p1")
    assert (r.n, r.premise, r.conclusion) == (1, {DD, DT}, 1)
    # the premise disjunction is equivalent to <>p1
    assert proves(parse(f"<>p1 <-> ({r.premise_formula()})"))


def test_identity_rule():
    r = rule_from_text("p1 / p1")
    assert (r.premise, r.conclusion) == ({DT}, 1)


def test_rnf_input_is_fixed_point():
    for J in [{DT}, {DD, DT}, {D0, DD, DT}]:
        f = RnfRule(1, J, J).premise_formula()
        r = to_rnf([f], f)
        assert (r.n, r.premise, r.conclusion) == (1, frozenset(J), frozenset(J))


def test_necessitation_rule():
    r = rule_from_text("p1 / []p1")
    assert r.n == 2 and not r.variable_conclusion
    assert r.conclusion <= r.premise


def test_two_premise_rule():
    r = rule_from_text("<>p1, p1 <-> []p1 / p1")
    assert r.n == 2
    assert {str(Disjunct.from_id(2, i)) for i in r.premise} == {"({1},{1})", "({2},{1,2})"}


def test_conclusion_normalized_inside_premise():
    r = RnfRule(1, {DT}, {DD, DT})
    assert r.conclusion == {DT}


def test_json_roundtrip():
    for r in (rule_from_text("<>p1 / p1"), RnfRule(1, {DD, DT}, {DT})):
        assert RnfRule.from_json(r.to_json()) == r


def test_rule_text_parsing():
    prems, concl = parse_rule("<>p1, (p1 <-> []p1) / p1")
    assert len(prems) == 2 and concl == Var(1)
    assert parse_rule(" / []p1")[0] == ()
    with pytest.raises(ValueError):
        parse_rule("p1")


def test_variable_guard():
    with pytest.raises(ArityError):
        rule_from_text("[]p1, []p2, []p3, []p4, []p5, []p6 / p1")


SIGMA_POOL = ["p1", "~p1", "[]p1", "<>p1", "p1 -> []p1", "[](<>p1 -> []<>p1)", "~_|_", "_|_", "<>[]p1"]
RULES = ["<>p1 / p1", "p1 / []p1", "<>p1, p1 <-> []p1 / p1", "[]p1 / p1", "[]p1 / []<>p1", "p1 -> []p1 / p1"]


@pytest.mark.parametrize("text", RULES)
@pytest.mark.parametrize("image", SIGMA_POOL)
def test_equirejectability_with_canonical_extension(text, image):
    """A substitution rejects the rule iff its canonical extension rejects the translation."""
    prems, concl = parse_rule(text)
    (r,), names = translate([(prems, concl)])
    sigma = {1: parse(image)}
    ext = dict(sigma)
    for k, f in names.items():
        ext[k] = apply_substitution(sigma, f)
    lhs = rejects(sigma, prems, concl)
    rhs = rejects(ext, [r.premise_formula()], r.conclusion_formula())
    assert lhs == rhs
