import pytest
from hypothesis import given, settings

from s4adm.formula import (BOT, TOP, And, Box, Dia, Iff, Imp, Not, Or, ParseError, Var, apply_substitution,
                           compose, conj, disj, max_var, parse, same_modulo_diamond, subformulas, to_text,
                           variables)

from conftest import formulas


@given(formulas(3, 10))
@settings(max_examples=300)
def test_print_parse_roundtrip(f):
    assert parse(to_text(f)) == f
    assert parse(to_text(f, unicode=True)) == f


def test_precedence_and_associativity():
    assert parse("p1 & p2 | p3") == Or(And(Var(1), Var(2)), Var(3))
    assert parse("p1 -> p2 -> p3") == Imp(Var(1), Imp(Var(2), Var(3)))
    assert parse("p1 <-> p2 -> p3") == Iff(Var(1), Imp(Var(2), Var(3)))
    assert parse("~[]<>p1 & p2") == And(Not(Box(Dia(Var(1)))), Var(2))
    assert parse("p1 | p2 | p3") == Or(Or(Var(1), Var(2)), Var(3))


def test_unicode_surface():
    assert parse("◇(p1→□p1)") == parse("<>(p1 -> []p1)")
    assert parse("¬⊥") == TOP
    assert parse("p1 ∧ p2 ∨ p3 ↔ p4") == parse("p1 & p2 | p3 <-> p4")


def test_minimal_parentheses():
    assert to_text(parse("(p1 -> p2) -> p3")) == "(p1 -> p2) -> p3"
    assert to_text(parse("p1 -> (p2 -> p3)")) == "p1 -> p2 -> p3"
    assert to_text(parse("[](p1 & p2)")) == "[](p1 & p2)"
    assert to_text(parse("(p1 & p2) & p3")) == "p1 & p2 & p3"
    assert to_text(parse("p1 & (p2 & p3)")) == "p1 & (p2 & p3)"


@pytest.mark.parametrize("bad,pos", [("p1 ->", 5), ("p0", 0), ("(p1", 3), ("p1 p2", 3), ("p1 $ p2", 3), ("", 0)])
def test_parse_errors_report_position(bad, pos):
    with pytest.raises(ParseError) as e:
        parse(bad)
    assert e.value.position == pos


def test_var_index_validated():
    with pytest.raises(ValueError):
        Var(0)


def test_variables_and_subformulas():
    f = parse("[](p1 -> <>p3)")
    assert variables(f) == {1, 3}
    assert max_var(f, parse("p7")) == 7
    assert len(list(subformulas(f))) == 5


def test_conj_disj_units():
    assert conj([]) == TOP
    assert disj([]) == BOT
    assert conj([Var(1), Var(2), Var(3)]) == parse("p1 & p2 & p3")


def test_substitution_and_composition():
    s1 = {1: parse("p2 -> []p2")}
    s2 = {2: parse("<>p3")}
    f = parse("<>p1 & p2")
    assert apply_substitution(s1, f) == parse("<>(p2 -> []p2) & p2")
    assert apply_substitution(compose(s2, s1), f) == apply_substitution(s2, apply_substitution(s1, f))


@given(formulas(2, 6), formulas(2, 4), formulas(2, 4))
@settings(max_examples=150)
def test_composition_law(f, a, b):
    s1, s2 = {1: a}, {2: b}
    assert apply_substitution(compose(s2, s1), f) == apply_substitution(s2, apply_substitution(s1, f))


def test_same_modulo_diamond():
    assert same_modulo_diamond(parse("<>p1"), parse("~[]~p1"))
    assert not same_modulo_diamond(parse("<>p1"), parse("[]p1"))


def test_operator_sugar():
    p1, p2 = Var(1), Var(2)
    assert (~p1 & p2) | (p1 >> p2) == parse("~p1 & p2 | (p1 -> p2)")
