"""Checker for explicit derivations in the Gentzen system G1s for S4.

Sequents are multisets.  Every node names exactly one rule; combined steps
such as "<>R, RW" must be written as two nodes.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .formula import And, Bot, Box, Dia, Formula, Imp, Not, Or, as_formula, to_text

RULES = ("Ax", "BotL", "AndL", "AndR", "OrL", "OrR", "ImpL", "ImpR", "NotL", "NotR",
         "LW", "RW", "Cut", "BoxL", "BoxR", "DiaL", "DiaR")

# textual aliases accepted on input
_ALIASES = {
    "⊥L": "BotL", "∧L": "AndL", "∧R": "AndR", "∨L": "OrL", "∨R": "OrR", "→L": "ImpL", "→R": "ImpR",
    "¬L": "NotL", "¬R": "NotR", "□L": "BoxL", "□R": "BoxR", "◇L": "DiaL", "◇R": "DiaR",
    "->L": "ImpL", "->R": "ImpR", "[]L": "BoxL", "[]R": "BoxR", "<>L": "DiaL", "<>R": "DiaR",
    "&L": "AndL", "&R": "AndR", "|L": "OrL", "|R": "OrR", "~L": "NotL", "~R": "NotR",
    "_|_L": "BotL",
}

ARITY = {"Ax": 0, "BotL": 0, "AndR": 2, "OrL": 2, "ImpL": 2, "Cut": 2}


@dataclass(frozen=True)
class Sequent:
    ant: Tuple[Formula, ...]
    suc: Tuple[Formula, ...]

    @classmethod
    def of(cls, ant: Sequence = (), suc: Sequence = ()) -> "Sequent":
        return cls(tuple(as_formula(f) for f in ant), tuple(as_formula(f) for f in suc))

    def __str__(self):
        return f"{', '.join(map(to_text, self.ant))} |- {', '.join(map(to_text, self.suc))}".strip()


@dataclass
class Derivation:
    rule: str
    conclusion: Sequent
    premises: List["Derivation"] = field(default_factory=list)

    def __post_init__(self):
        self.rule = _ALIASES.get(self.rule, self.rule)

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "conclusion": {"ant": [to_text(f) for f in self.conclusion.ant],
                           "suc": [to_text(f) for f in self.conclusion.suc]},
            "premises": [d.to_json() for d in self.premises],
        }

    @classmethod
    def from_json(cls, obj) -> "Derivation":
        if isinstance(obj, str):
            obj = json.loads(obj)
        concl = obj["conclusion"]
        return cls(obj["rule"], Sequent.of(concl.get("ant", ()), concl.get("suc", ())),
                   [cls.from_json(p) for p in obj.get("premises", ())])

    def nodes(self, path=()):
        yield path, self
        for k, d in enumerate(self.premises):
            yield from d.nodes(path + (k,))


class DerivationError(ValueError):
    def __init__(self, path, rule, reason):
        self.path, self.rule, self.reason = tuple(path), rule, reason
        where = "root" if not path else "premise path " + ".".join(map(str, path))
        super().__init__(f"{where} ({rule}): {reason}")


def _ms(xs) -> Counter:
    return Counter(xs)


def _minus(big: Counter, small: Counter) -> Optional[Counter]:
    """``big - small`` as multisets, or None if ``small`` is not contained."""
    if any(big[k] < v for k, v in small.items()):
        return None
    out = big.copy()
    out.subtract(small)
    return +out


def _one(c: Counter, f) -> Counter:
    return c + Counter([f])


def _check_node(d: Derivation) -> Optional[str]:
    """Reason the node fails its schema, or None."""
    rule = d.rule
    if rule not in RULES:
        return f"unknown rule {rule!r}"
    want = ARITY.get(rule, 1)
    if len(d.premises) != want:
        return f"expects {want} premise(s), got {len(d.premises)}"
    G, D = _ms(d.conclusion.ant), _ms(d.conclusion.suc)

    if rule == "Ax":
        if len(d.conclusion.ant) == 1 and len(d.conclusion.suc) == 1 and d.conclusion.ant == d.conclusion.suc:
            return None
        return "axiom must be exactly A |- A"
    if rule == "BotL":
        if d.conclusion.ant == (Bot(),) and not d.conclusion.suc:
            return None
        return "must be exactly _|_ |-"

    prem = [(_ms(p.conclusion.ant), _ms(p.conclusion.suc)) for p in d.premises]

    if rule in ("LW", "RW"):
        (pG, pD), = prem
        side_c, side_p, other_c, other_p = (G, pG, D, pD) if rule == "LW" else (D, pD, G, pG)
        diff = _minus(side_c, side_p)
        if other_c != other_p or diff is None or sum(diff.values()) != 1:
            return "conclusion must add exactly one formula on the weakened side"
        return None

    if rule == "Cut":
        (lG, lD), (rG, rD) = prem
        if lG != G:
            return "left premise antecedent must equal the conclusion antecedent"
        cut = _minus(lD, D)
        if cut is None or sum(cut.values()) != 1:
            return "left premise must add exactly the cut formula to the succedent"
        (a,) = cut.elements()
        if rG != _one(G, a) or rD != D:
            return "right premise must be A, Gamma |- Delta"
        return None

    if rule == "BoxR":
        (pG, pD), = prem
        if not all(isinstance(f, Box) for f in pG.elements()):
            return "premise antecedent must consist of boxed formulas"
        if _minus(G, pG) is None:
            return "boxed context of the premise missing from the conclusion"
        for a in pD:
            rest = _minus(pD, Counter([a]))
            if not all(isinstance(f, Dia) for f in rest.elements()):
                continue
            left = _minus(D, Counter([Box(a)]))
            if left is not None and _minus(left, rest) is not None:
                return None
        return "no principal A with premise |- A, <>Delta and conclusion []A, <>Delta, Delta'"

    if rule == "DiaL":
        (pG, pD), = prem
        if not all(isinstance(f, Dia) for f in pD.elements()):
            return "premise succedent must consist of diamond formulas"
        if _minus(D, pD) is None:
            return "diamond context of the premise missing from the conclusion"
        for a in pG:
            rest = _minus(pG, Counter([a]))
            if not all(isinstance(f, Box) for f in rest.elements()):
                continue
            left = _minus(G, Counter([Dia(a)]))
            if left is not None and _minus(left, rest) is not None:
                return None
        return "no principal A with premise A, []Gamma |- <>Delta matching the conclusion"

    # rules with a principal formula and an unchanged context
    left_rules = {"AndL": And, "OrL": Or, "ImpL": Imp, "NotL": Not, "BoxL": Box}
    right_rules = {"AndR": And, "OrR": Or, "ImpR": Imp, "NotR": Not, "DiaR": Dia}
    if rule in left_rules:
        side, ctor = G, left_rules[rule]
    else:
        side, ctor = D, right_rules[rule]
    for f in side:
        if not isinstance(f, ctor):
            continue
        if rule in left_rules:
            gam, dl = _minus(G, Counter([f])), D
        else:
            gam, dl = G, _minus(D, Counter([f]))
        if _expected(rule, f, gam, dl) == prem:
            return None
    return "no principal formula instantiates the schema"


def _expected(rule, f, G, D):
    if rule == "AndL":
        return [(G + Counter([f.left, f.right]), D)]
    if rule == "AndR":
        return [(G, _one(D, f.left)), (G, _one(D, f.right))]
    if rule == "OrL":
        return [(_one(G, f.left), D), (_one(G, f.right), D)]
    if rule == "OrR":
        return [(G, D + Counter([f.left, f.right]))]
    if rule == "ImpL":
        return [(G, _one(D, f.left)), (_one(G, f.right), D)]
    if rule == "ImpR":
        return [(_one(G, f.left), _one(D, f.right))]
    if rule == "NotL":
        return [(G, _one(D, f.child))]
    if rule == "NotR":
        return [(_one(G, f.child), D)]
    if rule == "BoxL":
        return [(G + Counter([f.child, f]), D)]
    if rule == "DiaR":
        return [(G, D + Counter([f.child, f]))]
    raise AssertionError(rule)


def verify_derivation(d: Derivation) -> None:
    """Raise :class:`DerivationError` at the first node (pre-order) that breaks its schema."""
    for path, node in d.nodes():
        reason = _check_node(node)
        if reason is not None:
            raise DerivationError(path, node.rule, reason)


def check_derivation(d: Derivation) -> bool:
    try:
        verify_derivation(d)
    except DerivationError:
        return False
    return True


# ---------------------------------------------------------------------------
# small builder used for the worked derivations

def step(rule: str, ant, suc, *premises: Derivation) -> Derivation:
    return Derivation(rule, Sequent.of(ant, suc), list(premises))


def worked_derivations() -> List[Derivation]:
    """Three G1s proofs of ``|- <>A`` for formulas from the diamond catalog.

    Combined steps are split into single-rule nodes; the weakenings that the
    printed trees leave implicit are written out.
    """
    # |- <>(p1 -> []p1)
    a = "p1 -> []p1"
    d1 = step("Ax", ["p1"], ["p1"])
    d1 = step("RW", ["p1"], ["p1", "[]p1"], d1)
    d1 = step("ImpR", [], ["p1", a], d1)
    d1 = step("RW", [], ["p1", a, f"<>({a})"], d1)
    d1 = step("DiaR", [], ["p1", f"<>({a})"], d1)
    d1 = step("BoxR", ["p1"], ["[]p1", f"<>({a})"], d1)
    d1 = step("ImpR", [], [a, f"<>({a})"], d1)
    d1 = step("DiaR", [], [f"<>({a})"], d1)

    # |- <>[](p1 -> []<>p1)
    b = "p1 -> []<>p1"
    db = f"<>[]({b})"
    d2 = step("Ax", ["p1"], ["p1"])
    d2 = step("RW", ["p1"], ["p1", "<>p1"], d2)
    d2 = step("DiaR", ["p1"], ["<>p1"], d2)
    d2 = step("RW", ["p1"], ["[]<>p1", "<>p1"], d2)
    d2 = step("ImpR", [], ["<>p1", b], d2)
    d2 = step("BoxR", [], ["<>p1", f"[]({b})"], d2)
    d2 = step("RW", [], ["<>p1", f"[]({b})", db], d2)
    d2 = step("DiaR", [], ["<>p1", db], d2)
    d2 = step("BoxR", ["p1"], ["[]<>p1", db], d2)
    d2 = step("ImpR", [], [b, db], d2)
    d2 = step("BoxR", [], [f"[]({b})", db], d2)
    d2 = step("DiaR", [], [db], d2)

    # |- <>[]<>(p1 -> []<>[]p1)
    c = "p1 -> []<>[]p1"
    dc = f"<>({c})"
    bdc = f"[]<>({c})"
    dbdc = f"<>[]<>({c})"
    d3 = step("Ax", ["p1"], ["p1"])
    d3 = step("RW", ["p1"], ["p1", "[]<>[]p1"], d3)
    d3 = step("ImpR", [], ["p1", c], d3)
    d3 = step("RW", [], ["p1", c, dc], d3)
    d3 = step("DiaR", [], ["p1", dc], d3)
    d3 = step("BoxR", [], ["[]p1", dc], d3)
    d3 = step("RW", [], ["[]p1", "<>[]p1", dc], d3)
    d3 = step("DiaR", [], ["<>[]p1", dc], d3)
    d3 = step("BoxR", [], ["<>[]p1", bdc], d3)
    d3 = step("RW", [], ["<>[]p1", bdc, dbdc], d3)
    d3 = step("DiaR", [], ["<>[]p1", dbdc], d3)
    d3 = step("BoxR", ["p1"], ["[]<>[]p1", dbdc], d3)
    d3 = step("ImpR", [], [c, dbdc], d3)
    d3 = step("RW", [], [c, dc, dbdc], d3)
    d3 = step("DiaR", [], [dc, dbdc], d3)
    d3 = step("BoxR", [], [bdc, dbdc], d3)
    d3 = step("DiaR", [], [dbdc], d3)
    return [d1, d2, d3]
