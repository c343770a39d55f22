"""Disjuncts over n variables and the translation of rules into reduced normal form.

A disjunct fixes, for every variable ``p_i``, whether ``p_i`` and ``<>p_i``
hold.  It is stored as two n-bit masks and identified by the integer
``theta | thetaD << n``.  Ids therefore sort by ``thetaD`` first, which is a
linear extension of inclusion on ``thetaD``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

from .formula import (And, Bot, Box, Dia, Formula, Iff, Imp, Not, Or, Var, as_formula, conj,
                      disj, max_var, parse)

MAX_VARS = 6


class ArityError(ValueError):
    pass


def _check_n(n: int, limit: int = MAX_VARS):
    if not isinstance(n, int) or not 1 <= n <= limit:
        raise ArityError(f"variable count must be within 1..{limit}, got {n!r}")


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> Tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True, order=True)
class Disjunct:
    n: int
    theta: int
    thetaD: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.theta & ~full or self.thetaD & ~full:
            raise ArityError(f"masks exceed {self.n} variables")

    @classmethod
    def of(cls, n: int, theta: Iterable[int] = (), thetaD: Iterable[int] = ()) -> "Disjunct":
        return cls(n, mask_of(theta), mask_of(thetaD))

    @classmethod
    def from_id(cls, n: int, ident: int) -> "Disjunct":
        if not 0 <= ident < 4 ** n:
            raise ArityError(f"id {ident} is not a disjunct over {n} variables")
        full = (1 << n) - 1
        return cls(n, ident & full, ident >> n)

    @property
    def id(self) -> int:
        return self.theta | self.thetaD << self.n

    @property
    def consistent(self) -> bool:
        return self.theta & ~self.thetaD == 0

    @property
    def reflexive(self) -> bool:
        return self.theta == self.thetaD

    def __str__(self):
        def fmt(mask):
            return "{" + ",".join(map(str, indices_of(mask))) + "}"
        return f"({fmt(self.theta)},{fmt(self.thetaD)})"


def all_disjuncts(n: int) -> List[Disjunct]:
    _check_n(n)
    return [Disjunct.from_id(n, i) for i in range(4 ** n)]


def consistent_disjuncts(n: int) -> List[Disjunct]:
    return [d for d in all_disjuncts(n) if d.consistent]


@lru_cache(maxsize=None)
def consistent_ids(n: int) -> Tuple[int, ...]:
    return tuple(d.id for d in consistent_disjuncts(n))


def reflexive_id(n: int, mask: int) -> int:
    """Id of the disjunct with ``theta = thetaD = mask``."""
    return mask | mask << n


def disjunct_formula(d: Disjunct) -> Formula:
    lits = [Var(i) if d.theta >> (i - 1) & 1 else Not(Var(i)) for i in range(1, d.n + 1)]
    lits += [Dia(Var(i)) if d.thetaD >> (i - 1) & 1 else Not(Dia(Var(i))) for i in range(1, d.n + 1)]
    return conj(lits)


def disjunction_formula(n: int, ids: Iterable[int]) -> Formula:
    return disj(disjunct_formula(Disjunct.from_id(n, i)) for i in sorted(ids))


@dataclass(frozen=True)
class RnfRule:
    """``premise`` holds every disjunct id of the premise.  The conclusion is
    either a set of ids (kept inside the premise) or a variable index."""

    n: int
    premise: FrozenSet[int]
    conclusion: Union[FrozenSet[int], int]

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "premise", frozenset(self.premise))
        bound = 4 ** self.n
        if any(not 0 <= i < bound for i in self.premise):
            raise ArityError("premise id out of range")
        if isinstance(self.conclusion, int):
            if not 1 <= self.conclusion <= self.n:
                raise ArityError(f"conclusion variable p{self.conclusion} out of range")
        else:
            concl = frozenset(self.conclusion)
            if any(not 0 <= i < bound for i in concl):
                raise ArityError("conclusion id out of range")
            # disjuncts outside the premise are refutable once the premise holds
            object.__setattr__(self, "conclusion", concl & self.premise)

    @property
    def variable_conclusion(self) -> bool:
        return isinstance(self.conclusion, int)

    def conclusion_ids(self) -> FrozenSet[int]:
        """Conclusion as a disjunct set; a variable ``p_k`` becomes the premise disjuncts with ``p_k`` true."""
        if self.variable_conclusion:
            bit = 1 << (self.conclusion - 1)
            return frozenset(i for i in self.premise if i & bit)
        return self.conclusion

    def as_set_rule(self) -> "RnfRule":
        return self if not self.variable_conclusion else RnfRule(self.n, self.premise, self.conclusion_ids())

    def strict_premise(self) -> FrozenSet[int]:
        """Premise disjuncts outside the conclusion."""
        return self.premise - self.conclusion_ids()

    def premise_formula(self) -> Formula:
        return disjunction_formula(self.n, self.premise)

    def conclusion_formula(self) -> Formula:
        if self.variable_conclusion:
            return Var(self.conclusion)
        return disjunction_formula(self.n, self.conclusion)

    def to_json(self) -> dict:
        concl = {"var": self.conclusion} if self.variable_conclusion else {"set": sorted(self.conclusion)}
        return {"n": self.n, "premise": sorted(self.premise), "conclusion": concl}

    @classmethod
    def from_json(cls, obj: dict) -> "RnfRule":
        c = obj["conclusion"]
        concl = c["var"] if "var" in c else frozenset(c["set"])
        return cls(obj["n"], frozenset(obj["premise"]), concl)


# ---------------------------------------------------------------------------
# rule text

Rule = Tuple[Tuple[Formula, ...], Formula]


def _split_top(text: str, sep: str) -> List[str]:
    depth, start, parts = 0, 0, []
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:k])
            start = k + 1
    parts.append(text[start:])
    return parts


def parse_rule(text: str) -> Rule:
    """``"f1, f2, ... / g"``; the premise list may be empty."""
    parts = _split_top(text, "/")
    if len(parts) != 2:
        raise ValueError(f"a rule needs exactly one top-level '/': {text!r}")
    prem_text, concl_text = parts
    prems = tuple(parse(s) for s in _split_top(prem_text, ",") if s.strip())
    return prems, parse(concl_text)


def rule_to_text(rule: Rule) -> str:
    prems, concl = rule
    return f"{', '.join(map(str, prems))} / {concl}"


# ---------------------------------------------------------------------------
# translation into reduced normal form


class _Renamer:
    """Rewrites formulas into Boolean combinations of variables and ``<>variable``.

    Any other modal subformula gets a fresh variable together with a defining
    equivalence; ``[]A`` is read as ``~<>~A``.
    """

    def __init__(self, first_fresh: int):
        self.next = first_fresh
        self.names: Dict[Formula, int] = {}
        self.defs: List[Formula] = []

    def name(self, f: Formula) -> Var:
        """A variable equivalent to ``f``."""
        if isinstance(f, Var):
            return f
        if f in self.names:
            return Var(self.names[f])
        body = self.flat(f)
        idx = self.next
        self.next += 1
        self.names[f] = idx
        self.defs.append(Iff(Var(idx), body))
        return Var(idx)

    def flat(self, f: Formula) -> Formula:
        if isinstance(f, (Var, Bot)):
            return f
        if isinstance(f, Dia):
            return Dia(self.name(f.child))
        if isinstance(f, Box):
            return Not(Dia(self.name(_neg(f.child))))
        if isinstance(f, Not):
            return Not(self.flat(f.child))
        return type(f)(self.flat(f.left), self.flat(f.right))


def _neg(f: Formula) -> Formula:
    return f.child if isinstance(f, Not) else Not(f)


def _boolean_models(f: Formula, n: int) -> FrozenSet[int]:
    """Ids of the consistent disjuncts whose literal assignment makes ``f`` true.

    ``f`` must be a Boolean combination of ``p_i`` and ``<>p_i``.
    """
    def ev(g: Formula, theta: int, thetaD: int) -> bool:
        if isinstance(g, Var):
            return bool(theta >> (g.index - 1) & 1)
        if isinstance(g, Dia):
            return bool(thetaD >> (g.child.index - 1) & 1)
        if isinstance(g, Bot):
            return False
        if isinstance(g, Not):
            return not ev(g.child, theta, thetaD)
        a = ev(g.left, theta, thetaD)
        if isinstance(g, And):
            return a and ev(g.right, theta, thetaD)
        if isinstance(g, Or):
            return a or ev(g.right, theta, thetaD)
        if isinstance(g, Imp):
            return (not a) or ev(g.right, theta, thetaD)
        if isinstance(g, Iff):
            return a == ev(g.right, theta, thetaD)
        raise TypeError(f"not a flat formula: {g!r}")

    full = (1 << n) - 1
    out = []
    for thetaD in range(full + 1):
        # consistent disjuncts only: theta ranges over subsets of thetaD
        sub = thetaD
        while True:
            if ev(f, sub, thetaD):
                out.append(sub | thetaD << n)
            if sub == 0:
                break
            sub = (sub - 1) & thetaD
    return frozenset(out)


def to_rnf_joint(rules: Sequence[Rule], max_vars: int = MAX_VARS) -> List[RnfRule]:
    """Translate several rules over one shared variable space.

    A substitution rejects all input rules at once iff some extension of it
    to the fresh variables rejects all output rules at once.
    """
    return translate(rules, max_vars)[0]


def translate(rules: Sequence[Rule], max_vars: int = MAX_VARS) -> Tuple[List[RnfRule], Dict[int, Formula]]:
    """Like :func:`to_rnf_joint`, also returning the subformula each fresh variable names.

    Extending a substitution ``s`` by ``x_k -> s(names[k])`` gives the
    extension that rejects the output exactly when ``s`` rejects the input.
    """
    rules = [(tuple(as_formula(a) for a in prems), as_formula(c)) for prems, c in rules]
    n0 = max((max_var(*prems, c) for prems, c in rules), default=0)
    n0 = max(n0, 1)
    ren = _Renamer(n0 + 1)
    flat = []
    for prems, concl in rules:
        fp = [ren.flat(a) for a in prems]
        fc = concl if isinstance(concl, Var) else ren.flat(concl)
        flat.append((fp, fc))
    n = ren.next - 1
    if n > max_vars:
        raise ArityError(f"reduced normal form needs {n} variables, above the limit {max_vars}")
    _check_n(n, max_vars)
    defs = conj(ren.defs) if ren.defs else None
    out = []
    for fp, fc in flat:
        parts = list(fp) + ([defs] if defs is not None else [])
        premise = _boolean_models(conj(parts), n)
        if isinstance(fc, Var):
            out.append(RnfRule(n, premise, fc.index))
        else:
            out.append(RnfRule(n, premise, _boolean_models(fc, n) & premise))
    return out, {k: f for f, k in ren.names.items()}


def to_rnf(premises: Sequence, conclusion, max_vars: int = MAX_VARS) -> RnfRule:
    """Translate ``premises / conclusion`` into reduced normal form."""
    return to_rnf_joint([(tuple(premises), conclusion)], max_vars)[0]


def rule_from_text(text: str, max_vars: int = MAX_VARS) -> RnfRule:
    prems, concl = parse_rule(text)
    return to_rnf(prems, concl, max_vars)
