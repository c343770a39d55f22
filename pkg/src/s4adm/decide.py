"""Validity and admissibility verdicts for rules in reduced normal form.

A rule with premise set P and conclusion set J is refuted by a world set W
when ``W <= P`` and ``W`` is not inside ``J``.  It is invalid iff some Supp1
set refutes it, and inadmissible iff some Supp2 set does.  A conclusion
``p_k`` stands for the premise disjuncts with ``p_k`` true.
"""
from __future__ import annotations

from typing import FrozenSet, Optional, Sequence, Tuple

from .formula import apply_substitution, as_formula
from .rnf import Disjunct, RnfRule, consistent_ids, reflexive_id
from .supp import DEFAULT_SUBSET_CAP, MEET, SuppConstraint, find_supp2_witness, max_supp1
from .tableau import DEFAULT_NODE_CAP, proves

Verdict = Tuple[bool, Optional[FrozenSet[int]]]


def _sides(r: RnfRule) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    return r.premise, r.conclusion_ids()


def _same_arity(rules: Sequence[RnfRule]) -> int:
    if not rules:
        raise ValueError("at least one rule is required")
    ns = {r.n for r in rules}
    if len(ns) != 1:
        raise ValueError(f"rules disagree on the variable count: {sorted(ns)}")
    return ns.pop()


def invalidity_witness(rules: Sequence[RnfRule]) -> Optional[FrozenSet[int]]:
    """The largest Supp1 set refuting every rule at once, or None.

    Supp1 is closed under union, so if any Supp1 subset of the common
    premise refutes all rules, the largest one does.
    """
    n = _same_arity(rules)
    pool = frozenset(consistent_ids(n))
    for r in rules:
        pool &= r.premise
    W = max_supp1(n, pool)
    if W and all(not W <= _sides(r)[1] for r in rules):
        return W
    return None


def is_valid_rule(r: RnfRule) -> bool:
    return invalidity_witness([r]) is None


def jointly_invalid(rules: Sequence[RnfRule]) -> Verdict:
    W = invalidity_witness(rules)
    return W is not None, W


def joint_inadmissible(rules: Sequence[RnfRule], subset_cap: int = DEFAULT_SUBSET_CAP) -> Verdict:
    """Whether one substitution rejects every rule; the smallest Supp2 witness if so."""
    n = _same_arity(rules)
    c = SuppConstraint.of([_sides(r) for r in rules], MEET)
    W = find_supp2_witness(n, c, subset_cap)
    return W is not None, W


def is_admissible(r: RnfRule, subset_cap: int = DEFAULT_SUBSET_CAP) -> Verdict:
    """``(True, None)`` if admissible, else ``(False, W)`` with the smallest Supp2 witness."""
    bad, W = joint_inadmissible([r], subset_cap)
    return not bad, W


def rejects(sigma, premises: Sequence, conclusion, node_cap: int = DEFAULT_NODE_CAP) -> bool:
    """``sigma`` makes every premise a theorem and the conclusion a non-theorem."""
    sigma = {k: as_formula(v) for k, v in sigma.items()}
    if not all(proves(apply_substitution(sigma, as_formula(a)), node_cap) for a in premises):
        return False
    return not proves(apply_substitution(sigma, as_formula(conclusion)), node_cap)


def _extend(r: RnfRule, x: int) -> RnfRule:
    """Add ``x`` to the premise, and to the conclusion unless it already sits
    in the premise outside the conclusion."""
    P, J = _sides(r)
    if x not in P:
        return RnfRule(r.n, P | {x}, J | {x})
    return RnfRule(r.n, P, J)


def reflexive_extension(r: RnfRule) -> RnfRule:
    """Extend an invalid rule by a reflexive disjunct so that it becomes inadmissible.

    With ``W`` the largest refuting Supp1 set and ``z`` its least element
    outside the conclusion, ``x`` has ``theta = thetaD = thetaD(z)``; the
    worlds seen from ``z`` together with ``x`` form a Supp2 witness.
    """
    W = invalidity_witness([r])
    if W is None:
        raise ValueError("reflexive extension needs an invalid rule")
    J = _sides(r)[1]
    z = min(W - J)
    return _extend(r, reflexive_id(r.n, Disjunct.from_id(r.n, z).thetaD))


def joint_reflexive_extension(rules: Sequence[RnfRule]) -> Tuple[RnfRule, ...]:
    """Extend jointly invalid rules by one shared reflexive disjunct on top of the witness."""
    W = invalidity_witness(rules)
    if W is None:
        raise ValueError("joint reflexive extension needs jointly invalid rules")
    n = rules[0].n
    top = 0
    for w in W:
        top |= w >> n
    x = reflexive_id(n, top)
    return tuple(_extend(r, x) for r in rules)
