"""Algebra on sets of rejecting substitutions.

A rule system is a finite set of entries ``W/J`` with ``J <= W``; it denotes
the substitutions rejecting every entry.  Such a substitution realizes a
Supp2 set V of disjuncts with ``V <= W`` and ``V`` not inside ``J`` for every
entry, and every such V is realized.  Emptiness is therefore decided by a
Supp2 search, which needs the variable count ``n``.  Systems with ``n=None``
hold abstract ids: the actions and simplification still apply, but only
trivial emptiness (some ``W <= J``) is detected.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .supp import DEFAULT_SUBSET_CAP, MEET, SuppConstraint, feasible_cluster_sets

DEFAULT_STEP_CAP = 10**4

Entry = Tuple[FrozenSet[int], FrozenSet[int]]


def _key(e: Entry):
    return (sorted(e[0]), sorted(e[1]))


@dataclass(frozen=True)
class RuleSystem:
    n: Optional[int]
    entries: Tuple[Entry, ...]

    def __post_init__(self):
        seen = {(frozenset(W), frozenset(J)) for W, J in self.entries}
        for W, J in seen:
            if not J <= W:
                raise ValueError(f"conclusion {sorted(J)} is not inside premise {sorted(W)}")
        object.__setattr__(self, "entries", tuple(sorted(seen, key=_key)))

    @classmethod
    def of(cls, n: Optional[int], entries: Iterable) -> "RuleSystem":
        return cls(n, tuple((frozenset(W), frozenset(J)) for W, J in entries))

    def with_entries(self, entries: Iterable) -> "RuleSystem":
        return RuleSystem.of(self.n, entries)

    def trivially_empty(self) -> bool:
        return any(W <= J for W, J in self.entries)

    def to_json(self) -> list:
        return [{"W": sorted(W), "J": sorted(J)} for W, J in self.entries]

    @classmethod
    def from_json(cls, obj, n: Optional[int] = None) -> "RuleSystem":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls.of(n, ((e["W"], e["J"]) for e in obj))

    def __str__(self):
        def s(x):
            return ",".join(map(str, sorted(x))) or "{}"
        return "S(" + " ; ".join(f"{s(W)}/{s(J)}" for W, J in self.entries) + ")"


def _need_n(a: RuleSystem) -> int:
    if a.n is None:
        raise ValueError("emptiness needs the variable count; the system holds abstract ids")
    return a.n


def is_empty(a: RuleSystem, subset_cap: int = DEFAULT_SUBSET_CAP) -> bool:
    if a.trivially_empty():
        return True
    n = _need_n(a)
    c = SuppConstraint.of(a.entries, MEET)
    return not feasible_cluster_sets(n, c, subset_cap, first_only=True)


def action_plus(a: RuleSystem, J: Iterable[int]) -> List[RuleSystem]:
    """Split by ``+J``: branch ``alpha`` uses ``W_i/(J_i|J)`` where bit ``i-1`` is 0
    and ``(J_i|J)/J_i`` where it is 1."""
    J = frozenset(J)
    if not all(J <= W for W, _ in a.entries):
        raise ValueError("+J needs J inside every premise")
    m = len(a.entries)
    out = []
    for alpha in range(1 << m):
        es = []
        for i, (W, Ji) in enumerate(a.entries):
            es.append((W, Ji | J) if not alpha >> i & 1 else (Ji | J, Ji))
        out.append(a.with_entries(es))
    return out


def action_minus(a: RuleSystem, J: Iterable[int]) -> List[RuleSystem]:
    """Split by ``-J``: the system with J removed everywhere, then one system per
    entry with ``W_i/(W_i-J)`` added."""
    J = frozenset(J)
    if not all(Ji < W for W, Ji in a.entries):
        raise ValueError("-J needs every conclusion strictly inside its premise")
    out = [a.with_entries((W - J, Ji - J) for W, Ji in a.entries)]
    for W, _ in a.entries:
        out.append(a.with_entries(a.entries + ((W, W - J),)))
    return out


def _drop_subsumed(entries: Sequence[Entry]) -> List[Entry]:
    """Remove ``W1/J1`` when another entry has ``J1 <= J2`` and ``W2 <= W1``."""
    es = sorted(set(entries), key=_key)
    keep = []
    for k, (W1, J1) in enumerate(es):
        if any(j != k and J1 <= J2 and W2 <= W1 for j, (W2, J2) in enumerate(es)):
            continue  # distinct entries never subsume each other both ways
        keep.append((W1, J1))
    return keep


def _supp2_support(n: int, W: FrozenSet[int], subset_cap: int) -> FrozenSet[int]:
    """Union of all Supp2 subsets of ``W``."""
    c = SuppConstraint.of([(W, frozenset())], MEET)
    found = feasible_cluster_sets(n, c, subset_cap)
    return frozenset().union(*(S for _, S in found)) if found else frozenset()


def simplify(a: RuleSystem, shrink: bool = False, subset_cap: int = DEFAULT_SUBSET_CAP) -> RuleSystem:
    """Common premise ``W`` = intersection of premises with conclusions cut to ``W``,
    then drop subsumed entries.  With ``shrink`` (needs ``n``), ``W`` is first cut
    to the union of its Supp2 subsets."""
    if not a.entries:
        return a
    W = frozenset.intersection(*(W for W, _ in a.entries))
    if shrink:
        W = _supp2_support(_need_n(a), W, subset_cap)
    es = [(W, J & W) for _, J in a.entries]
    return a.with_entries(_drop_subsumed(es))


def intersect(a: RuleSystem, b: RuleSystem) -> RuleSystem:
    if a.n != b.n:
        raise ValueError(f"arity mismatch: {a.n} vs {b.n}")
    return simplify(a.with_entries(a.entries + b.entries))


def canonical(W: Iterable[int], n: Optional[int] = None) -> RuleSystem:
    """``{W/(W-{i}) : i in W}``: substitutions realizing exactly ``W``."""
    W = frozenset(W)
    return RuleSystem.of(n, ((W, W - {i}) for i in W))


def is_canonical(a: RuleSystem) -> bool:
    if not a.entries:
        return False
    Ws = {W for W, _ in a.entries}
    if len(Ws) != 1:
        return False
    (W,) = Ws
    return {J for _, J in a.entries} == {W - {i} for i in W}


# ---------------------------------------------------------------------------
# driver


@dataclass
class Leaf:
    system: RuleSystem
    trace: Tuple[str, ...]
    status: str  # canonical | empty | unconstrained | open

    def to_json(self) -> dict:
        return {"system": self.system.to_json(), "trace": list(self.trace), "status": self.status}


@dataclass
class Decomposition:
    root: RuleSystem
    leaves: List[Leaf] = field(default_factory=list)
    complete: bool = True
    steps: int = 0

    def to_json(self) -> dict:
        return {"root": self.root.to_json(), "complete": self.complete, "steps": self.steps,
                "leaves": [leaf.to_json() for leaf in self.leaves]}


def _empty(a: RuleSystem, subset_cap: int) -> bool:
    return a.trivially_empty() if a.n is None else is_empty(a, subset_cap)


def next_action(a: RuleSystem) -> Optional[Tuple[str, int]]:
    """``("+", i)`` with ``i`` the least id of ``W-J`` over entries where ``|W-J| >= 2``;
    otherwise ``("-", i)`` with ``i`` the least id whose ``W-{i}`` is not yet a
    conclusion; None for canonical or unconstrained systems.  Expects a
    simplified system."""
    if not a.entries or is_canonical(a):
        return None
    wide = [W - J for W, J in a.entries if len(W - J) >= 2]
    if wide:
        return "+", min(min(d) for d in wide)
    (W,) = {W for W, _ in a.entries}
    have = {J for _, J in a.entries}
    return "-", min(i for i in W if W - {i} not in have)


def decompose(a: RuleSystem, step_cap: int = DEFAULT_STEP_CAP,
              subset_cap: int = DEFAULT_SUBSET_CAP) -> Decomposition:
    """Split ``a`` into canonical components and empty parts.

    After simplification all premises coincide, so ``-i`` uses the two-branch
    form: remove ``i``, or add ``W/(W-{i})``.
    """
    out = Decomposition(a)
    work = [(a, ())]
    while work:
        sys_, trace = work.pop()
        s = simplify(sys_)
        if s != sys_:
            trace = trace + ("s",)
        if _empty(s, subset_cap):
            out.leaves.append(Leaf(s, trace, "empty"))
            continue
        act = next_action(s)
        if act is None:
            out.leaves.append(Leaf(s, trace, "canonical" if s.entries else "unconstrained"))
            continue
        if out.steps >= step_cap:
            out.complete = False
            out.leaves.append(Leaf(s, trace, "open"))
            continue
        out.steps += 1
        sign, i = act
        if sign == "+":
            branches = action_plus(s, {i})
        else:
            branches = action_minus(s, {i})[:2]
        for k in reversed(range(len(branches))):
            work.append((branches[k], trace + (f"{sign}{i}#{k}",)))
    out.leaves.sort(key=lambda leaf: leaf.trace)
    return out


# ---------------------------------------------------------------------------
# replay of a displayed action chain on a union of systems


def replay_step(systems: Sequence[RuleSystem], step: str) -> List[RuleSystem]:
    """Apply one displayed step to every system it concerns.

    ``+i`` touches systems where ``i`` lies in every premise and some entry has
    ``i`` in ``W-J`` with ``|W-J| >= 2``; ``-i`` touches systems where some
    entry has ``i`` in ``W & J``; ``s`` simplifies.  Trivially empty branches
    are dropped.
    """
    out: List[RuleSystem] = []
    for a in systems:
        if step == "s":
            res = [simplify(a)]
        else:
            sign, i = step[0], int(step[1:])
            if sign == "+" and all(i in W for W, _ in a.entries) and \
                    any(i in W - J and len(W - J) >= 2 for W, J in a.entries):
                res = action_plus(a, {i})
            elif sign == "-" and any(i in W & J for W, J in a.entries):
                res = action_minus(a, {i})
                if len({W for W, _ in a.entries}) == 1:
                    res = res[:2]
            else:
                res = [a]
        out.extend(r for r in res if not r.trivially_empty())
    return out
