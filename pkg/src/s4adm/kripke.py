"""Finite Kripke models and the satisfaction relation."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, Mapping, Tuple

from .formula import And, Bot, Box, Dia, Formula, Iff, Imp, Not, Or, Var


@dataclass(frozen=True)
class KripkeModel:
    worlds: Tuple[Hashable, ...]
    relation: FrozenSet[Tuple[Hashable, Hashable]]
    valuation: Mapping[int, FrozenSet[Hashable]]
    s4: bool = True
    _succ: Dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        ws = set(self.worlds)
        if len(ws) != len(self.worlds):
            raise ValueError("duplicate worlds")
        succ = {w: [] for w in self.worlds}
        for a, b in self.relation:
            if a not in ws or b not in ws:
                raise ValueError(f"edge {(a, b)!r} mentions an unknown world")
            succ[a].append(b)
        for var, where in self.valuation.items():
            if not set(where) <= ws:
                raise ValueError(f"valuation of p{var} mentions an unknown world")
        object.__setattr__(self, "_succ", {w: tuple(v) for w, v in succ.items()})
        if self.s4 and not self.is_preorder():
            raise ValueError("S4 model must have a reflexive and transitive relation")

    @classmethod
    def build(cls, worlds: Iterable, edges: Iterable, valuation: Mapping[int, Iterable], s4: bool = True,
              close: bool = False) -> "KripkeModel":
        """Convenience constructor; ``close=True`` takes the reflexive-transitive closure."""
        worlds = tuple(worlds)
        rel = set(edges)
        if close:
            rel = reflexive_transitive_closure(worlds, rel)
        return cls(worlds, frozenset(rel), {k: frozenset(v) for k, v in valuation.items()}, s4)

    def successors(self, w) -> Tuple:
        try:
            return self._succ[w]
        except KeyError:
            raise KeyError(f"unknown world {w!r}") from None

    def is_preorder(self) -> bool:
        rel = self.relation
        if any((w, w) not in rel for w in self.worlds):
            return False
        for a, b in rel:
            for c in self._succ[b]:
                if (a, c) not in rel:
                    return False
        return True

    def true_at(self, var: int):
        try:
            return self.valuation[var]
        except KeyError:
            raise KeyError(f"variable p{var} is outside the valuation domain") from None

    def to_json(self) -> dict:
        def key(w):
            return (str(type(w)), w)

        worlds = sorted(self.worlds, key=key)
        return {
            "worlds": worlds,
            "edges": sorted([list(e) for e in self.relation], key=lambda e: (key(e[0]), key(e[1]))),
            "valuation": {str(k): sorted(v, key=key) for k, v in sorted(self.valuation.items())},
        }

    def to_dot(self, label=str) -> str:
        lines = ["digraph M {"]
        for w in self.worlds:
            true = [f"p{k}" for k, v in sorted(self.valuation.items()) if w in v]
            lines.append(f'  "{label(w)}" [label="{label(w)}\\n{",".join(true)}"];')
        for a, b in sorted(self.relation, key=lambda e: (str(e[0]), str(e[1]))):
            if a != b:
                lines.append(f'  "{label(a)}" -> "{label(b)}";')
        lines.append("}")
        return "\n".join(lines)


def reflexive_transitive_closure(worlds, edges) -> set:
    succ = {w: {w} for w in worlds}
    for a, b in edges:
        succ[a].add(b)
    changed = True
    while changed:
        changed = False
        for w in worlds:
            new = set().union(*(succ[v] for v in succ[w]))
            if not new <= succ[w]:
                succ[w] |= new
                changed = True
    return {(a, b) for a in worlds for b in succ[a]}


def evaluate(m: KripkeModel, w, f: Formula) -> bool:
    """``m, w |= f``."""
    if w not in m._succ:
        raise KeyError(f"unknown world {w!r}")
    return _eval(m, w, f)


def _eval(m: KripkeModel, w, f: Formula) -> bool:
    if isinstance(f, Var):
        return w in m.true_at(f.index)
    if isinstance(f, Bot):
        return False
    if isinstance(f, Not):
        return not _eval(m, w, f.child)
    if isinstance(f, And):
        return _eval(m, w, f.left) and _eval(m, w, f.right)
    if isinstance(f, Or):
        return _eval(m, w, f.left) or _eval(m, w, f.right)
    if isinstance(f, Imp):
        return (not _eval(m, w, f.left)) or _eval(m, w, f.right)
    if isinstance(f, Iff):
        return _eval(m, w, f.left) == _eval(m, w, f.right)
    if isinstance(f, Box):
        return all(_eval(m, v, f.child) for v in m.successors(w))
    if isinstance(f, Dia):
        return any(_eval(m, v, f.child) for v in m.successors(w))
    raise TypeError(f"not a formula: {f!r}")


def valid_in(m: KripkeModel, f: Formula) -> bool:
    return all(_eval(m, w, f) for w in m.worlds)
