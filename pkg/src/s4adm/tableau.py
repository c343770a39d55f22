"""S4 theoremhood by a signed tableau with ancestor blocking.

A world label is a saturated set of signed formulas.  ``T []A`` persists into
every successor; each ``F []A`` spawns a successor seeded with ``F A`` and the
current boxes, unless an ancestor with the same box set already contains that
seed, in which case the world points back to the ancestor.  Box sets only grow
along a branch, so the search terminates.  Open searches yield finite
countermodels; the reflexive-transitive closure of the tree plus back edges is
the accessibility relation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .formula import (And, Bot, Box, Dia, Formula, Iff, Imp, Not, Or, Var, as_formula,
                      variables)
from .kripke import KripkeModel, evaluate, reflexive_transitive_closure

DEFAULT_NODE_CAP = 10**6

Signed = Tuple[bool, Formula]


class ResourceLimitExceeded(RuntimeError):
    """The search hit its node cap; no verdict was reached."""


def normalize(f: Formula) -> Formula:
    """Eliminate diamonds and biconditionals: ``<>A`` becomes ``~[]~A``."""
    if isinstance(f, (Var, Bot)):
        return f
    if isinstance(f, Dia):
        return Not(Box(Not(normalize(f.child))))
    if isinstance(f, Iff):
        a, b = normalize(f.left), normalize(f.right)
        return And(Imp(a, b), Imp(b, a))
    if isinstance(f, (Not, Box)):
        return type(f)(normalize(f.child))
    return type(f)(normalize(f.left), normalize(f.right))


class _Label:
    __slots__ = ("items", "members", "boxes")

    def __init__(self, items: Tuple[Signed, ...]):
        self.items = items
        self.members = frozenset(items)
        self.boxes = frozenset(s for s in items if s[0] and isinstance(s[1], Box))

    def add(self, new) -> "_Label":
        extra = tuple(s for s in new if s not in self.members)
        return _Label(self.items + extra) if extra else self


@dataclass
class _World:
    label: _Label
    children: List["_World"] = field(default_factory=list)
    back: List["_World"] = field(default_factory=list)


def _requirement(s: Signed, members) -> Optional[List[Tuple[Signed, ...]]]:
    """Alternatives needed to saturate ``s``; ``None`` if nothing is missing."""
    sign, f = s

    def need(*alts):
        for alt in alts:
            if all(x in members for x in alt):
                return None
        return list(alts)

    if isinstance(f, Not):
        return need(((not sign, f.child),))
    if isinstance(f, And):
        if sign:
            return need(((True, f.left), (True, f.right)))
        return need(((False, f.left),), ((False, f.right),))
    if isinstance(f, Or):
        if sign:
            return need(((True, f.left),), ((True, f.right),))
        return need(((False, f.left), (False, f.right)))
    if isinstance(f, Imp):
        if sign:
            return need(((False, f.left),), ((True, f.right),))
        return need(((True, f.left), (False, f.right)))
    if isinstance(f, Box) and sign:
        return need(((True, f.child),))
    return None


def _closed(label: _Label) -> bool:
    m = label.members
    if (True, Bot()) in m:
        return True
    return any((not sign, f) in m for sign, f in label.items if sign)


class Tableau:
    """One search; not shared between threads."""

    def __init__(self, node_cap: int = DEFAULT_NODE_CAP):
        self.node_cap = node_cap
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise ResourceLimitExceeded(f"tableau exceeded {self.node_cap} nodes")

    def _saturate(self, label: _Label) -> Iterator[_Label]:
        self._tick()
        if _closed(label):
            return
        branching = None
        for s in label.items:
            req = _requirement(s, label.members)
            if req is None:
                continue
            if len(req) == 1:
                yield from self._saturate(label.add(req[0]))
                return
            if branching is None:
                branching = req
        if branching is None:
            yield label
            return
        for alt in branching:
            yield from self._saturate(label.add(alt))

    def _world(self, seed: Tuple[Signed, ...], path: List[_World]) -> Optional[_World]:
        for label in self._saturate(_Label(seed)):
            node = _World(label)
            path.append(node)
            ok = True
            boxes = tuple(s for s in label.items if s in label.boxes)
            for sign, f in label.items:
                if sign or not isinstance(f, Box):
                    continue
                child_seed = ((False, f.child),) + boxes
                target = next((u for u in path if u.label.boxes == label.boxes
                               and all(s in u.label.members for s in child_seed)), None)
                if target is not None:
                    node.back.append(target)
                    continue
                child = self._world(child_seed, path)
                if child is None:
                    ok = False
                    break
                node.children.append(child)
            path.pop()
            if ok:
                return node
        return None

    def satisfy(self, signed: Tuple[Signed, ...]) -> Optional[_World]:
        return self._world(tuple((s, normalize(f)) for s, f in signed), [])


def _to_model(root: _World, var_indices) -> KripkeModel:
    ids: Dict[int, int] = {}
    order: List[_World] = []

    def visit(w: _World):
        ids[id(w)] = len(order)
        order.append(w)
        for c in w.children:
            visit(c)

    visit(root)
    edges = set()
    for w in order:
        for c in w.children:
            edges.add((ids[id(w)], ids[id(c)]))
        for b in w.back:
            edges.add((ids[id(w)], ids[id(b)]))
    worlds = tuple(range(len(order)))
    rel = reflexive_transitive_closure(worlds, edges)
    val = {v: frozenset(ids[id(w)] for w in order if (True, Var(v)) in w.label.members)
           for v in sorted(var_indices)}
    return KripkeModel(worlds, frozenset(rel), val, s4=True)


def satisfiable(f, node_cap: int = DEFAULT_NODE_CAP) -> Optional[KripkeModel]:
    """A finite S4 model whose world 0 satisfies ``f``, or ``None``."""
    f = as_formula(f)
    root = Tableau(node_cap).satisfy(((True, f),))
    if root is None:
        return None
    model = _to_model(root, variables(f))
    assert evaluate(model, 0, f), "tableau produced a model that does not satisfy its root"
    return model


def is_theorem(f, node_cap: int = DEFAULT_NODE_CAP) -> Tuple[bool, Optional[KripkeModel]]:
    """Decide ``|-S4 f``; on failure return a countermodel refuting ``f`` at world 0."""
    f = as_formula(f)
    root = Tableau(node_cap).satisfy(((False, f),))
    if root is None:
        return True, None
    model = _to_model(root, variables(f))
    assert not evaluate(model, 0, f), "tableau produced a countermodel that does not refute its root"
    return False, model


def proves(f, node_cap: int = DEFAULT_NODE_CAP) -> bool:
    return is_theorem(f, node_cap)[0]


def has_property_star(f, node_cap: int = DEFAULT_NODE_CAP) -> bool:
    """``|- <>f`` but not ``|- f``."""
    f = as_formula(f)
    return proves(Dia(f), node_cap) and not proves(f, node_cap)


def has_property_star_star(f, node_cap: int = DEFAULT_NODE_CAP) -> bool:
    """The star property plus ``|- f <-> []f``."""
    f = as_formula(f)
    return has_property_star(f, node_cap) and proves(Iff(f, Box(f)), node_cap)
