"""Fixed formula lists: basic S4 facts and formulas A with ``|- <>A``.

Basic facts are instantiated with ``A = p1`` and ``B = p2``.  The two rule
forms (monotonicity of box and diamond) are stated as their internal K-style
theorems, and the modality-prefix fact is instantiated over every prefix of
length at most three.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .formula import Formula, parse
from .kripke import KripkeModel
from .tableau import DEFAULT_NODE_CAP, is_theorem, proves


def _prefixes(max_len: int = 3) -> List[str]:
    out = []
    for k in range(max_len + 1):
        out.extend("".join(seq) for seq in itertools.product(("[]", "<>"), repeat=k))
    return out


def modal_facts() -> List[Tuple[str, Formula]]:
    """Labelled instances of the basic modal facts, all S4 theorems."""
    items = [
        ("1", "[](p1 -> p2) -> (<>p1 -> <>p2)"),
        ("2", "[](p1 -> p2) -> ([]p1 -> []p2)"),
        ("3", "[](p1 -> p2) -> (<>p1 -> <>p2)"),
        ("4", "[][]p1 <-> []p1"),
        ("5", "<><>p1 <-> <>p1"),
        ("6", "[]<>[]<>p1 <-> []<>p1"),
        ("7", "<>[]<>[]p1 <-> <>[]p1"),
    ]
    items += [(f"8{pre or '.'}", f"[]p1 -> {pre}p1") for pre in _prefixes()]
    return [(k, parse(v)) for k, v in items]


def implication_facts() -> List[Tuple[str, Formula]]:
    items = [
        ("1", "([]p1 -> p2) -> <>(p1 -> p2)"),
        ("2", "<>(p1 -> <>p2) -> ([]p1 -> <>p2)"),
        ("3", "(<>p1 -> []p2) <-> [](<>p1 -> []p2)"),
        ("4", "(<>p1 -> []p2) -> [](p1 -> []p2)"),
        ("5", "(p1 <-> <>p1) & (p2 <-> []p2) -> ((p1 -> p2) <-> [](p1 -> p2))"),
        ("6", "(p1 <-> []p1) & (p2 <-> []p2) -> ((p1 | p2) <-> [](p1 | p2))"),
        ("7", "([]p1 | []p2) <-> []([]p1 | []p2)"),
        ("8", "([]p1 | []p2) -> [](p1 | []p2)"),
    ]
    return [(k, parse(v)) for k, v in items]


DIAMOND_CATALOG: Tuple[str, ...] = (
    "p1 -> []p1",
    "p1 -> []<>p1",
    "p1 -> <>[]p1",
    "p1 -> []<>[]p1",
    "p1 -> <>[]<>p1",
    "<>p1 -> []<>p1",
    "<>p1 -> <>[]<>p1",
    "<>[]p1 -> []<>[]p1",
    "<>[]<>p1 -> []<>p1",
    "[](p1 -> []<>p1)",
    "[](p1 -> <>[]<>p1)",
    "[]([]p1 -> []<>[]p1)",
    "[](<>p1 -> []<>p1)",
    "[](<>p1 -> <>[]<>p1)",
    "[](<>[]p1 -> []<>[]p1)",
    "[](<>[]<>p1 -> []<>p1)",
    "[]<>(p1 -> []<>[]p1)",
    "[]<>(<>p1 -> []<>p1)",
)


@dataclass
class CatalogEntry:
    number: int
    formula: Formula
    diamond_theorem: bool
    theorem: bool
    box_invariant: bool
    countermodel: Optional[KripkeModel]

    @property
    def star(self) -> bool:
        return self.diamond_theorem and not self.theorem

    @property
    def star_star(self) -> bool:
        return self.star and self.box_invariant

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "formula": str(self.formula),
            "diamond_theorem": self.diamond_theorem,
            "theorem": self.theorem,
            "star": self.star,
            "star_star": self.star_star,
            "countermodel_worlds": None if self.countermodel is None else len(self.countermodel.worlds),
        }


def evaluate_catalog(node_cap: int = DEFAULT_NODE_CAP) -> List[CatalogEntry]:
    out = []
    for k, text in enumerate(DIAMOND_CATALOG, start=1):
        f = parse(text)
        thm, cm = is_theorem(f, node_cap)
        out.append(CatalogEntry(
            number=k,
            formula=f,
            diamond_theorem=proves(parse(f"<>({text})"), node_cap),
            theorem=thm,
            box_invariant=proves(parse(f"({text}) <-> []({text})"), node_cap),
            countermodel=cm,
        ))
    return out
