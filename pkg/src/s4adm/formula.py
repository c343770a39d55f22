"""Modal formulas: syntax tree, text parser, printer and substitution."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Union


class Formula:
    """Base class for formula nodes.  Nodes are immutable and hashable."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)

    def __invert__(self) -> "Formula":
        return Not(self)

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __rshift__(self, other: "Formula") -> "Formula":
        return Imp(self, other)


@dataclass(frozen=True)
class Var(Formula):
    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"variable index must be a positive integer, got {self.index!r}")


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Box(Formula):
    child: Formula


@dataclass(frozen=True)
class Dia(Formula):
    child: Formula


BOT = Bot()
TOP = Not(BOT)

UNARY = (Not, Box, Dia)
BINARY = (And, Or, Imp, Iff)

Substitution = Mapping[int, Formula]


def p(i: int) -> Var:
    return Var(i)


def iff(a: Formula, b: Formula) -> Formula:
    return Iff(a, b)


def conj(items) -> Formula:
    """Left-nested conjunction; the empty conjunction is TOP."""
    items = list(items)
    if not items:
        return TOP
    out = items[0]
    for f in items[1:]:
        out = And(out, f)
    return out


def disj(items) -> Formula:
    """Left-nested disjunction; the empty disjunction is BOT."""
    items = list(items)
    if not items:
        return BOT
    out = items[0]
    for f in items[1:]:
        out = Or(out, f)
    return out


def subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order walk over all subformula occurrences."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, UNARY):
            stack.append(g.child)
        elif isinstance(g, BINARY):
            stack.append(g.right)
            stack.append(g.left)


def variables(f: Formula) -> frozenset:
    return frozenset(g.index for g in subformulas(f) if isinstance(g, Var))


def max_var(*fs: Formula) -> int:
    return max((max(variables(f), default=0) for f in fs), default=0)


def apply_substitution(sigma: Substitution, f: Formula) -> Formula:
    """Replace each ``Var(i)`` by ``sigma[i]``; variables outside the domain stay put."""
    if isinstance(f, Var):
        return sigma.get(f.index, f)
    if isinstance(f, Bot):
        return f
    if isinstance(f, UNARY):
        c = apply_substitution(sigma, f.child)
        return f if c is f.child else type(f)(c)
    left = apply_substitution(sigma, f.left)
    right = apply_substitution(sigma, f.right)
    if left is f.left and right is f.right:
        return f
    return type(f)(left, right)


def compose(outer: Substitution, inner: Substitution) -> Dict[int, Formula]:
    """The substitution ``outer . inner`` (apply ``inner`` first)."""
    out = {i: apply_substitution(outer, g) for i, g in inner.items()}
    for i, g in outer.items():
        out.setdefault(i, g)
    return out


def dia_free(f: Formula) -> Formula:
    """Rewrite every diamond as ``~[]~`` so that the two readings compare equal."""
    if isinstance(f, (Var, Bot)):
        return f
    if isinstance(f, Dia):
        return Not(Box(Not(dia_free(f.child))))
    if isinstance(f, UNARY):
        return type(f)(dia_free(f.child))
    return type(f)(dia_free(f.left), dia_free(f.right))


def same_modulo_diamond(a: Formula, b: Formula) -> bool:
    return dia_free(a) == dia_free(b)


# ---------------------------------------------------------------------------
# printing

_PREC = {Iff: 1, Imp: 2, Or: 3, And: 4}
_ASCII = {Iff: "<->", Imp: "->", Or: "|", And: "&", Not: "~", Box: "[]", Dia: "<>"}
_UNICODE = {Iff: "↔", Imp: "→", Or: "∨", And: "∧", Not: "¬", Box: "□", Dia: "◇"}
_ATOM_PREC = 10


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), _ATOM_PREC)


def to_text(f: Formula, unicode: bool = False) -> str:
    """Print with the fewest parentheses that still parse back to ``f``."""
    sym = _UNICODE if unicode else _ASCII
    sp = "" if unicode else " "

    def go(g: Formula) -> str:
        if isinstance(g, Var):
            return f"p{g.index}"
        if isinstance(g, Bot):
            return "⊥" if unicode else "_|_"
        if isinstance(g, UNARY):
            inner = go(g.child)
            if isinstance(g.child, BINARY):
                inner = f"({inner})"
            return sym[type(g)] + inner
        prec = _PREC[type(g)]
        left, right = go(g.left), go(g.right)
        right_assoc = isinstance(g, Imp)
        lp, rp = _prec(g.left), _prec(g.right)
        if lp < prec or (right_assoc and lp == prec):
            left = f"({left})"
        if rp < prec or (not right_assoc and rp == prec):
            right = f"({right})"
        op = sym[type(g)]
        return f"{left}{sp}{op}{sp}{right}" if not unicode else f"{left}{op}{right}"

    return go(f)


# ---------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<var>p(?P<num>\d+))"
    r"|(?P<op><->|->|\[\]|<>|_\|_|[~&|()↔→∨∧¬□◇⊥⊤])"
    r")"
)
_CANON = {"↔": "<->", "→": "->", "∨": "|", "∧": "&", "¬": "~", "□": "[]", "◇": "<>", "⊥": "_|_"}
_BINOPS = {"<->": (1, "left", Iff), "->": (2, "right", Imp), "|": (3, "left", Or), "&": (4, "left", And)}
_PREFIX = {"~": Not, "[]": Box, "<>": Dia}


def _tokenize(text: str):
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start("var") if m.group("var") else m.start("op")
        if m.group("var"):
            idx = int(m.group("num"))
            if idx == 0:
                raise ParseError("variable index 0 is not allowed", start)
            out.append(("var", idx, start))
        else:
            out.append(("op", _CANON.get(m.group("op"), m.group("op")), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def parse(text: str) -> Formula:
    """Parse the ASCII (or Unicode) surface syntax into a :class:`Formula`.

    Binding, tightest first: ``~ [] <>`` then ``&``, ``|``, ``->`` (right
    associative) and ``<->``.  ``&``, ``|`` and ``<->`` associate to the left.
    """
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def advance():
        nonlocal i
        tok = toks[i]
        i += 1
        return tok

    def primary() -> Formula:
        kind, val, pos = advance()
        if kind == "var":
            return Var(val)
        if kind == "op":
            if val in _PREFIX:
                return _PREFIX[val](primary())
            if val == "_|_":
                return BOT
            if val == "⊤":
                return TOP
            if val == "(":
                inner = expr(0)
                k2, v2, p2 = advance()
                if v2 != ")":
                    raise ParseError("expected ')'", p2)
                return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)

    def expr(min_prec: int) -> Formula:
        left = primary()
        while True:
            kind, val, _ = peek()
            if kind != "op" or val not in _BINOPS:
                return left
            prec, assoc, ctor = _BINOPS[val]
            if prec < min_prec:
                return left
            advance()
            right = expr(prec if assoc == "right" else prec + 1)
            left = ctor(left, right)

    result = expr(0)
    kind, val, pos = peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", pos)
    return result


FormulaLike = Union[Formula, str]


def as_formula(f: FormulaLike) -> Formula:
    return parse(f) if isinstance(f, str) else f
