"""The canonical model on a set of disjuncts.

Worlds are disjunct ids; ``a R b`` iff ``thetaD(b) <= thetaD(a)``; ``p_i``
holds at ``a`` iff ``i`` is in ``theta(a)``.
"""
from __future__ import annotations

from typing import Iterable, List, Tuple

from .kripke import KripkeModel, evaluate
from .rnf import Disjunct, disjunct_formula


def _split(n: int, W: Iterable[int]) -> List[Tuple[int, int, int]]:
    """Sorted ``(id, theta, thetaD)`` triples; validates ids against ``n``."""
    out = []
    for i in sorted(set(W)):
        d = Disjunct.from_id(n, i)
        out.append((i, d.theta, d.thetaD))
    if not out:
        raise ValueError("the world set must be nonempty")
    return out


def build_model(n: int, W: Iterable[int]) -> KripkeModel:
    items = _split(n, W)
    worlds = tuple(i for i, _, _ in items)
    rel = frozenset((a, b) for a, _, da in items for b, _, db in items if db & ~da == 0)
    val = {k: frozenset(i for i, t, _ in items if t >> (k - 1) & 1) for k in range(1, n + 1)}
    return KripkeModel(worlds, rel, val, s4=True)


def self_satisfying(n: int, W: Iterable[int]) -> bool:
    """Every world satisfies its own disjunct; decided by evaluation in the model."""
    m = build_model(n, W)
    return all(evaluate(m, w, disjunct_formula(Disjunct.from_id(n, w))) for w in m.worlds)


def unsatisfied(n: int, W: Iterable[int]) -> List[int]:
    """Worlds of ``W`` that fail their own disjunct (bitmask test).

    Only the positive ``<>p_i`` literals can fail: ``p_i`` and the negated
    literals hold by construction whenever ``theta <= thetaD``.
    """
    items = _split(n, W)
    bad = []
    for i, t, d in items:
        if t & ~d:
            bad.append(i)
            continue
        reach = 0
        for _, t2, d2 in items:
            if d2 & ~d == 0:
                reach |= t2
        if reach != d:
            bad.append(i)
    return bad


def union_family(masks: Iterable[int]) -> List[int]:
    """All unions of subfamilies of ``masks``, the empty union included."""
    fam = {0}
    for m in set(masks):
        fam |= {f | m for f in fam}
    return sorted(fam)


def closure_condition(n: int, W: Iterable[int]) -> bool:
    return not closure_failures(n, W)


def closure_failures(n: int, W: Iterable[int]) -> List[int]:
    """Unions ``U`` of thetaD values over subsets of ``W`` with no world ``z``
    satisfying ``thetaD(z) = theta(z) | U``; returned as masks."""
    items = _split(n, W)
    fam = union_family(d for _, _, d in items)
    out = []
    for U in fam:
        if not any(d == t | U for _, t, d in items):
            out.append(U)
    return out


def closure_condition_naive(n: int, W: Iterable[int]) -> bool:
    """Same verdict by enumerating all ``2^|W|`` subsets; for testing."""
    items = _split(n, W)
    for k in range(1 << len(items)):
        U = 0
        for j, (_, _, d) in enumerate(items):
            if k >> j & 1:
                U |= d
        if not any(d == t | U for _, t, d in items):
            return False
    return True


def model_json(n: int, W: Iterable[int]) -> dict:
    return build_model(n, W).to_json()


def model_dot(n: int, W: Iterable[int]) -> str:
    return build_model(n, W).to_dot()
