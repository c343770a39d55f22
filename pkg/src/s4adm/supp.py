"""Membership tests and witness search for the families Supp1 and Supp2.

Sets are given as collections of disjunct ids (see :mod:`s4adm.rnf`).

Supp1 is closed under union and self-satisfaction is monotone in the world
set, so the largest Supp1 subset of any pool is a greatest fixpoint.  For
Supp2, a witness with cluster set K can always be enlarged to every pool
element whose thetaD lies in K, so existence reduces to a search over
cluster sets rather than over arbitrary subsets.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .model import closure_failures, unsatisfied
from .rnf import Disjunct, consistent_ids, mask_of, reflexive_id
from .tableau import ResourceLimitExceeded

DEFAULT_SUBSET_CAP = 10**6

STRICT = "strict"
MEET = "meet"


class SearchCapExceeded(ResourceLimitExceeded):
    """The subset search hit its cap before reaching a verdict."""


def _ids(W: Iterable[int]) -> FrozenSet[int]:
    W = frozenset(W)
    if not W:
        raise ValueError("the world set must be nonempty")
    return W


def in_supp1(n: int, W: Iterable[int]) -> bool:
    return not unsatisfied(n, _ids(W))


def in_supp2(n: int, W: Iterable[int]) -> bool:
    W = _ids(W)
    return in_supp1(n, W) and not closure_failures(n, W)


def condition_4(n: int, W: Iterable[int]) -> bool:
    """Some element has ``theta = thetaD``."""
    return any(Disjunct.from_id(n, i).reflexive for i in _ids(W))


def condition_5(n: int, W: Iterable[int]) -> bool:
    """Any two elements are seen by a common ``z`` with ``thetaD(z) <= theta(z) | thetaD(x) | thetaD(y)``."""
    ds = [Disjunct.from_id(n, i) for i in sorted(_ids(W))]
    for x, y in itertools.combinations_with_replacement(ds, 2):
        need = x.thetaD | y.thetaD
        if not any(z.thetaD & need == need and z.thetaD & ~(z.theta | need) == 0 for z in ds):
            return False
    return True


def max_supp1(n: int, pool: Iterable[int]) -> FrozenSet[int]:
    """Largest Supp1 subset of ``pool``; empty if there is none."""
    W = frozenset(pool)
    while W:
        bad = unsatisfied(n, W)
        if not bad:
            break
        W = W - set(bad)
    return W


def restrict(n: int, W: Iterable[int], x: int) -> FrozenSet[int]:
    """Worlds of ``W`` visible from ``x`` in the canonical model."""
    W = _ids(W)
    if x not in W:
        raise ValueError(f"{x} is not in the world set")
    dx = Disjunct.from_id(n, x).thetaD
    return frozenset(w for w in W if Disjunct.from_id(n, w).thetaD & ~dx == 0)


# ---------------------------------------------------------------------------
# constrained search


@dataclass(frozen=True)
class SuppConstraint:
    """Pairs ``(upper, lower)``.

    In ``strict`` mode every pair demands ``lower < W <= upper``; in ``meet``
    mode it demands ``W <= upper`` and ``W`` not contained in ``lower``.
    """

    pairs: Tuple[Tuple[FrozenSet[int], FrozenSet[int]], ...]
    mode: str = STRICT

    def __post_init__(self):
        if self.mode not in (STRICT, MEET):
            raise ValueError(f"unknown mode {self.mode!r}")
        pairs = tuple((frozenset(u), frozenset(lo)) for u, lo in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if self.mode == STRICT:
            for u, lo in pairs:
                if not lo <= u:
                    raise ValueError("lower set must be contained in the upper set")

    @classmethod
    def of(cls, pairs: Iterable, mode: str = STRICT) -> "SuppConstraint":
        return cls(tuple(pairs), mode)

    def admits(self, W: FrozenSet[int]) -> bool:
        if self.mode == STRICT:
            return all(lo < W <= u for u, lo in self.pairs)
        return all(W <= u and not W <= lo for u, lo in self.pairs)

    def to_json(self) -> list:
        return [{"upper": sorted(u), "lower": sorted(lo)} for u, lo in self.pairs]

    @classmethod
    def from_json(cls, obj: list, mode: str = STRICT) -> "SuppConstraint":
        return cls(tuple((frozenset(p["upper"]), frozenset(p["lower"])) for p in obj), mode)


def _pool(n: int, c: SuppConstraint) -> FrozenSet[int]:
    pool = frozenset(consistent_ids(n))
    for u, _ in c.pairs:
        pool &= u
    return pool


def _clusters(n: int, pool: Iterable[int]) -> Dict[int, FrozenSet[int]]:
    out: Dict[int, Set[int]] = {}
    for i in pool:
        out.setdefault(i >> n, set()).add(i)
    return {k: frozenset(v) for k, v in sorted(out.items())}


def feasible_cluster_sets(n: int, c: SuppConstraint,
                          subset_cap: int = DEFAULT_SUBSET_CAP,
                          first_only: bool = False) -> List[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Every cluster set K whose full pool restriction is a witness, with that witness."""
    pool = _pool(n, c)
    clusters = _clusters(n, pool)
    keys = list(clusters)
    required = 0
    if c.mode == STRICT:
        for _, lo in c.pairs:
            if not lo <= pool:
                return []
            for i in lo:
                required |= 1 << keys.index(i >> n)
    if len(keys) > 30 or (1 << len(keys)) > subset_cap:
        raise SearchCapExceeded(f"{1 << len(keys)} cluster sets exceed the subset cap {subset_cap}")
    out = []
    for sel in range(1, 1 << len(keys)):
        if sel & required != required:
            continue
        K = frozenset(keys[j] for j in range(len(keys)) if sel >> j & 1)
        # a reflexive element is needed for the empty union
        if not any(reflexive_id(n, k) in clusters[k] for k in K):
            continue
        W = frozenset().union(*(clusters[k] for k in K))
        if c.admits(W) and in_supp2(n, W):
            out.append((K, W))
            if first_only:
                break
    return out


def supp2_exists(n: int, c: SuppConstraint, subset_cap: int = DEFAULT_SUBSET_CAP) -> Optional[FrozenSet[int]]:
    """Some witness (not necessarily the smallest), or None when there is none."""
    found = feasible_cluster_sets(n, c, subset_cap, first_only=True)
    return found[0][1] if found else None


def find_supp2_witness(n: int, c: SuppConstraint,
                       subset_cap: int = DEFAULT_SUBSET_CAP) -> Optional[FrozenSet[int]]:
    """The smallest witness in (size, sorted ids) order, or None.

    Raises :class:`SearchCapExceeded` when more than ``subset_cap``
    candidates would have to be examined.
    """
    feasible = feasible_cluster_sets(n, c, subset_cap)
    if not feasible:
        return None
    ks = {K for K, _ in feasible}
    cand = sorted(frozenset().union(*(W for _, W in feasible)))
    budget = subset_cap
    for size in range(1, len(cand) + 1):
        for combo in itertools.combinations(cand, size):
            budget -= 1
            if budget < 0:
                raise SearchCapExceeded(f"witness search exceeded {subset_cap} candidates")
            if frozenset(i >> n for i in combo) not in ks:
                continue
            W = frozenset(combo)
            if c.admits(W) and in_supp2(n, W):
                return W
    raise AssertionError("a feasible cluster set must contain a witness")


# ---------------------------------------------------------------------------
# inductive generator used for testing


def _covering_thetas(rng: random.Random, c: int, base: int) -> List[int]:
    """Random subsets of ``c`` whose union with ``base`` is ``c``; at least one."""
    bits = [1 << j for j in range(c.bit_length()) if c >> j & 1]
    out = []
    for _ in range(rng.randint(1, 3)):
        out.append(sum(b for b in bits if rng.random() < 0.5))
    missing = c & ~(base | _or(out))
    if missing:
        out.append(missing | sum(b for b in bits if rng.random() < 0.3))
    return out


def _or(xs) -> int:
    m = 0
    for x in xs:
        m |= x
    return m


def random_supp1(n: int, rng: random.Random, extensions: int = 3) -> FrozenSet[int]:
    """A Supp1 set built from the inductive clauses: clusters first, then extensions.

    Base clause: pick clusters ``c`` and, in each, elements whose thetas cover
    ``c``.  Extension clause: pick a cluster ``c`` and elements ``Y`` of the
    current set below ``c``; add elements of ``c`` covering what ``Y`` leaves.
    """
    full = (1 << n) - 1
    W: Set[int] = set()
    for c in rng.sample(range(full + 1), rng.randint(1, min(3, full + 1))):
        for t in _covering_thetas(rng, c, 0):
            W.add(t | c << n)
    for _ in range(rng.randint(0, extensions)):
        c = rng.randint(0, full)
        below = [w for w in sorted(W) if (w >> n) & ~c == 0]
        Y = [w for w in below if rng.random() < 0.5]
        base = _or(w & full for w in Y)
        for t in _covering_thetas(rng, c, base):
            W.add(t | c << n)
    return frozenset(W)


def parse_ids(text: str) -> FrozenSet[int]:
    """``"[2,3]"`` or ``"2,3"`` or ``"2 3"``."""
    body = text.strip().strip("[]{}")
    parts = [s for s in body.replace(",", " ").split() if s]
    return frozenset(int(s) for s in parts)


def ids_from_masks(n: int, pairs: Sequence[Tuple[Iterable[int], Iterable[int]]]) -> FrozenSet[int]:
    """Ids from ``(theta, thetaD)`` index lists."""
    return frozenset(mask_of(t) | mask_of(d) << n for t, d in pairs)
