import random

import pytest
from hypothesis import strategies as st

from s4adm.formula import And, Bot, Box, Dia, Iff, Imp, Not, Or, Var
from s4adm.kripke import KripkeModel


def formulas(max_var: int = 2, max_leaves: int = 6):
    leaves = st.one_of(st.integers(1, max_var).map(Var), st.just(Bot()))

    def extend(children):
        unary = st.sampled_from([Not, Box, Dia])
        binary = st.sampled_from([And, Or, Imp, Iff])
        return st.one_of(
            st.builds(lambda c, f: c(f), unary, children),
            st.builds(lambda c, a, b: c(a, b), binary, children, children),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def random_s4_model(rng: random.Random, worlds: int, nvars: int) -> KripkeModel:
    edges = {(a, b) for a in range(worlds) for b in range(worlds) if rng.random() < 0.35}
    val = {v: {w for w in range(worlds) if rng.random() < 0.5} for v in range(1, nvars + 1)}
    return KripkeModel.build(range(worlds), edges, val, close=True)


@pytest.fixture
def rng():
    return random.Random(20240601)
