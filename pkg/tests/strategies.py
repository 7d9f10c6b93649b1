import random

from hypothesis import strategies as st

from gapwpo.ordinals import nat
from gapwpo.orders import GapSeq
from gapwpo.sampling import enum_ordinals, random_tree


def ordinals(max_size=4):
    return st.sampled_from(enum_ordinals(max_size))


def positive_ordinals(max_size=4):
    return st.sampled_from(enum_ordinals(max_size)[1:])


def gap_seqs(alphabet=3, max_len=4):
    return st.lists(st.integers(0, alphabet - 1), max_size=max_len).map(
        lambda xs: GapSeq(tuple(nat(x) for x in xs), nat(alphabet)))


def trees(alphabet=2, max_nodes=7, left_strict=False):
    return st.integers(0, 2 ** 32).map(
        lambda seed: random_tree(random.Random(seed), alphabet, max_nodes, left_strict))


def chains(universe, leq):
    """Triples x <= y <= z from a finite universe; leq must be reflexive."""
    universe = list(universe)

    @st.composite
    def chain(draw):
        x = draw(st.sampled_from(universe))
        y = draw(st.sampled_from([v for v in universe if leq(x, v)]))
        z = draw(st.sampled_from([v for v in universe if leq(y, v)]))
        return x, y, z

    return chain()
