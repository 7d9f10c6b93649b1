import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gapwpo.errors import DominancePreconditionViolated, NotBad, TypeMismatch
from gapwpo.literals import parse_ord, parse_tree
from gapwpo.ordinals import ONE, ZERO, nat
from gapwpo.orders import UNIT_LEAF, Leaf, Node, leq_tree
from gapwpo.reify import (
    EMPTY_SEQ,
    B,
    BadSeq,
    E,
    Inj,
    L,
    OrdElem,
    Prod,
    SeqTerm,
    Star,
    Sum,
    check_term,
    e,
    height,
    inhabited,
    iota,
    is_term,
    iterate_type,
    leq_rterm,
    otype,
    random_term,
    random_type,
    reify_prefixes,
    reify_tree_badseq,
    simplify_type,
)

seeds = st.integers(0, 2 ** 32)


def o(n):
    return OrdElem(nat(n))


class TestTypes:
    def test_otype_values(self):
        assert str(otype(Star(E()))) == "phi(1,1)"
        assert str(otype(L(ZERO))) == "phi(2,0)"
        assert otype(E()) == ZERO

    def test_inhabited(self):
        assert not inhabited(E())
        assert not inhabited(L(ZERO))
        assert inhabited(Star(E()))
        assert not inhabited(Prod(L(ONE), E()))
        assert inhabited(Sum(E(), L(ONE)))


class TestTerms:
    def test_check_term(self):
        check_term(L(nat(5)), o(3))
        with pytest.raises(TypeMismatch):
            check_term(L(nat(3)), o(3))
        assert not is_term(Star(L(ONE)), o(0))
        lifted = Leaf(EMPTY_SEQ)
        assert is_term(B(ONE, Star(E())), Node(ZERO, lifted, lifted))
        assert not is_term(B(ONE, Star(E())), UNIT_LEAF)

    def test_iota(self):
        assert iota(2, o(0)) == Inj(1, o(0))
        assert iota(1, o(0)) == Inj(0, Inj(1, o(0)))

    def test_height(self):
        assert height(o(4)) == 0
        assert height(SeqTerm((o(1), Inj(0, o(0))))) == 2

    def test_mismatched_shapes(self):
        with pytest.raises(TypeMismatch):
            leq_rterm(o(0), EMPTY_SEQ)


class TestSimplify:
    def test_ordinals(self):
        assert simplify_type(L(nat(5)), o(3)) == L(nat(3))
        assert e(L(nat(5)), o(3), o(1)) == o(1)

    def test_empty_sequence(self):
        assert simplify_type(Star(L(ONE)), EMPTY_SEQ) == E()

    def test_dominated_input_rejected(self):
        with pytest.raises(DominancePreconditionViolated):
            e(L(nat(5)), o(1), o(3))

    def test_iterate(self):
        assert iterate_type(L(nat(5)), [o(3), o(1)]) == L(ONE)
        assert iterate_type(L(nat(5)), []) == L(nat(5))
        with pytest.raises(NotBad):
            iterate_type(L(nat(5)), [o(1), o(3)])

    @given(seeds)
    def test_simplify_lowers_otype(self, seed):
        rng = random.Random(seed)
        a = random_type(rng)
        x = random_term(rng, a)
        if x is None:
            return
        assert otype(simplify_type(a, x)) < otype(a)

    @given(seeds)
    def test_e_reflects(self, seed):
        rng = random.Random(seed)
        a = random_type(rng)
        x, y, z = (random_term(rng, a) for _ in range(3))
        if x is None or leq_rterm(x, y) or leq_rterm(x, z):
            return
        ey, ez = e(a, x, y), e(a, x, z)
        target = simplify_type(a, x)
        assert is_term(target, ey) and is_term(target, ez)
        if leq_rterm(ey, ez):
            assert leq_rterm(y, z)


class TestTreeReification:
    def test_single_leaf(self):
        assert str(reify_tree_badseq([UNIT_LEAF], ONE)) == "phi(3,1)"

    def test_prefixes_descend(self):
        trees = [parse_tree(x) for x in ("(1 (1 . .) .)", "(1 . .)", "(0 (0 . .) .)", "(0 . .)")]
        values = reify_prefixes(trees, nat(2))
        assert len(values) == 4
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_not_bad(self):
        with pytest.raises(NotBad):
            reify_tree_badseq([UNIT_LEAF, parse_tree("(0 . .)")], ONE)
        with pytest.raises(NotBad):
            reify_tree_badseq([], ONE)

    def test_label_out_of_range(self):
        with pytest.raises(TypeMismatch):
            reify_tree_badseq([parse_tree("(3 . .)")], parse_ord("2"))

    def test_badseq_extend(self):
        bad = BadSeq((parse_tree("(1 . .)"),), leq_tree)
        assert len(bad.extend(parse_tree("(0 . .)"))) == 2
        with pytest.raises(NotBad):
            bad.extend(parse_tree("(1 (1 . .) .)"))
