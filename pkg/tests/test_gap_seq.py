import pytest
from hypothesis import assume, given

from gapwpo.errors import BoundMismatch, InputOutOfRange, NotDominated
from gapwpo.literals import parse_seq
from gapwpo.ordinals import nat
from gapwpo.orders import (
    GapSeq,
    GapVariant,
    higman_leq,
    leq,
    leq_g,
    leq_r,
    leq_s,
    leq_w,
    oracle_leq,
    shift_members,
    split_weak,
    unshift_members,
    witness_realizer,
)
from gapwpo.sampling import enum_seqs
from tests.strategies import chains, gap_seqs


def seq(text, bound=3):
    return parse_seq(text, nat(bound))


class TestGapSeq:
    def test_members_below_bound(self):
        with pytest.raises(InputOutOfRange):
            GapSeq((nat(3),), nat(3))

    def test_concat_and_slice(self):
        s = seq("[0,1]") + seq("[2]")
        assert s == seq("[0,1,2]")
        assert s[1:] == seq("[1,2]")
        assert s[0] == nat(0)

    def test_bounds_must_agree(self):
        with pytest.raises(BoundMismatch):
            leq_w(seq("[0]", 2), seq("[0]", 3))

    def test_shift_round_trip(self):
        s = seq("[0,2,1]")
        shifted = shift_members(nat(2), s, nat(5))
        assert shifted == seq("[2,4,3]", 5)
        assert unshift_members(nat(2), shifted, nat(3)) == s

    def test_enumeration_size(self):
        assert len(list(enum_seqs(3, 4))) == 121
        assert len(list(enum_seqs(2, 3))) == 15


class TestDeciders:
    def test_strong_examples(self):
        assert leq_s(seq("[1]"), seq("[1]"))
        assert not leq_s(seq("[1]", 2), seq("[0,1]", 2))
        assert leq_s(seq("[0,2]"), seq("[0,1,2]"))

    def test_weak_examples(self):
        assert leq_w(seq("[1]", 2), seq("[0,1]", 2))
        assert leq_w(seq("[0,2]"), seq("[0,1,2]"))
        assert not leq_w(seq("[2,2]"), seq("[2,1,2]"))

    def test_empty(self):
        for variant in GapVariant:
            assert leq(seq("[]"), seq("[]"), variant)
            assert oracle_leq(seq("[]"), seq("[]"), variant)
            assert not leq(seq("[0]"), seq("[]"), variant)

    def test_oracle_examples(self):
        assert not oracle_leq(seq("[1]", 2), seq("[0,1]", 2), GapVariant.STRONG_REALIZER)
        assert oracle_leq(seq("[0,2]"), seq("[0,1,2]"), GapVariant.STRONG_REALIZER)

    def test_witness(self):
        realizer = witness_realizer(seq("[0,2]"), seq("[0,1,2]"), GapVariant.WEAK)
        assert realizer.map == (1, 2)
        assert witness_realizer(seq("[2,2]"), seq("[2,1,2]"), GapVariant.WEAK) is None

    @given(gap_seqs(), gap_seqs())
    def test_variants_agree_with_oracle(self, s, t):
        for variant in GapVariant:
            assert leq(s, t, variant) == oracle_leq(s, t, variant)

    @given(gap_seqs(), gap_seqs())
    def test_reductions(self, s, t):
        assert leq_g(s, t) == leq_w(s, t)
        assert leq_r(s, t) == leq_s(s, t)
        zero = seq("[0]")
        assert leq_w(s, t) == leq_s(zero + s, zero + t) == leq_s(zero + s, seq("[2]") + t)

    @given(gap_seqs(), gap_seqs())
    def test_strong_implies_weak_implies_higman(self, s, t):
        if leq_s(s, t):
            assert leq_w(s, t)
        if leq_w(s, t):
            assert higman_leq(s.members, t.members, lambda x, y: x <= y)

    @given(chains(enum_seqs(3, 3), leq_w))
    def test_weak_transitive(self, chain):
        s, t, u = chain
        assert leq_w(s, u)


class TestSplitWeak:
    def test_example(self):
        assert split_weak(seq("[0,2]"), seq("[0,1]"), seq("[2]")) == (seq("[0]"), seq("[2]"))

    def test_empty(self):
        assert split_weak(seq("[]"), seq("[1]"), seq("[0]")) == (seq("[]"), seq("[]"))

    def test_not_dominated(self):
        with pytest.raises(NotDominated):
            split_weak(seq("[2,2]"), seq("[1]"), seq("[1]"))

    @given(gap_seqs(max_len=3), gap_seqs(max_len=3), gap_seqs(max_len=3))
    def test_split_postconditions(self, s, t_l, t_r):
        assume(leq_w(s, t_l + t_r))
        s_l, s_r = split_weak(s, t_l, t_r)
        assert s_l + s_r == s
        assert leq_w(s_l, t_l) and leq_w(s_r, t_r)
        if s_l.members:
            assert leq_s(s_r, t_r)
