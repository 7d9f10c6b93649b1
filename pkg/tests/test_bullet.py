import pytest
from hypothesis import assume, given

from gapwpo.errors import AlphabetMismatch
from gapwpo.literals import parse_seq
from gapwpo.ordinals import nat
from gapwpo.orders import bullet_leq, bullet_leq_members, higman_leq
from gapwpo.sampling import enum_seqs
from tests.strategies import chains, gap_seqs


def seq(text, bound=2):
    return parse_seq(text, nat(bound))


class TestBulletOrder:
    def test_rule_iv_witness(self):
        s, t = seq("[0,0,1]"), seq("[1,1]")
        assert bullet_leq(s, t)
        assert not higman_leq(s.members, t.members, lambda x, y: x <= y)

    def test_order_matters(self):
        assert not bullet_leq(seq("[1,0]"), seq("[0,1]"))

    def test_unary_words(self):
        assert not bullet_leq(seq("[0,0,0,0]", 1), seq("[0,0,0]", 1))
        assert bullet_leq(seq("[0,0,0]", 1), seq("[0,0,0,0]", 1))

    def test_alphabets_must_agree(self):
        with pytest.raises(AlphabetMismatch):
            bullet_leq(seq("[0]", 1), seq("[0]", 2))

    def test_generic_alphabet(self):
        assert bullet_leq_members("aab", "bb")
        assert not bullet_leq_members("ba", "ab")

    @given(gap_seqs(max_len=3), gap_seqs(max_len=3))
    def test_extends_higman(self, s, t):
        if higman_leq(s.members, t.members, lambda x, y: x <= y):
            assert bullet_leq(s, t)

    @given(chains(enum_seqs(2, 3), bullet_leq))
    def test_transitive(self, chain):
        s, t, u = chain
        assert bullet_leq(s, u)

    @given(gap_seqs(max_len=3), gap_seqs(max_len=2), gap_seqs(max_len=2))
    def test_split(self, s, t_l, t_r):
        assume(bullet_leq(s, t_l + t_r))
        assert any(bullet_leq(s[:k], t_l) and bullet_leq(s[k:], t_r) for k in range(len(s) + 1))
