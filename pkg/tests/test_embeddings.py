import random

import pytest

from gapwpo.embeddings import (
    EMBEDDING_NAMES,
    Caps,
    EmbedFn,
    Pair,
    Tagged,
    bullet_to_weak,
    get_embedding,
    phi_to_gapseq,
    seq_domain,
    seq_to_tree,
    show,
    strong_decompose_fin,
    strong_decompose_inf,
    strong_to_weak,
    tree_label_split,
    zeros_embed,
)
from gapwpo.embeddings import domains
from gapwpo.errors import DomainExhausted, GapWpoError, NotInfiniteBound, PreconditionViolated, UnknownEmbedding, ZeroBound
from gapwpo.harness import check_reflection
from gapwpo.literals import parse_ord, parse_seq
from gapwpo.ordinals import OMEGA, ONE, ZERO, nat
from gapwpo.orders import UNIT_LEAF, GapSeq, Leaf, is_left_strict, leq_w

SMALL = Caps(alphabet=2, max_len=3, max_nodes=5, max_term_size=4)


def seq(text, bound):
    return parse_seq(text, parse_ord(bound))


def members(*xs):
    return tuple(nat(x) for x in xs)


class TestSequenceMaps:
    def test_seq_to_tree(self):
        t = seq_to_tree(seq("[2,0,1,0,3]", "4"))
        assert str(t) == "(0 (2 . .) (0 (1 . .) (3 . .)))"
        assert is_left_strict(t)

    def test_seq_to_tree_empty(self):
        assert seq_to_tree(seq("[]", "3")) == UNIT_LEAF

    def test_strong_to_weak(self):
        assert strong_to_weak(seq("[2,0,1]", "3")) == GapSeq(members(3, 2, 0, 1), nat(4))

    def test_decompose_fin(self):
        got = strong_decompose_fin(seq("[1,2,0,1]", "3"))
        assert got == Pair(GapSeq(members(0, 1), nat(2)), GapSeq(members(0, 1), nat(3)))

    def test_decompose_fin_needs_finite_bound(self):
        with pytest.raises(PreconditionViolated):
            strong_decompose_fin(seq("[0]", "w"))

    def test_decompose_inf(self):
        got = strong_decompose_inf(seq("[2,0,1]", "w"))
        assert got.left == GapSeq((), ZERO)
        assert got.right == (
            Tagged(0, GapSeq(members(0, 1), OMEGA)),
            Tagged(0, GapSeq((), OMEGA)),
            Tagged(0, GapSeq(members(0), OMEGA)),
        )
        assert show(got) == "([], [i0([0,1]),i0([]),i0([0])])"

    def test_decompose_inf_needs_infinite_bound(self):
        with pytest.raises(NotInfiniteBound):
            strong_decompose_inf(seq("[0]", "3"))


class TestLowerBounds:
    def test_phi_to_gapseq(self):
        assert phi_to_gapseq(nat(2), ONE) == GapSeq(members(1, 0, 1), OMEGA)

    def test_strong_lower_base(self):
        f = get_embedding("strong-lower-base")
        assert show(f(parse_ord("w*2+3"))) == "[1,3,0,3]"

    def test_strong_lower_combine(self):
        f = get_embedding("strong-lower-combine", alpha="w")
        assert show(f(parse_ord("w+3"))) == "[w+1,0,3]"


class TestBulletMaps:
    def test_stage(self):
        f = get_embedding("bullet-stage", n="2")
        assert f(parse_ord("w*2+3")) == GapSeq(members(0, 0, 0, 1, 0, 0, 1), nat(2))

    def test_to_weak(self):
        f = bullet_to_weak(zeros_embed(3), nat(3), ONE)
        assert f(seq("[2,1]", "3")) == GapSeq(members(1, 1, 0, 1, 0), nat(2))

    def test_nat_to_bullet(self):
        f = get_embedding("nat-to-bullet")
        assert f(nat(3)) == GapSeq((ZERO,) * 3, ONE)
        assert f.reflects(nat(4), nat(3))


class TestTreeMaps:
    def test_label_split_leaf(self):
        assert tree_label_split(UNIT_LEAF, nat(3)) == Leaf(UNIT_LEAF)
        assert str(tree_label_split(UNIT_LEAF, nat(3))) == "leaf(.)"

    def test_label_split_zero_bound(self):
        with pytest.raises(ZeroBound):
            tree_label_split(UNIT_LEAF, ZERO)


class TestDomains:
    def test_empty_filter_exhausts(self, monkeypatch):
        monkeypatch.setattr(domains, "MAX_REJECTIONS", 20)
        empty = seq_domain(nat(3), SMALL, where=lambda s: False)
        with pytest.raises(DomainExhausted, match="after 20 draws"):
            empty.sample(random.Random(0))

    def test_exhaustion_is_library_error(self, monkeypatch):
        monkeypatch.setattr(domains, "MAX_REJECTIONS", 5)
        empty = seq_domain(nat(3), SMALL, where=lambda s: False)
        with pytest.raises(GapWpoError):
            empty.sample(random.Random(1))


class TestRegistry:
    def test_every_name_builds(self):
        for name in EMBEDDING_NAMES:
            assert get_embedding(name, SMALL).domain.description

    def test_unknown_name(self):
        with pytest.raises(UnknownEmbedding, match="Valid embeddings"):
            get_embedding("no-such-map")

    def test_unknown_name_is_value_error(self):
        with pytest.raises(ValueError):
            get_embedding("no-such-map")


class TestReflection:
    @pytest.mark.parametrize("name", ["seq-to-tree", "weak-to-strong", "strong-to-weak"])
    def test_exhaustive(self, name):
        report = check_reflection(get_embedding(name, SMALL), exhaustive=True)
        assert report.passed, report.lines()
        assert report.cases > 0

    def test_collapse_is_caught(self):
        collapse = EmbedFn("collapse", lambda s: GapSeq((), nat(3)), leq_w, leq_w,
                           seq_domain(nat(3), Caps(max_len=2)))
        report = check_reflection(collapse, exhaustive=True)
        assert not report.passed
        assert report.failures[0] == "collapse [0] [] -> [] []"
        assert report.lines()[0] == "FAIL reflection collapse [0] [] -> [] []"
