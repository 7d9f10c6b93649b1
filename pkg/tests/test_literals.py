import pytest
from hypothesis import given

from gapwpo.errors import ParseError
from gapwpo.literals import infer_bound, parse_label, parse_members, parse_ord, parse_seq, parse_tree
from gapwpo.ordinals import OMEGA, ONE, add, nat
from gapwpo.orders import UNIT_LEAF, GapSeq, Leaf, Node
from tests.strategies import ordinals


class TestOrdinalLiterals:
    @pytest.mark.parametrize("text", [
        "0", "1", "7", "w", "w+1", "w*2+3", "w^2", "w^w^w", "w^(w+1)",
        "w^(w^w+1)", "phi(1,0)", "phi(2,w)", "phi(phi(1,0),0)",
    ])
    def test_canonical_text_round_trips(self, text):
        assert str(parse_ord(text)) == text

    def test_normalizes(self):
        assert str(parse_ord("2+w")) == "w"
        assert str(parse_ord("(w+1)*3")) == "w*3+1"
        assert str(parse_ord(" w ^ 2 + 1 ")) == "w^2+1"

    @given(ordinals(5))
    def test_printed_terms_parse_back(self, a):
        assert parse_ord(str(a)) == a

    @pytest.mark.parametrize("text", ["", "w+", "phi(1)", "(1 . .)", "x"])
    def test_rejects_garbage(self, text):
        with pytest.raises(ParseError) as info:
            parse_ord(text)
        assert 0 <= info.value.offset <= len(text.encode("utf-8"))


class TestSequenceLiterals:
    def test_members(self):
        assert parse_members("[]") == ()
        assert parse_members("[0, w, 1]") == (nat(0), OMEGA, ONE)

    def test_inferred_bound(self):
        s = parse_seq("[0,w,1]")
        assert s.bound == add(OMEGA, ONE)
        assert str(s) == "[0,w,1]"
        assert parse_seq("[]").bound == ONE

    def test_explicit_bound(self):
        assert parse_seq("[1]", nat(3)) == GapSeq((ONE,), nat(3))

    def test_infer_bound(self):
        assert infer_bound([nat(2), nat(0)]) == nat(3)


class TestTreeLiterals:
    def test_unit_leaf(self):
        assert parse_tree(".") == UNIT_LEAF

    def test_node(self):
        t = parse_tree("(0 (2 . .) .)")
        assert t == Node(nat(0), Node(nat(2), UNIT_LEAF, UNIT_LEAF), UNIT_LEAF)
        assert str(t) == "(0 (2 . .) .)"

    def test_labeled_leaves(self):
        assert parse_tree("leaf(w)") == Leaf(OMEGA)
        assert parse_tree("leaf(.)") == Leaf(UNIT_LEAF)
        assert str(parse_tree("(1 leaf(0) leaf(2))")) == "(1 leaf(0) leaf(2))"

    def test_label(self):
        assert parse_label("[0,1]") == GapSeq((nat(0), ONE), nat(2))
        assert parse_label("w") == OMEGA
