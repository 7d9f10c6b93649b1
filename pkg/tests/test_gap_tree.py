import pytest
from hypothesis import given

from gapwpo.errors import AlphabetMismatch, AscendingViolation
from gapwpo.literals import parse_tree
from gapwpo.ordinals import ONE, ZERO, add, nat
from gapwpo.orders import (
    UNIT_LEAF,
    Leaf,
    Node,
    inner_labels,
    is_left_strict,
    leaf_labels,
    leq_tree,
    map_inner,
    mk_node,
    subtrees,
    tree_size,
)
from gapwpo.sampling import enum_trees, shrink_tree
from tests.strategies import trees


def node(b, left=UNIT_LEAF, right=UNIT_LEAF):
    return Node(nat(b), left, right)


class TestConstruction:
    def test_mk_node(self):
        assert mk_node(ZERO, UNIT_LEAF, UNIT_LEAF) == node(0)

    def test_descending_child_rejected(self):
        with pytest.raises(AscendingViolation):
            mk_node(ONE, node(0), UNIT_LEAF)

    def test_left_strict_rejects_equal_label(self):
        with pytest.raises(AscendingViolation):
            mk_node(ZERO, node(0), UNIT_LEAF, left_strict=True)
        assert mk_node(ZERO, node(1), UNIT_LEAF, left_strict=True) == node(0, node(1))

    def test_measures(self):
        t = parse_tree("(0 (1 . .) leaf(2))")
        assert tree_size(t) == 5
        assert inner_labels(t) == [nat(0), nat(1)]
        assert leaf_labels(t) == [None, None, nat(2)]
        assert len(list(subtrees(t))) == 5

    def test_enumeration(self):
        assert [str(t) for t in enum_trees(2, 3, True)] == [".", "(0 . .)", "(1 . .)"]
        assert len(list(enum_trees(2, 3))) == 3
        assert all(is_left_strict(t) for t in enum_trees(3, 7, True))


class TestEmbedding:
    def test_leaf_below_everything(self):
        for t in enum_trees(2, 5):
            assert leq_tree(UNIT_LEAF, t)

    def test_descends_into_subtree(self):
        assert leq_tree(node(1), node(0, node(1)))
        assert not leq_tree(node(0, node(1)), node(1))

    def test_root_labels_compared(self):
        assert leq_tree(node(0), node(1))
        assert not leq_tree(node(1), node(0))

    def test_leaf_labels(self):
        assert leq_tree(Leaf(nat(1)), Leaf(nat(2)))
        assert not leq_tree(Leaf(nat(2)), node(0, Leaf(nat(1)), Leaf(nat(0))))
        with pytest.raises(AlphabetMismatch):
            leq_tree(Leaf(nat(1)), Leaf("a"))

    @given(trees())
    def test_reflexive(self, t):
        assert leq_tree(t, t)

    @given(trees())
    def test_subtrees_embed(self, t):
        for u in subtrees(t):
            assert leq_tree(u, t)

    @given(trees(left_strict=True))
    def test_left_strict_hereditary(self, t):
        assert all(is_left_strict(u) for u in subtrees(t))

    @given(trees())
    def test_raising_labels_dominates(self, t):
        assert leq_tree(t, map_inner(t, lambda b: add(b, ONE)))

    @given(trees())
    def test_shrinks_embed(self, t):
        for u in shrink_tree(t):
            assert leq_tree(u, t)
