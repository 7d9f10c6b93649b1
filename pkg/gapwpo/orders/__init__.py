"""
Orders on sequences and trees.

Gap-condition sequence orders, the bullet order and ascending-label
binary trees with their embeddability order.
"""

from gapwpo.orders.gap_seq import (
    GapSeq,
    GapVariant,
    Realizer,
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
from gapwpo.orders.gap_tree import (
    UNIT_LEAF,
    LabTree,
    Leaf,
    Node,
    default_leaf_leq,
    inner_labels,
    is_left_strict,
    leaf_labels,
    leq_tree,
    map_inner,
    mk_node,
    subtrees,
    tree_size,
)
from gapwpo.orders.bullet import bullet_leq, bullet_leq_members

__all__ = [
    "GapSeq",
    "GapVariant",
    "LabTree",
    "Leaf",
    "Node",
    "Realizer",
    "UNIT_LEAF",
    "bullet_leq",
    "bullet_leq_members",
    "default_leaf_leq",
    "higman_leq",
    "inner_labels",
    "is_left_strict",
    "leaf_labels",
    "leq",
    "leq_g",
    "leq_r",
    "leq_s",
    "leq_tree",
    "leq_w",
    "map_inner",
    "mk_node",
    "oracle_leq",
    "shift_members",
    "split_weak",
    "subtrees",
    "tree_size",
    "unshift_members",
    "witness_realizer",
]
