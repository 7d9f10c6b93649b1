"""
Reification of bad sequences.

Types and terms, the simplified type A(a) with its embedding e, the
ordinal measure otype, and the reification of bad sequences of trees
into ordinals below phi(2 + alpha, 0).
"""

from gapwpo.reify.types import B, E, L, Prod, RType, Star, Sum, inhabited, otype, sum3
from gapwpo.reify.terms import (
    EMPTY_SEQ,
    Inj,
    OrdElem,
    PairTerm,
    RTerm,
    SeqTerm,
    check_term,
    height,
    iota,
    is_term,
    leq_rterm,
)
from gapwpo.reify.simplify import e, simplify_type
from gapwpo.reify.sequences import (
    BadSeq,
    first_good_pair,
    iterate_type,
    lift_unit_leaves,
    reify_prefixes,
    reify_tree_badseq,
)
from gapwpo.reify.generate import random_term, random_type

__all__ = [
    "B",
    "BadSeq",
    "E",
    "EMPTY_SEQ",
    "Inj",
    "L",
    "OrdElem",
    "PairTerm",
    "Prod",
    "RTerm",
    "RType",
    "SeqTerm",
    "Star",
    "Sum",
    "check_term",
    "e",
    "first_good_pair",
    "height",
    "inhabited",
    "iota",
    "is_term",
    "iterate_type",
    "leq_rterm",
    "lift_unit_leaves",
    "otype",
    "random_term",
    "random_type",
    "reify_prefixes",
    "reify_tree_badseq",
    "simplify_type",
    "sum3",
]
