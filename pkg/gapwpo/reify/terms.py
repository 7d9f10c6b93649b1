"""
Reification terms, their heights and their orders.

Terms of B(b, A) are the ordinary ascending trees of gapwpo.orders with
terms of A as leaf labels, so the tree order is leq_tree with
leq_rterm on the leaves.
"""

from dataclasses import dataclass
from typing import Any, Tuple, Union

from gapwpo.errors import TypeMismatch
from gapwpo.ordinals import OrdTerm
from gapwpo.orders import LabTree, Leaf, Node, higman_leq, leq_tree
from gapwpo.reify.types import B, L, Prod, RType, Star, Sum


@dataclass(frozen=True)
class OrdElem:
    """An ordinal as a term of L(b)."""
    value: OrdTerm

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Inj:
    """Injection into the left (tag 0) or right (tag 1) summand."""
    tag: int
    value: "RTerm"

    def __str__(self) -> str:
        return f"i{self.tag}({self.value})"


@dataclass(frozen=True)
class PairTerm:
    left: "RTerm"
    right: "RTerm"

    def __str__(self) -> str:
        return f"<{self.left}, {self.right}>"


@dataclass(frozen=True)
class SeqTerm:
    items: Tuple["RTerm", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    def __str__(self) -> str:
        return "<" + ", ".join(str(x) for x in self.items) + ">"


RTerm = Union[OrdElem, Inj, PairTerm, SeqTerm, Leaf, Node]

EMPTY_SEQ = SeqTerm(())


def iota(index: int, value: RTerm) -> Inj:
    """
    Injection into the three-summand sum (X + Y) + Z.

    Index 0 and 1 go through the left summand, index 2 is the right one.
    """
    if index == 2:
        return Inj(1, value)
    return Inj(0, Inj(index, value))


def height(a: RTerm) -> int:
    if isinstance(a, OrdElem):
        return 0
    if isinstance(a, Leaf):
        return height(a.label) + 1
    if isinstance(a, Node):
        return height(a.left) + height(a.right) + 1
    if isinstance(a, Inj):
        return height(a.value) + 1
    if isinstance(a, PairTerm):
        return height(a.left) + height(a.right) + 1
    if isinstance(a, SeqTerm):
        return max((height(x) for x in a.items), default=0) + 1
    raise TypeMismatch(f"{a!r} is not a reification term")


def _is_tree(a: Any) -> bool:
    return isinstance(a, (Leaf, Node))


def leq_rterm(a: RTerm, b: RTerm) -> bool:
    """
    Compare two terms of the same type.

    Ordinals compare as ordinals, trees by embeddability, injections only
    within one summand, pairs componentwise and sequences by Higman's
    subsequence order.

    Raises:
        TypeMismatch: If the terms have different shapes
    """
    if isinstance(a, OrdElem) and isinstance(b, OrdElem):
        return a.value <= b.value
    if _is_tree(a) and _is_tree(b):
        return leq_tree(a, b, leq_rterm)
    if isinstance(a, Inj) and isinstance(b, Inj):
        return a.tag == b.tag and leq_rterm(a.value, b.value)
    if isinstance(a, PairTerm) and isinstance(b, PairTerm):
        return leq_rterm(a.left, b.left) and leq_rterm(a.right, b.right)
    if isinstance(a, SeqTerm) and isinstance(b, SeqTerm):
        return higman_leq(a.items, b.items, leq_rterm)
    raise TypeMismatch(f"cannot compare {a} with {b}")


def _check_tree(t: LabTree, bound: OrdTerm, leaf: RType) -> None:
    if isinstance(t, Leaf):
        check_term(leaf, t.label)
        return
    if not t.inner < bound:
        raise TypeMismatch(f"inner label {t.inner} is not below {bound}")
    _check_tree(t.left, bound, leaf)
    _check_tree(t.right, bound, leaf)


def check_term(a: RType, x: RTerm) -> None:
    """
    Check that x is a term of type a.

    Raises:
        TypeMismatch: Naming the offending subterm and type
    """
    if isinstance(a, L) and isinstance(x, OrdElem):
        if not x.value < a.bound:
            raise TypeMismatch(f"{x} is not below {a.bound}")
        return
    if isinstance(a, B) and _is_tree(x):
        _check_tree(x, a.bound, a.leaf)
        return
    if isinstance(a, Sum) and isinstance(x, Inj) and x.tag in (0, 1):
        check_term(a.left if x.tag == 0 else a.right, x.value)
        return
    if isinstance(a, Prod) and isinstance(x, PairTerm):
        check_term(a.left, x.left)
        check_term(a.right, x.right)
        return
    if isinstance(a, Star) and isinstance(x, SeqTerm):
        for item in x.items:
            check_term(a.elem, item)
        return
    raise TypeMismatch(f"{x} is not a term of type {a}")


def is_term(a: RType, x: RTerm) -> bool:
    try:
        check_term(a, x)
    except TypeMismatch:
        return False
    return True
