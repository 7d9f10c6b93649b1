"""
Bad sequences and their reification.

A finite sequence is bad when no earlier element is <= a later one.
Iterating simplify_type along a bad sequence gives a type whose otype
strictly drops with every extension, so infinite bad sequences cannot
exist.
"""

from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple

from gapwpo.errors import NotBad
from gapwpo.ordinals import OrdTerm
from gapwpo.orders import LabTree, Leaf, Node, leq_tree
from gapwpo.reify.simplify import e, simplify_type
from gapwpo.reify.terms import EMPTY_SEQ, RTerm, check_term, leq_rterm
from gapwpo.reify.types import B, E, RType, Star, otype


def first_good_pair(elements: Sequence[Any],
                    leq: Callable[[Any, Any], bool]) -> Optional[Tuple[int, int]]:
    """The first (i, j) with i < j and elements[i] <= elements[j], if any."""
    for j in range(len(elements)):
        for i in range(j):
            if leq(elements[i], elements[j]):
                return i, j
    return None


@dataclass(frozen=True)
class BadSeq:
    """
    A nonempty finite bad sequence.

    Attributes:
        elements: The sequence
        leq: Order on the carrier

    Raises:
        NotBad: If elements is empty or has i < j with elements[i] <= elements[j]
    """
    elements: Tuple[Any, ...]
    leq: Callable[[Any, Any], bool]

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise NotBad("a bad sequence must be nonempty")
        pair = first_good_pair(elements, self.leq)
        if pair is not None:
            i, j = pair
            raise NotBad(f"element {i} ({elements[i]}) is <= element {j} ({elements[j]})")
        object.__setattr__(self, "elements", elements)

    def __len__(self) -> int:
        return len(self.elements)

    def extend(self, x: Any) -> "BadSeq":
        return BadSeq(self.elements + (x,), self.leq)


def iterate_type(a: RType, s: Sequence[RTerm]) -> RType:
    """
    The type a[s]: simplify by the head, map the rest with e, repeat.

    Args:
        a: A type
        s: A finite bad sequence of terms of a (may be empty)

    Returns:
        a itself for the empty sequence, otherwise a(s0)[e(s0, s1), ...]

    Raises:
        NotBad: If s, or one of the derived sequences, is not bad
        TypeMismatch: If an element is not a term of a
    """
    elements: List[RTerm] = list(s)
    for x in elements:
        check_term(a, x)
    while elements:
        pair = first_good_pair(elements, leq_rterm)
        if pair is not None:
            raise NotBad(f"elements {pair[0]} and {pair[1]} form a good pair over {a}")
        head = elements[0]
        elements = [e(a, head, x) for x in elements[1:]]
        a = simplify_type(a, head)
    return a


def lift_unit_leaves(t: LabTree) -> LabTree:
    """Relabel every unit leaf by the empty sequence, a term of E*."""
    if isinstance(t, Leaf):
        return Leaf(EMPTY_SEQ) if t.label is None else t
    return Node(t.inner, lift_unit_leaves(t.left), lift_unit_leaves(t.right))


def reify_tree_badseq(trees: Sequence[LabTree], alpha: OrdTerm) -> OrdTerm:
    """
    Reify a bad sequence of unit-leaf trees with labels below alpha.

    The value drops strictly whenever the sequence is extended and stays
    bad.

    Args:
        trees: Nonempty bad sequence under leq_tree
        alpha: Bound on the inner labels

    Returns:
        otype of B(alpha, E*) iterated along the lifted trees

    Raises:
        NotBad: If trees is empty or not bad
        TypeMismatch: If a label is not below alpha

    Example:
        reify_tree_badseq([.], 1) -> phi(3,1)
    """
    BadSeq(tuple(trees), leq_tree)
    top = B(alpha, Star(E()))
    return otype(iterate_type(top, [lift_unit_leaves(t) for t in trees]))


def reify_prefixes(trees: Sequence[LabTree], alpha: OrdTerm) -> List[OrdTerm]:
    """reify_tree_badseq of every nonempty prefix, shortest first."""
    return [reify_tree_badseq(trees[:k], alpha) for k in range(1, len(trees) + 1)]
