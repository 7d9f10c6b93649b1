"""
Binary trees with weakly ascending inner labels.

Inner labels are ordinals and every node label is at most every inner
label below it; the left-strict refinement additionally requires the
node label to be strictly below every inner label of its left subtree.
Leaf labels come from an arbitrary ordered alphabet; None is the single
label of the one-point alphabet.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple, Union

from gapwpo.errors import AlphabetMismatch, AscendingViolation
from gapwpo.ordinals import OrdTerm


@dataclass(frozen=True)
class Leaf:
    """A leaf x * []; label None is the unit leaf."""

    label: Any = None

    def __str__(self) -> str:
        if self.label is None:
            return "."
        return f"leaf({self.label})"


@dataclass(frozen=True)
class Node:
    """
    An inner node inner * [left, right].

    Attributes:
        inner: Node label, at most every inner label of both subtrees
        left: Left subtree
        right: Right subtree
    """

    inner: OrdTerm
    left: "LabTree"
    right: "LabTree"
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for side, child in (("left", self.left), ("right", self.right)):
            if isinstance(child, Node) and child.inner < self.inner:
                raise AscendingViolation(
                    f"{side} subtree label {child.inner} is below node label {self.inner}"
                )
        object.__setattr__(self, "_hash", hash((self.inner, self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return f"({self.inner} {self.left} {self.right})"


LabTree = Union[Leaf, Node]

UNIT_LEAF = Leaf()


def mk_node(b: OrdTerm, l: LabTree, r: LabTree, left_strict: bool = False) -> Node:
    """
    Validating node constructor.

    Args:
        b: Node label
        l: Left subtree
        r: Right subtree
        left_strict: Also require b below every inner label of l

    Raises:
        AscendingViolation: Naming the failed constraint and label
    """
    if left_strict and isinstance(l, Node) and not b < l.inner:
        raise AscendingViolation(
            f"left-strict: left subtree label {l.inner} is not above node label {b}"
        )
    return Node(b, l, r)


def is_left_strict(t: LabTree) -> bool:
    if isinstance(t, Leaf):
        return True
    if isinstance(t.left, Node) and not t.inner < t.left.inner:
        return False
    return is_left_strict(t.left) and is_left_strict(t.right)


def subtrees(t: LabTree) -> Iterator[LabTree]:
    """All subtrees, root first."""
    yield t
    if isinstance(t, Node):
        yield from subtrees(t.left)
        yield from subtrees(t.right)


def inner_labels(t: LabTree) -> List[OrdTerm]:
    return [u.inner for u in subtrees(t) if isinstance(u, Node)]


def leaf_labels(t: LabTree) -> List[Any]:
    return [u.label for u in subtrees(t) if isinstance(u, Leaf)]


def tree_size(t: LabTree) -> int:
    """Total number of nodes, leaves included."""
    if isinstance(t, Leaf):
        return 1
    return 1 + tree_size(t.left) + tree_size(t.right)


def map_inner(t: LabTree, fn: Callable[[OrdTerm], OrdTerm]) -> LabTree:
    """Apply fn to every inner label; fn must be monotone."""
    if isinstance(t, Leaf):
        return t
    return Node(fn(t.inner), map_inner(t.left, fn), map_inner(t.right, fn))


def default_leaf_leq(a: Any, b: Any) -> bool:
    """Compare leaf labels from the alphabets used by the library."""
    if a is None and b is None:
        return True
    if isinstance(a, OrdTerm) and isinstance(b, OrdTerm):
        return a <= b
    if isinstance(a, (Leaf, Node)) and isinstance(b, (Leaf, Node)):
        return leq_tree(a, b)
    raise AlphabetMismatch(f"cannot compare leaf labels {a!r} and {b!r}")


def leq_tree(s: LabTree, t: LabTree,
             leaf_leq: Optional[Callable[[Any, Any], bool]] = None) -> bool:
    """
    Decide tree embeddability.

    s <= t holds for leaves with comparable labels, when s embeds into a
    subtree of t, or when the root labels are comparable and the left and
    right subtrees embed componentwise.

    Args:
        s: Source tree
        t: Target tree
        leaf_leq: Leaf label order (defaults to default_leaf_leq)

    Returns:
        True if s <= t

    Raises:
        AlphabetMismatch: If leaf labels are incomparable
    """
    leaf_leq = leaf_leq or default_leaf_leq
    memo: Dict[Tuple[int, int], bool] = {}

    def go(u: LabTree, v: LabTree) -> bool:
        key = (id(u), id(v))
        if key in memo:
            return memo[key]
        if isinstance(v, Leaf):
            result = isinstance(u, Leaf) and leaf_leq(u.label, v.label)
        else:
            result = go(u, v.left) or go(u, v.right)
            if not result and isinstance(u, Node):
                result = u.inner <= v.inner and go(u.left, v.left) and go(u.right, v.right)
        memo[key] = result
        return result

    return go(s, t)
