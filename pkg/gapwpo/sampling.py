"""
Enumeration and random generation of ordinals, sequences and trees.

Enumerations are deterministic and ordered by size; random generators take
an explicit random.Random so that seeded runs are reproducible.
"""

import random
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple, Union

from gapwpo.errors import DomainExhausted
from gapwpo.ordinals import ZERO, OrdTerm, PrincipalTerm, nat
from gapwpo.ordinals.terms import cmp_principal
from gapwpo.orders import GapSeq, LabTree, Leaf, Node


def term_size(a: OrdTerm) -> int:
    """Syntactic size: 0 for zero, 1 + size(g) + size(d) per summand phi(g, d)."""
    return sum(1 + term_size(p.first) + term_size(p.second) for p in a.summands)


@lru_cache(maxsize=None)
def _principals_of_size(n: int) -> Tuple[PrincipalTerm, ...]:
    out = []
    for i in range(n):
        for g in terms_of_size(i):
            for d in terms_of_size(n - 1 - i):
                if len(d.summands) == 1 and d.summands[0].first > g:
                    continue
                out.append(PrincipalTerm(g, d))
    return tuple(out)


@lru_cache(maxsize=None)
def terms_of_size(n: int) -> Tuple[OrdTerm, ...]:
    """All normal-form terms of syntactic size exactly n."""
    if n == 0:
        return (ZERO,)
    out = []
    for k in range(1, n + 1):
        for p in _principals_of_size(k):
            for rest in terms_of_size(n - k):
                if rest.is_zero or cmp_principal(rest.summands[0], p) <= 0:
                    out.append(OrdTerm((p,) + rest.summands))
    return tuple(out)


def enum_ordinals(max_size: int, below: Optional[OrdTerm] = None) -> List[OrdTerm]:
    """
    All terms of size at most max_size, optionally restricted to those below a bound.

    Args:
        max_size: Largest syntactic size
        below: Exclusive upper bound (default: none)

    Returns:
        Terms ordered by size, then by generation order
    """
    out = []
    for n in range(max_size + 1):
        out.extend(a for a in terms_of_size(n) if below is None or a < below)
    return out


def members_below(bound: OrdTerm, max_size: int) -> List[OrdTerm]:
    """Candidate sequence members below bound, ascending."""
    if bound.is_finite:
        return [nat(i) for i in range(bound.finite_value())]
    return sorted(enum_ordinals(max_size, below=bound))


def enum_member_seqs(members: Sequence[OrdTerm], bound: OrdTerm,
                     max_len: int) -> Iterator[GapSeq]:
    """All sequences over the given members up to max_len, length-lexicographic."""
    for n in range(max_len + 1):
        for combo in product(members, repeat=n):
            yield GapSeq(combo, bound)


def enum_seqs(alphabet: int, max_len: int) -> Iterator[GapSeq]:
    """
    All sequences over {0, ..., alphabet-1} of length at most max_len.

    Sequences are yielded in length-lexicographic order with bound alphabet.

    Example:
        len(list(enum_seqs(3, 4))) -> 121
    """
    return enum_member_seqs([nat(i) for i in range(alphabet)], nat(alphabet), max_len)


def _labels(alphabet: Union[int, Sequence[OrdTerm]]) -> List[OrdTerm]:
    if isinstance(alphabet, int):
        return [nat(i) for i in range(alphabet)]
    return sorted(set(alphabet))


def enum_trees(alphabet: Union[int, Sequence[OrdTerm]], max_nodes: int,
               left_strict: bool = False,
               leaf_labels: Sequence[Any] = (None,)) -> Iterator[LabTree]:
    """
    All ascending trees with at most max_nodes nodes, leaves included.

    Trees come ordered by size, then root label, then left and right
    subtree in their own enumeration order.

    Args:
        alphabet: Number of inner labels, or the inner labels themselves
        max_nodes: Node cap, leaves counted
        left_strict: Only yield left-strict trees
        leaf_labels: Leaf alphabet (default: the unit leaf only)

    Example:
        list(enum_trees(2, 3, True)) -> [., (0 . .), (1 . .)]
    """
    labels = _labels(alphabet)
    leaves = tuple(Leaf(x) for x in leaf_labels)

    @lru_cache(maxsize=None)
    def of_size(n: int, lo: int) -> Tuple[LabTree, ...]:
        if n == 1:
            return leaves
        out = []
        for i in range(lo, len(labels)):
            left_lo = i + 1 if left_strict else i
            for ls in range(1, n - 1, 2):
                for left in of_size(ls, left_lo):
                    for right in of_size(n - 1 - ls, i):
                        out.append(Node(labels[i], left, right))
        return tuple(out)

    for n in range(1, max_nodes + 1, 2):
        yield from of_size(n, 0)


def random_ord(rng: random.Random, max_size: int, below: Optional[OrdTerm] = None) -> OrdTerm:
    """Uniform choice among the terms enum_ordinals would yield."""
    return rng.choice(_ordinal_pool(max_size, below))


@lru_cache(maxsize=64)
def _ordinal_pool(max_size: int, below: Optional[OrdTerm]) -> Tuple[OrdTerm, ...]:
    pool = tuple(enum_ordinals(max_size, below))
    if not pool:
        raise DomainExhausted(f"no terms of size <= {max_size} below {below}")
    return pool


def random_seq(rng: random.Random, members: Sequence[OrdTerm], bound: OrdTerm,
               max_len: int) -> GapSeq:
    n = rng.randint(0, max_len)
    if not members:
        n = 0
    return GapSeq(tuple(rng.choice(members) for _ in range(n)), bound)


def random_tree(rng: random.Random, alphabet: Union[int, Sequence[OrdTerm]],
                max_nodes: int, left_strict: bool = False,
                leaf_labels: Sequence[Any] = (None,)) -> LabTree:
    """
    Random ascending tree with at most max_nodes nodes.

    Inner labels are drawn at or above the parent label (strictly above on
    left children of left-strict trees); a branch closes with a leaf when
    no label or node budget remains.
    """
    labels = _labels(alphabet)

    def grow(budget: int, lo: int) -> LabTree:
        if budget < 3 or lo >= len(labels) or rng.random() < 0.3:
            return Leaf(rng.choice(leaf_labels))
        i = rng.randrange(lo, len(labels))
        left_budget = rng.randrange(1, budget - 1)
        left = grow(left_budget, i + 1 if left_strict else i)
        right = grow(budget - 1 - left_budget, i)
        return Node(labels[i], left, right)

    return grow(max_nodes, 0)


def shrink_seq(s: GapSeq) -> Iterator[GapSeq]:
    """Sequences with one member deleted."""
    for i in range(len(s)):
        yield GapSeq(s.members[:i] + s.members[i + 1:], s.bound)


def shrink_tree(t: LabTree) -> Iterator[LabTree]:
    """Trees with one node replaced by one of its children."""
    if isinstance(t, Leaf):
        return
    yield t.left
    yield t.right
    for left in shrink_tree(t.left):
        yield Node(t.inner, left, t.right)
    for right in shrink_tree(t.right):
        yield Node(t.inner, t.left, right)


def shrink_ord(a: OrdTerm) -> Iterator[OrdTerm]:
    """The term with its last summand dropped."""
    if not a.is_zero:
        yield OrdTerm(a.summands[:-1])


def shrink_value(x: Any) -> Iterator[Any]:
    """Shrink candidates of a sequence, tree or ordinal; none for anything else."""
    if isinstance(x, GapSeq):
        return shrink_seq(x)
    if isinstance(x, (Leaf, Node)):
        return shrink_tree(x)
    if isinstance(x, OrdTerm):
        return shrink_ord(x)
    return iter(())


def minimize_args(still_fails: Callable[..., bool], args: Sequence[Any]) -> Tuple[Any, ...]:
    """
    Greedily shrink a failing argument tuple.

    Arguments are tried left to right; the first shrink candidate on which
    still_fails holds replaces its argument and the scan restarts. Stops
    when no candidate of any argument keeps the failure.

    Example:
        minimize_args(lambda s: nat(2) in s.members, (parse_seq("[0,2,1]", nat(3)),))
        # Returns a 1-tuple holding the sequence [2]
    """
    current = list(args)
    changed = True
    while changed:
        changed = False
        for i, x in enumerate(current):
            for cand in shrink_value(x):
                trial = current[:i] + [cand] + current[i + 1:]
                if still_fails(*trial):
                    current, changed = trial, True
                    break
            if changed:
                break
    return tuple(current)
