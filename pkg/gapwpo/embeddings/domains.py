"""
Domain descriptors for the common carriers.
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Sequence

from gapwpo.embeddings.base import Domain
from gapwpo.errors import DomainExhausted
from gapwpo.literals import parse_ord, parse_seq, parse_tree
from gapwpo.ordinals import OrdTerm
from gapwpo.orders import GapSeq, LabTree, Leaf, Node, inner_labels, is_left_strict, leaf_labels
from gapwpo.sampling import (
    enum_member_seqs,
    enum_ordinals,
    enum_trees,
    members_below,
    random_ord,
    random_seq,
    random_tree,
    shrink_ord,
    shrink_seq,
    shrink_tree,
)


@dataclass(frozen=True)
class Caps:
    """
    Size caps for generated inputs.

    Attributes:
        alphabet: Default finite bound for members and inner labels
        max_len: Longest generated sequence
        max_nodes: Largest generated tree, leaves counted
        max_term_size: Largest syntactic size of generated ordinals
    """
    alphabet: int = 3
    max_len: int = 4
    max_nodes: int = 7
    max_term_size: int = 6

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "Caps":
        return cls(
            alphabet=config.get("alphabet", 3),
            max_len=config.get("max_len", 4),
            max_nodes=config.get("max_nodes", 7),
            max_term_size=config.get("max_term_size", 6),
        )


MAX_REJECTIONS = 10_000


def _rejection(draw: Callable[[], Any], keep: Callable[[Any], bool]) -> Any:
    for _ in range(MAX_REJECTIONS):
        x = draw()
        if keep(x):
            return x
    raise DomainExhausted(f"no admissible element after {MAX_REJECTIONS} draws")


def ordinal_domain(below: OrdTerm, caps: Caps) -> Domain:
    """Ordinals below a bound, as far as the term-size cap reaches."""
    return Domain(
        description=f"ordinals below {below}",
        sample=lambda rng: random_ord(rng, caps.max_term_size, below),
        contains=lambda a: isinstance(a, OrdTerm) and a < below,
        enumerate=lambda: enum_ordinals(caps.max_term_size, below),
        shrink=shrink_ord,
        read=parse_ord,
    )


def seq_domain(bound: OrdTerm, caps: Caps,
               where: Optional[Callable[[GapSeq], bool]] = None) -> Domain:
    """Gap sequences under a bound, optionally filtered."""
    members = members_below(bound, caps.max_term_size)
    keep = where or (lambda s: True)

    def sample(rng):
        return _rejection(lambda: random_seq(rng, members, bound, caps.max_len), keep)

    return Domain(
        description=f"sequences below {bound}",
        sample=sample,
        contains=lambda s: isinstance(s, GapSeq) and s.bound == bound and keep(s),
        enumerate=lambda: (s for s in enum_member_seqs(members, bound, caps.max_len) if keep(s)),
        shrink=shrink_seq,
        read=lambda text: parse_seq(text, bound),
    )


def tree_domain(bound: OrdTerm, caps: Caps, left_strict: bool = False,
                leaves: Sequence[Any] = (None,),
                where: Optional[Callable[[LabTree], bool]] = None) -> Domain:
    """Ascending trees with inner labels below a bound and the given leaf alphabet."""
    labels = members_below(bound, caps.max_term_size)
    keep = where or (lambda t: True)
    leaf_set = set(leaves)

    def contains(t) -> bool:
        if not isinstance(t, (Leaf, Node)):
            return False
        if any(not b < bound for b in inner_labels(t)):
            return False
        if any(x not in leaf_set for x in leaf_labels(t)):
            return False
        if left_strict and not is_left_strict(t):
            return False
        return keep(t)

    def sample(rng):
        return _rejection(lambda: random_tree(rng, labels, caps.max_nodes, left_strict, leaves),
                          keep)

    return Domain(
        description=f"trees below {bound}" + (" (left-strict)" if left_strict else ""),
        sample=sample,
        contains=contains,
        enumerate=lambda: (t for t in enum_trees(labels, caps.max_nodes, left_strict, leaves)
                           if keep(t)),
        shrink=shrink_tree,
        read=parse_tree,
    )
