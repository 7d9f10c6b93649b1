"""
Quasi-embeddings between gap-sequence orders and into trees.

Covers the weak/strong transfers, the minimum-split map from weak gap
sequences to left-strict trees, and the two strong-gap decompositions
used for the upper bounds.
"""

from typing import List, Tuple

from gapwpo.embeddings.base import Pair, Tagged
from gapwpo.errors import NotInfiniteBound, PreconditionViolated
from gapwpo.ordinals import ONE, OrdTerm, add, cnf_head, lsub, nat, omega_pow
from gapwpo.orders import UNIT_LEAF, GapSeq, LabTree, leq_w, mk_node


def seq_to_tree(s: GapSeq) -> LabTree:
    """
    Split a sequence at the first occurrence of its minimum.

    The minimum becomes the root label, the part before it the left
    subtree and the part after it the right subtree. All members before
    the first minimum are strictly larger, so the result is left-strict.

    Example:
        seq_to_tree([2,0,1,0,3]) -> (0 (2 . .) (0 (1 . .) (3 . .)))
    """
    return _members_to_tree(s.members)


def _members_to_tree(members: Tuple[OrdTerm, ...]) -> LabTree:
    if not members:
        return UNIT_LEAF
    beta = min(members)
    k = members.index(beta)
    return mk_node(beta, _members_to_tree(members[:k]), _members_to_tree(members[k + 1:]),
                   left_strict=True)


def weak_to_strong(s: GapSeq) -> GapSeq:
    """The identity, read as a map from the weak into the strong order."""
    return s


def strong_to_weak(s: GapSeq) -> GapSeq:
    """Prepend the top element of the enlarged bound alpha + 1."""
    top = s.bound
    return GapSeq((top,) + s.members, add(top, ONE))


def strong_decompose_fin(s: GapSeq) -> Pair:
    """
    Split a strong gap sequence over n + 1 at its first zero.

    Returns:
        Pair of the positive prefix shifted down by one (bound n) and the
        remainder (bound n + 1), which is empty or starts with 0

    Raises:
        PreconditionViolated: If the bound is not a positive natural number

    Example:
        strong_decompose_fin([1,2,0,1] over 3) -> ([0,1], [0,1])
    """
    if not s.bound.is_finite or s.bound.is_zero:
        raise PreconditionViolated(f"bound {s.bound} is not of the form n+1")
    n = s.bound.finite_value() - 1
    k = _first_zero(s.members)
    prefix = tuple(lsub(ONE, x) for x in s.members[:k])
    return Pair(GapSeq(prefix, nat(n)), s[k:])


def _first_zero(members: Tuple[OrdTerm, ...]) -> int:
    for i, x in enumerate(members):
        if x.is_zero:
            return i
    return len(members)


def strong_decompose_inf(s: GapSeq) -> Pair:
    """
    Decompose a strong gap sequence over an infinite bound w^g + d.

    The maximal prefix of members >= w^g, shifted down by w^g, lands
    under bound d. The rest starts below w^g and is encoded as a finite
    word over two kinds of letters: i0 carries a weak gap sequence under
    the original bound, i1 carries an ordinal below -1 + g.

    Raises:
        NotInfiniteBound: If the bound is finite
    """
    if s.bound.is_finite:
        raise NotInfiniteBound(f"bound {s.bound} is finite")
    gamma, delta = cnf_head(s.bound)
    head = omega_pow(gamma)
    k = 0
    while k < len(s) and s[k] >= head:
        k += 1
    prefix = GapSeq(tuple(lsub(head, x) for x in s.members[:k]), delta)
    return Pair(prefix, tuple(encode_low_start(s.members[k:], s.bound)))


def encode_low_start(members: Tuple[OrdTerm, ...], bound: OrdTerm) -> List[Tagged]:
    """
    Letter encoding of a sequence starting below the head of its bound.

    Peels one letter at a time: a zero splits off everything from the
    first zero as an i0 letter and continues on the shifted positive
    prefix; a positive finite minimum emits i0([]) and shifts by one; an
    infinite minimum w^r + ... emits i1(-1 + r) and shifts by w^r.
    """
    out: List[Tagged] = []
    while members:
        k = _first_zero(members)
        if k < len(members):
            out.append(Tagged(0, GapSeq(members[k:], bound)))
            members = tuple(lsub(ONE, x) for x in members[:k])
            continue
        rho = min(members)
        if rho.is_finite:
            out.append(Tagged(0, GapSeq((), bound)))
            members = tuple(lsub(ONE, x) for x in members)
            continue
        rho0, _ = cnf_head(rho)
        out.append(Tagged(1, lsub(ONE, rho0)))
        shift = omega_pow(rho0)
        members = tuple(lsub(shift, x) for x in members)
    return out


def decompose_inf_letter_leq(a: Tagged, b: Tagged) -> bool:
    """Letter order of the infinite decomposition: weak order on i0, ordinals on i1."""
    if a.tag != b.tag:
        return False
    if a.tag == 0:
        return leq_w(a.value, b.value)
    return a.value <= b.value
