"""
Quasi-embeddings of ordinals into sequences and trees.

Each map turns an ordinal into a witness in the target order by recursion
on its normal form, so that the ordinal's size bounds the target's
maximal order type from below.
"""

from enum import Enum
from typing import Callable, Optional, Tuple

from gapwpo.embeddings.base import EmbedFn, ord_leq
from gapwpo.embeddings.domains import Caps, ordinal_domain
from gapwpo.errors import (
    ExcludedValueInRange,
    IndexOutOfRange,
    InputOutOfRange,
    RangePropertyViolated,
)
from gapwpo.ordinals import (
    ONE,
    ZERO,
    OrdTerm,
    add,
    base_decompose,
    cnf_head,
    ldiv,
    lsub,
    mk_phi,
    mul,
    omega_pow,
    pow,
)
from gapwpo.orders import UNIT_LEAF, GapSeq, LabTree, Leaf, Node, leq_s, leq_tree, leq_w, map_inner


class VeblenTarget(Enum):
    SEQ = "seq"
    TREE = "tree"


Members = Tuple[OrdTerm, ...]


def _shift(beta: OrdTerm, members: Members) -> Members:
    return tuple(add(beta, x) for x in members)


def _seq_image(sigma: OrdTerm, alpha: OrdTerm,
               top: Optional[Callable[[OrdTerm], Members]]) -> Members:
    if sigma.is_zero:
        return (ZERO,)
    if len(sigma.summands) > 1:
        head = OrdTerm(sigma.summands[:1])
        rest = OrdTerm(sigma.summands[1:])
        return _seq_image(head, alpha, top) + (ZERO,) + _seq_image(rest, alpha, top)
    p = sigma.summands[0]
    if p.first < alpha:
        return _shift(omega_pow(p.first), _seq_image(p.second, alpha, top))
    if p.first == alpha and top is not None:
        return _shift(omega_pow(alpha), top(p.second))
    raise IndexOutOfRange(f"index {p.first} of {sigma} is not below {alpha}")


def phi_to_gapseq(x: OrdTerm, alpha: OrdTerm) -> GapSeq:
    """
    Embed an ordinal below phi(alpha, 0) into weak gap sequences below w^alpha.

    0 goes to [0], a sum x0 + rest to image(x0) * [0] * image(rest), and
    phi(b, y) to image(y) with w^b added to every member.

    Raises:
        IndexOutOfRange: If some Veblen index of x is not below alpha

    Example:
        phi_to_gapseq(2, 1) -> [1,0,1]
    """
    return GapSeq(_seq_image(x, alpha, None), omega_pow(alpha))


def _tree_image(sigma: OrdTerm, alpha: OrdTerm,
                top: Optional[Callable[[OrdTerm], LabTree]]) -> LabTree:
    if sigma.is_zero:
        return Node(ZERO, UNIT_LEAF, UNIT_LEAF)
    p = sigma.summands[0]
    if len(sigma.summands) == 1 and not p.first.is_zero:
        gamma = lsub(ONE, p.first)
        if gamma < alpha:
            shift = omega_pow(gamma)
            return map_inner(_tree_image(p.second, alpha, top), lambda b: add(shift, b))
        if gamma == alpha and top is not None:
            shift = omega_pow(alpha)
            return map_inner(top(p.second), lambda b: add(shift, b))
        raise IndexOutOfRange(f"index {p.first} of {sigma} is not below 1 + {alpha}")
    gamma, delta = cnf_head(sigma)
    return Node(ZERO, _tree_image(gamma, alpha, top), _tree_image(delta, alpha, top))


def veblen_lower(f: EmbedFn, alpha: OrdTerm, target: VeblenTarget, beta: OrdTerm,
                 rho: OrdTerm, caps: Caps = Caps()) -> EmbedFn:
    """
    Extend an embedding of beta to the Veblen value phi(alpha, beta) or phi(1 + alpha, beta).

    Args:
        f: Embedding of beta into nonempty weak gap sequences below rho
            (SEQ) or into trees below rho other than the bare leaf (TREE)
        alpha: Top index handled by f
        target: SEQ for weak gap sequences below w^alpha + rho, TREE for
            trees with labels below w^alpha + rho
        beta: Domain bound of f
        rho: Target bound of f
        caps: Size caps for the domain descriptor

    Returns:
        EmbedFn on ordinals below phi(alpha, beta) (SEQ) or
        phi(1 + alpha, beta) (TREE)

    Raises:
        IndexOutOfRange: From the returned map, for indices above alpha
        InputOutOfRange: From the returned map, when f is needed outside beta
        ExcludedValueInRange: From the returned map, when f yields the
            excluded value
    """
    bound = add(omega_pow(alpha), rho)

    def checked(delta: OrdTerm):
        if not delta < beta:
            raise InputOutOfRange(f"{delta} is outside the domain {beta} of {f.name}")
        return f(delta)

    if target is VeblenTarget.SEQ:
        def top_seq(delta: OrdTerm) -> Members:
            image = checked(delta)
            if not image.members:
                raise ExcludedValueInRange(f"{f.name} maps {delta} to the empty sequence")
            return image.members

        below = mk_phi(alpha, beta)
        return EmbedFn("veblen-seq", lambda sigma: GapSeq(_seq_image(sigma, alpha, top_seq), bound),
                       ord_leq, leq_w, ordinal_domain(below, caps),
                       {"alpha": alpha, "beta": beta, "rho": rho})

    def top_tree(delta: OrdTerm) -> LabTree:
        image = checked(delta)
        if isinstance(image, Leaf):
            raise ExcludedValueInRange(f"{f.name} maps {delta} to a bare leaf")
        return image

    below = mk_phi(add(ONE, alpha), beta)
    return EmbedFn("veblen-tree", lambda sigma: _tree_image(sigma, alpha, top_tree),
                   ord_leq, leq_tree, ordinal_domain(below, caps),
                   {"alpha": alpha, "beta": beta, "rho": rho})


def _check_low_start(s: GapSeq, head: OrdTerm, name: str) -> GapSeq:
    if s.members and not s[0] < head:
        raise RangePropertyViolated(f"{name} produced {s}, which does not start below {head}")
    return s


def strong_lower_base(f: EmbedFn, gamma: OrdTerm, alpha: OrdTerm, delta: OrdTerm,
                      caps: Caps = Caps()) -> EmbedFn:
    """
    Raise a weak gap embedding of alpha to a strong one of alpha^(w^gamma).

    For sigma = alpha^b * k + l in base-alpha normal form the image is the
    block [0] * f(k) with b added to each member, followed by the image of
    l. Every image is empty or starts below w^gamma.

    Args:
        f: Embedding of alpha into weak gap sequences below w^gamma + delta
        gamma: Exponent of the head of the target bound
        alpha: Base, at least 2
        delta: Tail of the target bound

    Raises:
        BaseTooSmall: From the returned map, if alpha < 2

    Example:
        alpha = w, gamma = 1, f(k) = [k]: w*2+3 -> [1,3,0,3]
    """
    head = omega_pow(gamma)
    bound = add(head, delta)
    below = pow(alpha, head)

    def apply(sigma: OrdTerm) -> GapSeq:
        if not sigma < below:
            raise InputOutOfRange(f"{sigma} is not below {below}")
        out = []
        while not sigma.is_zero:
            b, k, sigma = base_decompose(sigma, alpha)
            out.append(b)
            out.extend(_shift(b, f(k).members))
        return _check_low_start(GapSeq(tuple(out), bound), head, "strong-lower-base")

    return EmbedFn("strong-lower-base", apply, ord_leq, leq_s, ordinal_domain(below, caps),
                   {"gamma": gamma, "alpha": alpha, "delta": delta})


def strong_lower_combine(f: EmbedFn, g: EmbedFn, gamma: OrdTerm, delta: OrdTerm,
                         alpha: OrdTerm, beta: OrdTerm, caps: Caps = Caps()) -> EmbedFn:
    """
    Combine embeddings of alpha and beta into one of alpha * beta.

    With sigma = alpha * q + r the image is g(q) with w^gamma added to
    every member, followed by f(r).

    Args:
        f: Strong gap embedding of alpha below w^gamma + delta whose images
            are empty or start below w^gamma
        g: Strong gap embedding of beta below delta
        gamma: Exponent of the head of the target bound
        delta: Tail of the target bound
        alpha: Domain bound of f
        beta: Domain bound of g

    Raises:
        RangePropertyViolated: From the returned map, if f(r) starts at or
            above w^gamma
    """
    head = omega_pow(gamma)
    bound = add(head, delta)
    below = mul(alpha, beta)

    def apply(sigma: OrdTerm) -> GapSeq:
        if not sigma < below:
            raise InputOutOfRange(f"{sigma} is not below {below}")
        q, r = ldiv(sigma, alpha)
        low = _check_low_start(f(r), head, f.name)
        return GapSeq(_shift(head, g(q).members) + low.members, bound)

    return EmbedFn("strong-lower-combine", apply, ord_leq, leq_s, ordinal_domain(below, caps),
                   {"gamma": gamma, "delta": delta, "alpha": alpha, "beta": beta})
