"""
Quasi-embeddings through the bullet order.

Ordinals below w^(w^k) are written as nested base-beta expansions over a
growing alphabet, one stage per extra letter; the resulting words are then
moved into weak gap sequences.
"""

from typing import Optional

from gapwpo.embeddings.base import EmbedFn, ord_leq
from gapwpo.embeddings.domains import Caps, ordinal_domain, seq_domain
from gapwpo.errors import InputOutOfRange
from gapwpo.ordinals import OMEGA, ONE, ZERO, OrdTerm, add, ldiv, mul, nat, omega_pow, pow
from gapwpo.orders import GapSeq, bullet_leq, leq_w


def nat_to_bullet(n: OrdTerm) -> GapSeq:
    """
    The unary word of length n over the one-letter alphabet.

    Raises:
        InputOutOfRange: If n is infinite
    """
    if not n.is_finite:
        raise InputOutOfRange(f"{n} is not a natural number")
    return GapSeq((ZERO,) * n.finite_value(), ONE)


def nat_to_bullet_embed(caps: Caps = Caps()) -> EmbedFn:
    return EmbedFn("nat-to-bullet", nat_to_bullet, ord_leq, bullet_leq,
                   ordinal_domain(OMEGA, caps))


def stage_count(sigma: OrdTerm, beta: OrdTerm) -> int:
    """Least k with sigma < beta ** k."""
    if not sigma < pow(beta, OMEGA):
        raise InputOutOfRange(f"{sigma} is not below {beta}^w")
    k = 0
    while pow(beta, nat(k)) <= sigma:
        k += 1
    return k


def bullet_stage(g: EmbedFn, beta: OrdTerm, top: OrdTerm, n: Optional[int] = None,
                 caps: Caps = Caps()) -> EmbedFn:
    """
    Lift g: beta -> top^bullet to beta^n -> (top + 1)^bullet.

    With sigma = beta * q + r the stage map emits g(r), then the new
    letter top, then the image of q one stage lower; stage 0 sends 0 to
    the empty word. Without n, each input uses the least stage it fits
    in, so the map covers beta^w.

    Args:
        g: Embedding of beta into words over letters below top
        beta: Base of the expansion
        top: The new, largest letter
        n: Fixed stage, or None to choose per input
        caps: Size caps for the domain descriptor

    Raises:
        InputOutOfRange: From the returned map, for inputs beyond the stage

    Example:
        bullet_stage(nat_to_bullet, w, 1, 2)(w*2+3) -> [0,0,0,1,0,0,1]
    """
    bound = add(top, ONE)
    below = pow(beta, OMEGA if n is None else nat(n))

    def apply(sigma: OrdTerm) -> GapSeq:
        if not sigma < below:
            raise InputOutOfRange(f"{sigma} is not below {below}")
        k = stage_count(sigma, beta) if n is None else n
        out = []
        for _ in range(k):
            q, r = ldiv(sigma, beta)
            out.extend(g(r).members)
            out.append(top)
            sigma = q
        return GapSeq(tuple(out), bound)

    return EmbedFn("bullet-stage", apply, ord_leq, bullet_leq, ordinal_domain(below, caps),
                   {"beta": beta, "top": top, "n": n})


def bullet_to_weak(f: EmbedFn, alphabet: OrdTerm, n: OrdTerm, caps: Caps = Caps()) -> EmbedFn:
    """
    Move words into weak gap sequences.

    Each letter a becomes 1 + f(a) followed by the separator 0, where f
    embeds the letters below alphabet into weak gap sequences below n.

    Example:
        with f(k) = k zeros: [2,1] -> [1,1,0,1,0]
    """
    def apply(s: GapSeq) -> GapSeq:
        out = []
        for a in s.members:
            out.extend(add(ONE, x) for x in f(a).members)
            out.append(ZERO)
        return GapSeq(tuple(out), add(n, ONE))

    return EmbedFn("bullet-to-weak", apply, bullet_leq, leq_w, seq_domain(alphabet, caps),
                   {"alphabet": alphabet, "n": n})


def zeros_embed(k: int, caps: Caps = Caps()) -> EmbedFn:
    """The letters 0..k-1 as runs of zeros, a weak gap embedding into bound 1."""
    return EmbedFn("zeros", lambda a: GapSeq((ZERO,) * a.finite_value(), ONE), ord_leq, leq_w,
                   ordinal_domain(nat(k), caps))


def bullet_pipeline(caps: Caps = Caps()) -> EmbedFn:
    """
    Ordinals below w^(w^2) into weak gap sequences below 2.

    Composes the unary words, the base-w stage, the base-w^w stage and
    the transfer into weak gap sequences.
    """
    stage1 = bullet_stage(nat_to_bullet_embed(caps), OMEGA, ONE, caps=caps)
    stage2 = bullet_stage(stage1, pow(OMEGA, OMEGA), nat(2), caps=caps)
    to_weak = bullet_to_weak(zeros_embed(3, caps), nat(3), ONE, caps)
    below = omega_pow(mul(OMEGA, OMEGA))
    return EmbedFn("bullet-pipeline", lambda sigma: to_weak(stage2(sigma)), ord_leq, leq_w,
                   ordinal_domain(below, caps))
