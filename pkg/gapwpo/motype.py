"""
Maximal order types in closed form.

F is the maximal order type of binary trees with ascending labels below
alpha, G that of weak (equivalently, symmetric) gap sequences below alpha
and of left-strict trees, H that of strong gap sequences. higman_star is
the classical value for finite sequences under Higman's order.
"""

from gapwpo.ordinals import (
    ONE,
    ZERO,
    OrdTerm,
    add,
    cnf_head,
    is_epsilon,
    lsub,
    mk_phi,
    mul,
    nat,
    omega_pow,
    pow,
)


def F(alpha: OrdTerm) -> OrdTerm:  # noqa: N802
    """
    Maximal order type of ascending binary trees with labels below alpha.

    Example:
        F(1) -> phi(1,0)
    """
    if alpha.is_zero:
        return ONE
    gamma, delta = cnf_head(alpha)
    if delta.is_zero and gamma < mk_phi(gamma, ZERO):
        return mk_phi(add(ONE, gamma), ZERO)
    return mk_phi(add(ONE, gamma), F(delta))


def G(alpha: OrdTerm) -> OrdTerm:  # noqa: N802
    """
    Maximal order type of weak gap sequences below alpha.

    Example:
        G(2) -> w^w^w
    """
    if alpha.is_zero:
        return ONE
    if alpha == ONE:
        return omega_pow(ONE)
    if alpha.is_finite:
        n = nat(alpha.finite_value() - 1)
        return omega_pow(omega_pow(G(n)))
    gamma, delta = cnf_head(alpha)
    if delta.is_zero and not gamma.is_zero and gamma < mk_phi(gamma, ZERO):
        return mk_phi(gamma, ZERO)
    return mk_phi(gamma, G(delta))


def H(alpha: OrdTerm) -> OrdTerm:  # noqa: N802
    """
    Maximal order type of strong gap sequences below alpha.

    For alpha = w^g + d in Cantor normal form this is G(alpha)^(w^g) * H(d).

    Example:
        H(2) -> w^(w^w+1)
    """
    if alpha.is_zero:
        return ONE
    gamma, delta = cnf_head(alpha)
    return mul(pow(G(alpha), omega_pow(gamma)), H(delta))


def higman_star(x: OrdTerm, empty: bool = False) -> OrdTerm:
    """
    Maximal order type of X* given x = o(X).

    Args:
        x: Maximal order type of X
        empty: X is the empty order (x is then ignored)

    Returns:
        1 for empty X, w^(w^(x-1)) for finite x, w^(w^(x+1)) when x is an
        epsilon number plus a finite part, and w^(w^x) otherwise
    """
    if empty or x.is_zero:
        return ONE
    if x.is_finite:
        return omega_pow(omega_pow(nat(x.finite_value() - 1)))
    head = OrdTerm(x.summands[:1])
    tail = lsub(head, x)
    if is_epsilon(head) and tail.is_finite:
        return omega_pow(omega_pow(add(x, ONE)))
    return omega_pow(omega_pow(x))
