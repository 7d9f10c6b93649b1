"""
Ordinal arithmetic on Veblen normal forms.

Ordinary sum, product and power, natural (Hessenberg) sum and product,
left subtraction and division, Cantor and base-alpha normal forms, and
the psi function used by the maximal order type bounds.
"""

from functools import cmp_to_key
from itertools import takewhile
from typing import Tuple

from gapwpo.errors import BaseTooSmall, ZeroArgument, ZeroHasNoHead
from gapwpo.ordinals.terms import (
    ONE,
    ZERO,
    OrdTerm,
    PrincipalTerm,
    cmp_principal,
    nat,
)


def mk_phi(g: OrdTerm, d: OrdTerm) -> OrdTerm:
    """
    Normalizing constructor for phi_g(d).

    Returns d itself when d = phi(g', d') with g' > g (d is a fixed point
    of phi_g), otherwise the principal term phi(g, d).
    """
    if len(d.summands) == 1 and d.summands[0].first > g:
        return d
    return OrdTerm((PrincipalTerm(g, d),))


def omega_pow(e: OrdTerm) -> OrdTerm:
    """omega^e."""
    return mk_phi(ZERO, e)


def add(a: OrdTerm, b: OrdTerm) -> OrdTerm:
    """Ordinary sum: a's summands below the head of b are absorbed."""
    if b.is_zero:
        return a
    head = b.summands[0]
    kept = takewhile(lambda x: cmp_principal(x, head) >= 0, a.summands)
    return OrdTerm(tuple(kept) + b.summands)


def lsub(a: OrdTerm, b: OrdTerm) -> OrdTerm:
    """
    Left subtraction -a + b.

    Returns the unique g with a + g = b when a <= b, and 0 when a > b.
    """
    if a > b:
        return ZERO
    k = 0
    for x, y in zip(a.summands, b.summands):
        if x != y:
            break
        k += 1
    return OrdTerm(b.summands[k:])


def hessenberg(a: OrdTerm, b: OrdTerm) -> OrdTerm:
    """Natural sum: merge both summand lists into one descending list."""
    merged = sorted(a.summands + b.summands, key=cmp_to_key(cmp_principal), reverse=True)
    return OrdTerm(tuple(merged))


def nat_product(a: OrdTerm, b: OrdTerm) -> OrdTerm:
    """Natural product: distribute over summands, w^x * w^y = w^(x # y)."""
    result = ZERO
    for p in a.summands:
        for q in b.summands:
            result = hessenberg(result, omega_pow(hessenberg(p.exponent(), q.exponent())))
    return result


def mul(a: OrdTerm, b: OrdTerm) -> OrdTerm:
    """
    Ordinary product a * b.

    Left-distributes a over the summands of b, using a * 1 = a and
    a * w^e = w^(lead(a) + e) for e > 0.
    """
    if a.is_zero or b.is_zero:
        return ZERO
    lead = a.lead_exponent()
    result = ZERO
    for q in b.summands:
        if q.is_one:
            result = add(result, a)
        else:
            result = add(result, omega_pow(add(lead, q.exponent())))
    return result


def _split_finite(b: OrdTerm) -> Tuple[OrdTerm, int]:
    n = b.finite_part()
    return OrdTerm(b.summands[: len(b.summands) - n]), n


def pow(a: OrdTerm, b: OrdTerm) -> OrdTerm:  # noqa: A001 - ordinal exponentiation
    """
    Ordinary exponentiation a ** b.

    Splits b = b_inf + n. For finite a >= 2, a ** w^e = w^(w^(-1 + e));
    for infinite a, a ** b_inf = w^(lead(a) * b_inf). The finite part is
    multiplied out.
    """
    if b.is_zero:
        return ONE
    if a.is_zero:
        return ZERO
    if a == ONE:
        return ONE
    b_inf, n = _split_finite(b)
    if b_inf.is_zero:
        limit_part = ONE
    elif a.is_finite:
        exponent = ZERO
        for q in b_inf.summands:
            exponent = add(exponent, omega_pow(lsub(ONE, q.exponent())))
        limit_part = omega_pow(exponent)
    else:
        limit_part = omega_pow(mul(a.lead_exponent(), b_inf))
    result = limit_part
    for _ in range(n):
        result = mul(result, a)
    return result


def lead_coefficient(a: OrdTerm) -> int:
    """Multiplicity of the leading summand."""
    if a.is_zero:
        return 0
    head = a.summands[0]
    return sum(1 for _ in takewhile(lambda x: x == head, a.summands))


def ldiv(a: OrdTerm, b: OrdTerm) -> Tuple[OrdTerm, OrdTerm]:
    """
    Left division: a = b * q + r with r < b.

    Args:
        a: Dividend
        b: Divisor, nonzero

    Returns:
        Tuple (q, r)

    Raises:
        ZeroArgument: If b is 0
    """
    if b.is_zero:
        raise ZeroArgument("division by zero")
    b0 = b.lead_exponent()
    cb = lead_coefficient(b)
    q = ZERO
    matching = 0
    for x in a.summands:
        e = x.exponent()
        if e > b0:
            q = add(q, omega_pow(lsub(b0, e)))
        elif e == b0:
            matching += 1
    n = matching // cb
    candidate = add(q, nat(n))
    if n > 0 and mul(b, candidate) > a:
        candidate = add(q, nat(n - 1))
    return candidate, lsub(mul(b, candidate), a)


def cnf_head(a: OrdTerm) -> Tuple[OrdTerm, OrdTerm]:
    """
    Split off the leading Cantor normal form summand.

    Args:
        a: Nonzero ordinal

    Returns:
        Tuple (gamma, delta) with a = w^gamma + delta and delta < w^(gamma+1)

    Raises:
        ZeroHasNoHead: If a is 0
    """
    if a.is_zero:
        raise ZeroHasNoHead("0 has no Cantor normal form head")
    return a.lead_exponent(), OrdTerm(a.summands[1:])


def _predecessor(q: OrdTerm) -> OrdTerm:
    return OrdTerm(q.summands[:-1])


def base_decompose(s: OrdTerm, base: OrdTerm) -> Tuple[OrdTerm, OrdTerm, OrdTerm]:
    """
    Leading digit of s in base `base`.

    Args:
        s: Nonzero ordinal
        base: Ordinal >= 2

    Returns:
        Tuple (beta, kappa, lambda) with s = base**beta * kappa + lambda,
        0 < kappa < base and lambda < base**beta

    Raises:
        BaseTooSmall: If base < 2
        ZeroHasNoHead: If s is 0

    Example:
        base_decompose(w*2+3, w) -> (1, 2, 3)
    """
    if base < nat(2):
        raise BaseTooSmall(f"base {base} is below 2")
    if s.is_zero:
        raise ZeroHasNoHead("0 has no base expansion")
    s0 = s.lead_exponent()
    if base.is_finite:
        k = base.finite_value()
        c = lead_coefficient(s)
        j = 0
        while k ** (j + 1) <= c:
            j += 1
        beta = add(mul(omega_pow(ONE), s0), nat(j))
    else:
        beta, r = ldiv(s0, base.lead_exponent())
        if r.is_zero and beta.finite_part() >= 1 and pow(base, beta) > s:
            beta = _predecessor(beta)
    kappa, lam = ldiv(s, pow(base, beta))
    return beta, kappa, lam


def psi(a: OrdTerm, b: OrdTerm) -> OrdTerm:
    """
    The psi function bounding tree order types.

    phi_a(b+1) if b >= phi_(a+1)(0); phi_a(0) if b = 1 and a < phi_a(0);
    phi_a(b) otherwise.

    Raises:
        ZeroArgument: If a or b is 0
    """
    if a.is_zero or b.is_zero:
        raise ZeroArgument("psi needs positive arguments")
    if b >= mk_phi(add(a, ONE), ZERO):
        return mk_phi(a, add(b, ONE))
    if b == ONE and a < mk_phi(a, ZERO):
        return mk_phi(a, ZERO)
    return mk_phi(a, b)


def is_indecomposable(a: OrdTerm) -> bool:
    return len(a.summands) == 1


def is_epsilon(a: OrdTerm) -> bool:
    """True for fixed points of x -> w^x."""
    return len(a.summands) == 1 and not a.summands[0].first.is_zero
