"""
Canonical printing of ordinal terms.

Sums print weakly descending joined by "+", runs of equal summands as
"x*k", runs of 1 as a decimal, phi(0, x) as "w^x" and every other
principal term as "phi(g,d)".
"""

from itertools import groupby

from gapwpo.ordinals.terms import OrdTerm, PrincipalTerm


def print_principal(p: PrincipalTerm) -> str:
    if not p.first.is_zero:
        return f"phi({print_ord(p.first)},{print_ord(p.second)})"
    x = p.second
    if x.is_zero:
        return "1"
    if len(x.summands) == 1 and x.summands[0].is_one:
        return "w"
    inner = print_ord(x)
    if len(x.summands) > 1 and not x.is_finite:
        inner = f"({inner})"
    return f"w^{inner}"


def print_ord(a: OrdTerm) -> str:
    """
    Print a term in canonical form.

    Example:
        print_ord(w^(w^w) + 2) -> "w^w^w+2"
    """
    if a.is_zero:
        return "0"
    parts = []
    for p, run in groupby(a.summands):
        k = len(list(run))
        if p.is_one:
            parts.append(str(k))
        elif k > 1:
            parts.append(f"{print_principal(p)}*{k}")
        else:
            parts.append(print_principal(p))
    return "+".join(parts)
