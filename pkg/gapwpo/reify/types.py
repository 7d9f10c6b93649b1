"""
Reification types.

A type names a partial order: E is empty, L(b) is the ordinals below b,
B(b, A) the ascending trees with inner labels below b and leaves in A,
and Sum, Prod and Star are the disjoint sum, the product and the Higman
order on finite sequences.
"""

from dataclasses import dataclass
from typing import Union

from gapwpo.ordinals import ONE, ZERO, OrdTerm, add, hessenberg, mk_phi, nat


@dataclass(frozen=True)
class E:
    def __str__(self) -> str:
        return "E"


@dataclass(frozen=True)
class L:
    bound: OrdTerm

    def __str__(self) -> str:
        return f"L({self.bound})"


@dataclass(frozen=True)
class B:
    """Trees with inner labels below bound and leaves labeled by terms of leaf."""
    bound: OrdTerm
    leaf: "RType"

    def __str__(self) -> str:
        return f"B({self.bound}, {self.leaf})"


@dataclass(frozen=True)
class Sum:
    left: "RType"
    right: "RType"

    def __str__(self) -> str:
        return f"({self.left} + {self.right})"


@dataclass(frozen=True)
class Prod:
    left: "RType"
    right: "RType"

    def __str__(self) -> str:
        return f"({self.left} x {self.right})"


@dataclass(frozen=True)
class Star:
    elem: "RType"

    def __str__(self) -> str:
        return f"{self.elem}*"


RType = Union[E, L, B, Sum, Prod, Star]

TWO = nat(2)


def sum3(a: RType, b: RType, c: RType) -> Sum:
    """a + b + c, associated to the left."""
    return Sum(Sum(a, b), c)


def otype(a: RType) -> OrdTerm:
    """
    Ordinal measure of a type, below phi(2 + alpha, 0).

    Example:
        otype(Star(E())) -> phi(1,1)
    """
    if isinstance(a, E):
        return ZERO
    if isinstance(a, L):
        return mk_phi(add(TWO, a.bound), ZERO)
    if isinstance(a, B):
        return mk_phi(add(TWO, a.bound), add(otype(a.leaf), ONE))
    if isinstance(a, Sum):
        return hessenberg(otype(a.left), otype(a.right))
    if isinstance(a, Prod):
        return mk_phi(ZERO, hessenberg(otype(a.left), otype(a.right)))
    return mk_phi(ONE, add(otype(a.elem), ONE))


def inhabited(a: RType) -> bool:
    """True if the type has at least one term."""
    if isinstance(a, E):
        return False
    if isinstance(a, L):
        return not a.bound.is_zero
    if isinstance(a, B):
        return inhabited(a.leaf)
    if isinstance(a, Sum):
        return inhabited(a.left) or inhabited(a.right)
    if isinstance(a, Prod):
        return inhabited(a.left) and inhabited(a.right)
    return True
