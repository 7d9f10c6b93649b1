"""
Ordinal terms below Gamma_0.

An ordinal is a weakly descending sum of principal terms phi(g, d), where
both arguments are ordinal terms again. The empty sum is 0, phi(0, 0) is 1
and phi(0, x) is omega^x. Terms are immutable and always kept in Veblen
normal form, so structural equality is ordinal equality.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache, total_ordering
from typing import Tuple

from gapwpo.errors import MalformedTerm


class Ordering3(Enum):
    """Result of a three-way comparison."""

    LT = -1
    EQ = 0
    GT = 1

    @property
    def symbol(self) -> str:
        return {-1: "<", 0: "=", 1: ">"}[self.value]


@dataclass(frozen=True)
class PrincipalTerm:
    """
    The principal term phi(first, second).

    Attributes:
        first: Veblen index
        second: Argument; must lie strictly below phi(first, second)
    """

    first: "OrdTerm"
    second: "OrdTerm"
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.first, OrdTerm) or not isinstance(self.second, OrdTerm):
            raise MalformedTerm("phi arguments must be ordinal terms")
        # d is a fixed point of phi_g exactly when d = phi(g', d') with g' > g
        d = self.second.summands
        if len(d) == 1 and _cmp_term(d[0].first, self.first) > 0:
            raise MalformedTerm(
                f"phi({self.first},{self.second}) is not in Veblen normal form"
            )
        object.__setattr__(self, "_hash", hash((self.first, self.second)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_one(self) -> bool:
        return not self.first.summands and not self.second.summands

    def exponent(self) -> "OrdTerm":
        """Cantor normal form exponent: phi(0, x) = w^x, anything else is an epsilon number."""
        if not self.first.summands:
            return self.second
        return OrdTerm((self,))


@total_ordering
@dataclass(frozen=True)
class OrdTerm:
    """
    An ordinal below Gamma_0 as a weakly descending sum of principal terms.

    Attributes:
        summands: Principal terms, weakly descending; empty for 0
    """

    summands: Tuple[PrincipalTerm, ...] = ()
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        summands = tuple(self.summands)
        for p in summands:
            if not isinstance(p, PrincipalTerm):
                raise MalformedTerm(f"summand {p!r} is not a principal term")
        for left, right in zip(summands, summands[1:]):
            if _cmp_principal(left, right) < 0:
                raise MalformedTerm("summands are not weakly descending")
        object.__setattr__(self, "summands", summands)
        object.__setattr__(self, "_hash", hash(summands))

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "OrdTerm") -> bool:
        if not isinstance(other, OrdTerm):
            return NotImplemented
        return _cmp_term(self, other) < 0

    def __str__(self) -> str:
        from gapwpo.ordinals.notation import print_ord
        return print_ord(self)

    def __repr__(self) -> str:
        return f"OrdTerm({self})"

    @property
    def is_zero(self) -> bool:
        return not self.summands

    @property
    def is_finite(self) -> bool:
        return all(p.is_one for p in self.summands)

    @property
    def is_successor(self) -> bool:
        return bool(self.summands) and self.summands[-1].is_one

    def finite_value(self) -> int:
        """
        Get the natural number denoted by a finite term.

        Raises:
            ValueError: If the term is infinite
        """
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return len(self.summands)

    def finite_part(self) -> int:
        """Number of trailing 1 summands."""
        n = 0
        for p in reversed(self.summands):
            if not p.is_one:
                break
            n += 1
        return n

    def lead_exponent(self) -> "OrdTerm":
        """Exponent of the leading Cantor normal form summand (0 must be handled by the caller)."""
        return self.summands[0].exponent()


def nat(n: int) -> OrdTerm:
    """The natural number n as an ordinal term."""
    if n < 0:
        raise MalformedTerm(f"negative natural {n}")
    return OrdTerm(ONE.summands * n)


@lru_cache(maxsize=1 << 16)
def _cmp_principal(p: PrincipalTerm, q: PrincipalTerm) -> int:
    if p is q:
        return 0
    c = _cmp_term(p.first, q.first)
    if c < 0:
        return _cmp_term(p.second, OrdTerm((q,)))
    if c == 0:
        return _cmp_term(p.second, q.second)
    return _cmp_term(OrdTerm((p,)), q.second)


def _cmp_term(a: OrdTerm, b: OrdTerm) -> int:
    if a is b:
        return 0
    for x, y in zip(a.summands, b.summands):
        c = _cmp_principal(x, y)
        if c:
            return c
    return (len(a.summands) > len(b.summands)) - (len(a.summands) < len(b.summands))


ZERO = OrdTerm(())
ONE = OrdTerm((PrincipalTerm(ZERO, ZERO),))
OMEGA = OrdTerm((PrincipalTerm(ZERO, ONE),))


def cmp_ord(a: OrdTerm, b: OrdTerm) -> Ordering3:
    """
    Compare two ordinal terms.

    Zero is least, sums compare lexicographically with the shorter prefix
    smaller, and principal terms phi(a, b), phi(c, d) compare through the
    three-way comparison of their indices.

    Args:
        a: First term
        b: Second term

    Returns:
        Ordering3.LT, EQ or GT
    """
    return Ordering3(_cmp_term(a, b))


def cmp_principal(p: PrincipalTerm, q: PrincipalTerm) -> int:
    """Three-way comparison of principal terms as -1, 0 or 1."""
    return _cmp_principal(p, q)
