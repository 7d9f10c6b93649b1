"""
Exception hierarchy for gapwpo.

Every failure raised by the library derives from GapWpoError so callers
(the CLI in particular) can catch the whole family at once.
"""


class GapWpoError(Exception):
    """Base class for all gapwpo errors."""


# Ordinal notations

class MalformedTerm(GapWpoError, ValueError):
    """A term violates the Veblen normal form or the descending-sum invariant."""


class ZeroHasNoHead(GapWpoError, ArithmeticError):
    """Cantor normal form head requested for the ordinal 0."""


class BaseTooSmall(GapWpoError, ArithmeticError):
    """A base-alpha expansion was requested with alpha < 2."""


class ZeroArgument(GapWpoError, ArithmeticError):
    """psi was called with a zero argument."""


class ParseError(GapWpoError, ValueError):
    """
    A literal could not be parsed.

    Attributes:
        offset: Byte offset into the input where parsing failed
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


# Orders

class BoundMismatch(GapWpoError, ValueError):
    """Two gap sequences with different bounds were compared."""


class NotDominated(GapWpoError, ValueError):
    """split_weak was called on s, t_l, t_r with s not below t_l * t_r."""


class AscendingViolation(GapWpoError, ValueError):
    """A node label is above an inner label of one of its subtrees."""


class AlphabetMismatch(GapWpoError, TypeError):
    """Leaf labels or bullet letters from incomparable alphabets."""


# Embeddings

class PreconditionViolated(GapWpoError, ValueError):
    """A construction parameter does not satisfy the clause it selects."""


class ZeroBound(GapWpoError, ValueError):
    """A label split was requested for the empty bound."""


class NotInfiniteBound(GapWpoError, ValueError):
    """The infinite strong decomposition was requested for a finite bound."""


class InputOutOfRange(GapWpoError, ValueError):
    """An input lies outside the domain of the embedding."""


class IndexOutOfRange(GapWpoError, ValueError):
    """A Veblen index is not below the admissible bound."""


class RangePropertyViolated(GapWpoError, ValueError):
    """An inner map produced a sequence not starting below omega^gamma."""


class ExcludedValueInRange(GapWpoError, ValueError):
    """An inner map produced the value it must avoid."""


class UnknownEmbedding(GapWpoError, ValueError):
    """No embedding registered under the requested name."""


class DomainExhausted(GapWpoError, ValueError):
    """Sampling found no element satisfying a domain filter."""


# Reification

class TypeMismatch(GapWpoError, TypeError):
    """A reification term does not inhabit the type it is used at."""


class DominancePreconditionViolated(GapWpoError, ValueError):
    """e was called on a pair (a, b) with a <= b."""


class NotBad(GapWpoError, ValueError):
    """A sequence offered as bad contains i < j with s_i <= s_j."""


# Harness

class UnknownSuite(GapWpoError, ValueError):
    """No harness suite registered under the requested name."""


class UnknownProfile(GapWpoError, ValueError):
    """No harness profile configured under the requested name."""
