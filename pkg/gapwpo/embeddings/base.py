"""
Base classes for quasi-embeddings.

An embedding bundles a map with the orders on its source and target and a
description of the inputs it accepts, so that the harness can sample or
enumerate lawful pairs and check that the map reflects the order.
"""

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, Optional, Sequence

from gapwpo.orders import higman_leq


def _no_shrink(x: Any) -> Iterable[Any]:
    return ()


def _anything(x: Any) -> bool:
    return True


@dataclass(frozen=True)
class Domain:
    """
    Inputs an embedding accepts.

    Attributes:
        description: Human-readable carrier description
        sample: Draws one element from a seeded generator
        contains: Membership test for inputs and shrunk candidates
        enumerate: Optional exhaustive enumeration for small carriers
        shrink: Smaller candidates of an element, used to minimize failures
        read: Parses an element from its literal
    """
    description: str
    sample: Callable[[random.Random], Any]
    contains: Callable[[Any], bool] = _anything
    enumerate: Optional[Callable[[], Iterable[Any]]] = None
    shrink: Callable[[Any], Iterable[Any]] = _no_shrink
    read: Optional[Callable[[str], Any]] = None


@dataclass(frozen=True)
class EmbedFn:
    """
    An executable quasi-embedding.

    Attributes:
        name: Registry name or a descriptive identifier
        params: Construction parameters, for display
        apply: The map itself
        source_leq: Order on the source
        target_leq: Order on the target
        domain: Inputs the map is defined on
    """
    name: str
    apply: Callable[[Any], Any]
    source_leq: Callable[[Any, Any], bool]
    target_leq: Callable[[Any, Any], bool]
    domain: Domain
    params: Dict[str, Any] = field(default_factory=dict)

    def __call__(self, x: Any) -> Any:
        return self.apply(x)

    def reflects(self, x: Any, y: Any) -> bool:
        """True unless target_leq(f(x), f(y)) holds while source_leq(x, y) fails."""
        if not self.target_leq(self.apply(x), self.apply(y)):
            return True
        return self.source_leq(x, y)


@dataclass(frozen=True)
class Tagged:
    """Element of a disjoint sum, tagged by summand index."""
    tag: int
    value: Any

    def __str__(self) -> str:
        return f"i{self.tag}({show(self.value)})"


@dataclass(frozen=True)
class Pair:
    """Element of a product order."""
    left: Any
    right: Any

    def __str__(self) -> str:
        return f"({show(self.left)}, {show(self.right)})"


def show(value: Any) -> str:
    """Render an embedding value in literal syntax."""
    if value is None:
        return "()"
    if isinstance(value, (tuple, list)):
        return "[" + ",".join(show(x) for x in value) + "]"
    return str(value)


def tagged_leq(*orders: Callable[[Any, Any], bool]) -> Callable[[Tagged, Tagged], bool]:
    """Order on a disjoint sum: equal tags compared by the summand's order."""

    def leq(a: Tagged, b: Tagged) -> bool:
        return a.tag == b.tag and orders[a.tag](a.value, b.value)

    return leq


def pair_leq(left: Callable[[Any, Any], bool],
             right: Callable[[Any, Any], bool]) -> Callable[[Pair, Pair], bool]:
    """Componentwise product order."""

    def leq(a: Pair, b: Pair) -> bool:
        return left(a.left, b.left) and right(a.right, b.right)

    return leq


def star_leq(elem_leq: Callable[[Any, Any], bool]) -> Callable[[Sequence, Sequence], bool]:
    """Higman order on finite sequences of elements."""

    def leq(s: Sequence, t: Sequence) -> bool:
        return higman_leq(s, t, elem_leq)

    return leq


def ord_leq(a, b) -> bool:
    return a <= b
