"""
Random reification types and terms for the descent and reflection suites.
"""

import random
from typing import Optional

from gapwpo.ordinals import nat
from gapwpo.orders import Leaf, Node
from gapwpo.reify.terms import Inj, OrdElem, PairTerm, RTerm, SeqTerm
from gapwpo.reify.types import B, E, L, Prod, RType, Star, Sum, inhabited
from gapwpo.sampling import members_below

MAX_STAR_LEN = 3


def random_type(rng: random.Random, depth: int = 3, max_bound: int = 3) -> RType:
    """
    Random type of bounded depth with finite bounds up to max_bound.

    Example:
        random_type(random.Random(0), depth=0) -> E or some L(k)
    """
    if depth <= 0 or rng.random() < 0.2:
        k = rng.randint(0, max_bound)
        return E() if k == 0 and rng.random() < 0.5 else L(nat(k))
    kind = rng.choice(("B", "Sum", "Prod", "Star"))
    if kind == "B":
        return B(nat(rng.randint(1, max_bound)), random_type(rng, depth - 1, max_bound))
    if kind == "Sum":
        return Sum(random_type(rng, depth - 1, max_bound), random_type(rng, depth - 1, max_bound))
    if kind == "Prod":
        return Prod(random_type(rng, depth - 1, max_bound), random_type(rng, depth - 1, max_bound))
    return Star(random_type(rng, depth - 1, max_bound))


def random_term(rng: random.Random, a: RType, budget: int = 6,
                max_term_size: int = 4) -> Optional[RTerm]:
    """
    Random term of type a, or None when a has no terms.

    budget bounds the number of tree nodes and sequence items drawn at
    each level; every inhabited type gets a term even when it runs out.
    """
    if not inhabited(a):
        return None
    if isinstance(a, L):
        return OrdElem(rng.choice(members_below(a.bound, max_term_size)))
    if isinstance(a, B):
        labels = members_below(a.bound, max_term_size)

        def grow(n: int, lo: int):
            if n < 3 or lo >= len(labels) or rng.random() < 0.35:
                return Leaf(random_term(rng, a.leaf, budget - 1, max_term_size))
            i = rng.randrange(lo, len(labels))
            left = rng.randrange(1, n - 1)
            return Node(labels[i], grow(left, i), grow(n - 1 - left, i))

        return grow(max(budget, 1), 0)
    if isinstance(a, Sum):
        sides = [tag for tag, side in ((0, a.left), (1, a.right)) if inhabited(side)]
        tag = rng.choice(sides)
        return Inj(tag, random_term(rng, a.left if tag == 0 else a.right, budget - 1,
                                    max_term_size))
    if isinstance(a, Prod):
        return PairTerm(random_term(rng, a.left, budget - 1, max_term_size),
                        random_term(rng, a.right, budget - 1, max_term_size))
    n = 0 if budget <= 1 or not inhabited(a.elem) else rng.randint(0, MAX_STAR_LEN)
    return SeqTerm(tuple(random_term(rng, a.elem, budget - 1, max_term_size) for _ in range(n)))
