"""
Descent of the reification measure along bad sequences.
"""

from gapwpo.harness.base import Carrier, Suite, implies
from gapwpo.harness.checks import grow_bad_sequence
from gapwpo.ordinals import nat
from gapwpo.orders import leq_tree
from gapwpo.reify import (
    e,
    is_term,
    iterate_type,
    leq_rterm,
    otype,
    random_term,
    random_type,
    reify_prefixes,
    simplify_type,
)
from gapwpo.sampling import random_tree

BADSEQ_MAX_LEN = 12
TERM_BADSEQ_MAX_LEN = 6


def _badseq(*elements) -> str:
    return "; ".join(str(x) for x in elements)


def _strictly_descending(values) -> bool:
    return all(b < a for a, b in zip(values, values[1:]))


def _is_bad(elements, order) -> bool:
    return not any(order(elements[i], elements[j])
                   for j in range(len(elements)) for i in range(j))


def _simplify_lowers(a, x):
    return otype(simplify_type(a, x)) < otype(a)


def _e_typed(a, x, y, z):
    target = simplify_type(a, x)
    return is_term(target, e(a, x, y)) and is_term(target, e(a, x, z))


def _e_reflects(a, x, y, z):
    return implies(leq_rterm(e(a, x, y), e(a, x, z)), lambda: leq_rterm(y, z))


class ReifyDescentSuite(Suite):
    """
    The reified value drops with every extension of a bad sequence.

    Tree bad sequences are grown by rejection sampling and reified prefix
    by prefix; sampled types check that simplification lowers otype and
    that e reflects the order into the simplified type.
    """

    name = "reify-descent"
    kind = Carrier.TERMS
    description = "strict descent of reified values, e reflection"

    def check(self):
        rng = self.spec.rng()
        self._tree_sequences(rng)
        for _ in range(self.spec.samples):
            a = random_type(rng, max_bound=self.spec.alphabet)
            x, y, z = (random_term(rng, a, max_term_size=self.spec.max_term_size)
                       for _ in range(3))
            if x is None:
                continue
            self.expect_law("simplify", _simplify_lowers, a, x)
            if y is None or z is None or leq_rterm(x, y) or leq_rterm(x, z):
                continue
            self.expect_law("e-type", _e_typed, a, x, y, z)
            self.expect_law("e-reflect", _e_reflects, a, x, y, z)
        for _ in range(self.spec.bad_sequences):
            self._term_sequence(rng)

    def _tree_sequences(self, rng):
        alpha = nat(self.spec.alphabet)

        def sample(r):
            return random_tree(r, self.spec.alphabet, self.spec.reify_max_nodes)

        def descends(*trees):
            return implies(_is_bad(trees, leq_tree),
                           lambda: _strictly_descending(reify_prefixes(trees, alpha)))

        for _ in range(self.spec.bad_sequences):
            bad = grow_bad_sequence(self.spec, leq_tree, BADSEQ_MAX_LEN, sample, rng)
            self.expect_law("badseq", descends, *bad.elements, render=_badseq)

    def _term_sequence(self, rng):
        a = random_type(rng, max_bound=self.spec.alphabet)
        if random_term(rng, a) is None:
            return

        def sample(r):
            return random_term(r, a, max_term_size=self.spec.max_term_size)

        def descends(*terms):
            if not _is_bad(terms, leq_rterm):
                return True
            values = [otype(iterate_type(a, terms[:k])) for k in range(len(terms) + 1)]
            return _strictly_descending(values)

        bad = grow_bad_sequence(self.spec, leq_rterm, TERM_BADSEQ_MAX_LEN, sample, rng)
        self.expect_law(f"{a} badseq", descends, *bad.elements, render=_badseq)
