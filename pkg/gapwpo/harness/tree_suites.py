"""
Suites for the embeddability order on ascending trees.
"""

from itertools import product

from gapwpo.harness.base import Carrier, Suite, implies
from gapwpo.ordinals import ONE, ZERO, add
from gapwpo.orders import is_left_strict, leq_tree, map_inner, subtrees
from gapwpo.sampling import enum_trees, random_tree


def _antisymmetric(s, t):
    return implies(leq_tree(s, t) and leq_tree(t, s), lambda: s == t)


def _transitive(s, t, u):
    return implies(leq_tree(s, t) and leq_tree(t, u), lambda: leq_tree(s, u))


def _subtree(u, t):
    return implies(u in list(subtrees(t)), lambda: leq_tree(u, t))


def _left_strict_hereditary(t):
    return implies(is_left_strict(t), lambda: all(is_left_strict(u) for u in subtrees(t)))


def _raise_dominates(t):
    return leq_tree(t, map_inner(t, lambda b: add(b, ONE)))


class TreeOrderAxiomsSuite(Suite):
    """Partial order axioms, for unit leaves and for leaves labelled 0 and 1."""

    name = "tree-order-axioms"
    kind = Carrier.TREES
    description = "reflexivity, antisymmetry and transitivity of tree embedding"

    def check(self):
        for leaves in ((None,), (ZERO, ONE)):
            trees = list(enum_trees(self.spec.alphabet, self.spec.max_nodes, leaf_labels=leaves))
            for s in trees:
                self.expect_law("reflexive", lambda x: leq_tree(x, x), s)
            for s, t in product(trees, repeat=2):
                self.expect_law("antisymmetric", _antisymmetric, s, t)
            for s, t, u in product(trees, repeat=3):
                self.expect_law("transitive", _transitive, s, t, u)


class TreeClosureSuite(Suite):
    """Subtrees embed, left-strictness is hereditary, raising labels dominates."""

    name = "tree-closure"
    kind = Carrier.TREES
    description = "subtree embedding, left-strict heredity and label raising"

    def check(self):
        trees = list(enum_trees(self.spec.alphabet, self.spec.max_nodes))
        rng = self.spec.rng()
        trees.extend(random_tree(rng, self.spec.alphabet, self.spec.max_nodes + 4)
                     for _ in range(self.spec.samples))
        for t in trees:
            for u in subtrees(t):
                self.expect_law("subtree", _subtree, u, t)
            self.expect_law("left-strict-hereditary", _left_strict_hereditary, t)
            self.expect_law("raise", _raise_dominates, t)
