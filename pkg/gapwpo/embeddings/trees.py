"""
Quasi-embeddings on binary trees with ascending labels.

The left-set maps take the trees u that avoid a fixed tree t (t not
embeddable into u) into simpler orders, one map per shape of t. The
label split cuts a tree along its first labels below w^g and turns the
high parts into leaves.
"""

from enum import Enum
from typing import Any, Callable, List, Sequence

from gapwpo.embeddings.base import EmbedFn, Pair, Tagged, ord_leq, pair_leq, star_leq, tagged_leq
from gapwpo.embeddings.domains import Caps, tree_domain
from gapwpo.errors import PreconditionViolated, ZeroBound
from gapwpo.ordinals import OrdTerm, cnf_head, lsub, omega_pow
from gapwpo.orders import LabTree, Leaf, Node, default_leaf_leq, inner_labels, leq_tree, map_inner


class LeftSetVariant(Enum):
    LEAF = "leaf"
    ROOT = "root"
    SHIFT = "shift"


def cut_below(s: LabTree, head: OrdTerm) -> LabTree:
    """
    Replace every maximal subtree with all inner labels >= head by a leaf.

    The new leaf carries that subtree with head left-subtracted from each
    inner label; nodes labeled below head are kept.
    """
    if all(b >= head for b in inner_labels(s)):
        return Leaf(map_inner(s, lambda b: lsub(head, b)))
    return Node(s.inner, cut_below(s.left, head), cut_below(s.right, head))


def tree_label_split(t: LabTree, alpha: OrdTerm) -> LabTree:
    """
    Map a tree with labels below alpha = w^g + d to labels below w^g.

    Subtrees whose inner labels are all >= w^g become leaves labeled by
    the shifted subtree, a tree with labels below d.

    Raises:
        ZeroBound: If alpha is 0

    Example:
        tree_label_split(., 3) -> leaf(.)
    """
    if alpha.is_zero:
        raise ZeroBound("cannot split labels below 0")
    gamma, _ = cnf_head(alpha)
    return cut_below(t, omega_pow(gamma))


def root_spine(t_left: LabTree, s: LabTree,
               leaf_leq: Callable[[Any, Any], bool] = default_leaf_leq) -> List[Tagged]:
    """
    Spine encoding used when the excluded tree has root label 0.

    Each node contributes i1((b, s_l)) and continues right when t_left
    does not embed into its left subtree, otherwise i2((b, s_r)) and
    continues left; the final leaf contributes i0(label).
    """
    out: List[Tagged] = []
    while isinstance(s, Node):
        if not leq_tree(t_left, s.left, leaf_leq):
            out.append(Tagged(1, Pair(s.inner, s.left)))
            s = s.right
        else:
            out.append(Tagged(2, Pair(s.inner, s.right)))
            s = s.left
    out.append(Tagged(0, s.label))
    return out


def left_set_embed(t: LabTree, variant: LeftSetVariant, bound: OrdTerm,
                   leaves: Sequence[Any] = (None,), caps: Caps = Caps()) -> EmbedFn:
    """
    Embedding of the trees avoiding t.

    Args:
        t: The excluded tree
        variant: LEAF when t is a leaf x * [] (identity onto trees whose
            leaf labels avoid x), ROOT when t = 0 * [t_l, t_r] (spine
            encoding into tagged words), SHIFT when t has an inner label
            >= 1 (cut below w^g0 for the head exponent g0 of t's largest
            inner label)
        bound: Inner labels of the carrier lie below it
        leaves: Leaf alphabet of the carrier
        caps: Size caps for the domain descriptor

    Returns:
        EmbedFn whose domain is the trees u with t not embeddable into u

    Raises:
        PreconditionViolated: If t does not fit the variant's clause
    """
    domain = tree_domain(bound, caps, leaves=leaves, where=lambda u: not leq_tree(t, u))
    params = {"t": t, "variant": variant.value, "bound": bound}

    if variant is LeftSetVariant.LEAF:
        if not isinstance(t, Leaf):
            raise PreconditionViolated(f"leaf clause needs a leaf, got {t}")
        return EmbedFn("left-set-leaf", lambda u: u, leq_tree, leq_tree, domain, params)

    if variant is LeftSetVariant.ROOT:
        if not isinstance(t, Node) or not t.inner.is_zero:
            raise PreconditionViolated(f"root clause needs root label 0, got {t}")
        t_left = t.left
        branch = pair_leq(ord_leq, leq_tree)
        return EmbedFn(
            "left-set-root",
            lambda u: tuple(root_spine(t_left, u)),
            leq_tree,
            star_leq(tagged_leq(default_leaf_leq, branch, branch)),
            domain,
            params,
        )

    labels = inner_labels(t)
    if not labels or max(labels).is_zero:
        raise PreconditionViolated(f"shift clause needs an inner label >= 1 in {t}")
    gamma0, _ = cnf_head(max(labels))
    head = omega_pow(gamma0)
    params["head"] = head
    return EmbedFn("left-set-shift", lambda u: cut_below(u, head), leq_tree, leq_tree,
                   domain, params)
