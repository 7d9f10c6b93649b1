"""
Quasi-embeddings for gapwpo.

Every construction is available as a plain function and, with canned
parameters, through the get_embedding factory used by the CLI and the
reflection suites.
"""

from typing import Any, Dict, Optional

from gapwpo.embeddings.base import (
    Domain,
    EmbedFn,
    Pair,
    Tagged,
    ord_leq,
    pair_leq,
    show,
    star_leq,
    tagged_leq,
)
from gapwpo.embeddings.bullets import (
    bullet_pipeline,
    bullet_stage,
    bullet_to_weak,
    nat_to_bullet,
    nat_to_bullet_embed,
    stage_count,
    zeros_embed,
)
from gapwpo.embeddings.domains import Caps, ordinal_domain, seq_domain, tree_domain
from gapwpo.embeddings.lower_bounds import (
    VeblenTarget,
    phi_to_gapseq,
    strong_lower_base,
    strong_lower_combine,
    veblen_lower,
)
from gapwpo.embeddings.sequences import (
    decompose_inf_letter_leq,
    encode_low_start,
    seq_to_tree,
    strong_decompose_fin,
    strong_decompose_inf,
    strong_to_weak,
    weak_to_strong,
)
from gapwpo.embeddings.trees import (
    LeftSetVariant,
    cut_below,
    left_set_embed,
    root_spine,
    tree_label_split,
)
from gapwpo.errors import UnknownEmbedding
from gapwpo.literals import parse_ord, parse_tree
from gapwpo.ordinals import OMEGA, ONE, OrdTerm, add, mk_phi, nat, omega_pow, pow
from gapwpo.orders import UNIT_LEAF, GapSeq, Leaf, Node, leq_s, leq_tree, leq_w


def _ord(value: Any) -> OrdTerm:
    if isinstance(value, OrdTerm):
        return value
    if isinstance(value, int):
        return nat(value)
    return parse_ord(str(value))


def _tree(value: Any):
    if isinstance(value, (Leaf, Node)):
        return value
    return parse_tree(str(value))


def _flag(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    return str(value).lower() in ("1", "true", "yes")


def singleton_embed(domain_bound: OrdTerm, bound: OrdTerm, strong: bool = False,
                    caps: Caps = Caps()) -> EmbedFn:
    """k -> [k], an embedding of domain_bound into gap sequences below bound."""
    return EmbedFn("singleton", lambda k: GapSeq((k,), bound), ord_leq,
                   leq_s if strong else leq_w, ordinal_domain(domain_bound, caps))


def node_embed(domain_bound: OrdTerm, caps: Caps = Caps()) -> EmbedFn:
    """k -> (k . .), avoiding the bare leaf."""
    return EmbedFn("node", lambda k: Node(k, UNIT_LEAF, UNIT_LEAF), ord_leq, leq_tree,
                   ordinal_domain(domain_bound, caps))


EMBEDDING_NAMES = (
    "seq-to-tree",
    "phi-to-gapseq",
    "weak-to-strong",
    "strong-to-weak",
    "left-set-leaf",
    "left-set-root",
    "left-set-shift",
    "tree-label-split",
    "strong-decompose-fin",
    "strong-decompose-inf",
    "nat-to-bullet",
    "bullet-stage",
    "bullet-pipeline",
    "strong-lower-base",
    "strong-lower-combine",
    "veblen-seq",
    "veblen-tree",
)


def get_embedding(name: str, caps: Optional[Caps] = None, **params: Any) -> EmbedFn:
    """
    Factory function for the canned embeddings.

    Parameters may be given as values or as literals (strings); unknown
    parameters are ignored.

    Args:
        name: One of EMBEDDING_NAMES
        caps: Size caps for the domain descriptor (default: Caps())
        **params: Construction parameters, e.g. alpha="w^2" or t="(0 . .)"

    Returns:
        EmbedFn instance

    Raises:
        UnknownEmbedding: If the name is not registered
    """
    caps = caps or Caps()
    p: Dict[str, Any] = dict(params)

    if name == "seq-to-tree":
        alpha = _ord(p.get("alpha", 3))
        return EmbedFn(name, seq_to_tree, leq_w, leq_tree, seq_domain(alpha, caps), {"alpha": alpha})

    if name == "phi-to-gapseq":
        alpha = _ord(p.get("alpha", 2))
        return EmbedFn(name, lambda x: phi_to_gapseq(x, alpha), ord_leq, leq_w,
                       ordinal_domain(mk_phi(alpha, nat(0)), caps), {"alpha": alpha})

    if name == "weak-to-strong":
        alpha = _ord(p.get("alpha", 3))
        return EmbedFn(name, weak_to_strong, leq_w, leq_s, seq_domain(alpha, caps), {"alpha": alpha})

    if name == "strong-to-weak":
        alpha = _ord(p.get("alpha", 3))
        return EmbedFn(name, strong_to_weak, leq_s, leq_w, seq_domain(alpha, caps), {"alpha": alpha})

    if name in ("left-set-leaf", "left-set-root", "left-set-shift"):
        variant = LeftSetVariant(name.rsplit("-", 1)[1])
        alpha = _ord(p.get("alpha", 3))
        default_t = {"leaf": "leaf(1)", "root": "(0 (1 . .) .)", "shift": "(1 (2 . .) .)"}
        t = _tree(p.get("t", default_t[variant.value]))
        leaves = (None,)
        if variant is LeftSetVariant.LEAF:
            leaves = tuple(nat(i) for i in range(int(p.get("leaves", 3))))
        return left_set_embed(t, variant, alpha, leaves, caps)

    if name == "tree-label-split":
        alpha = _ord(p.get("alpha", "w+2"))
        left_strict = _flag(p.get("left_strict", False))
        return EmbedFn(name, lambda t: tree_label_split(t, alpha), leq_tree, leq_tree,
                       tree_domain(alpha, caps, left_strict=left_strict),
                       {"alpha": alpha, "left_strict": left_strict})

    if name == "strong-decompose-fin":
        alpha = _ord(p.get("alpha", 3))
        return EmbedFn(name, strong_decompose_fin, leq_s, pair_leq(leq_s, leq_w),
                       seq_domain(alpha, caps), {"alpha": alpha})

    if name == "strong-decompose-inf":
        alpha = _ord(p.get("alpha", "w^2"))
        return EmbedFn(name, strong_decompose_inf, leq_s,
                       pair_leq(leq_s, star_leq(decompose_inf_letter_leq)),
                       seq_domain(alpha, caps), {"alpha": alpha})

    if name == "nat-to-bullet":
        return nat_to_bullet_embed(caps)

    if name == "bullet-stage":
        n = p.get("n")
        return bullet_stage(nat_to_bullet_embed(caps), OMEGA, ONE,
                            None if n is None else int(n), caps)

    if name == "bullet-pipeline":
        return bullet_pipeline(caps)

    if name in ("strong-lower-base", "strong-lower-combine"):
        gamma = _ord(p.get("gamma", 1))
        delta = _ord(p.get("delta", "w"))
        base_alpha = _ord(p.get("base", "w"))
        bound = add(omega_pow(gamma), delta)
        base = strong_lower_base(singleton_embed(base_alpha, bound, caps=caps), gamma,
                                 base_alpha, delta, caps)
        if name == "strong-lower-base":
            return base
        alpha = _ord(p.get("alpha", pow(base_alpha, omega_pow(gamma))))
        beta = _ord(p.get("beta", "w"))
        inner = singleton_embed(beta, delta, strong=True, caps=caps)
        return strong_lower_combine(base, inner, gamma, delta, alpha, beta, caps)

    if name in ("veblen-seq", "veblen-tree"):
        alpha = _ord(p.get("alpha", 1))
        if name == "veblen-seq":
            return veblen_lower(singleton_embed(OMEGA, OMEGA, caps=caps), alpha,
                                VeblenTarget.SEQ, OMEGA, OMEGA, caps)
        return veblen_lower(node_embed(OMEGA, caps), alpha, VeblenTarget.TREE, OMEGA, OMEGA, caps)

    raise UnknownEmbedding(f"Unknown embedding: {name}. "
                           f"Valid embeddings: {', '.join(EMBEDDING_NAMES)}")


__all__ = [
    "Caps",
    "Domain",
    "EMBEDDING_NAMES",
    "EmbedFn",
    "LeftSetVariant",
    "Pair",
    "Tagged",
    "VeblenTarget",
    "bullet_pipeline",
    "bullet_stage",
    "bullet_to_weak",
    "cut_below",
    "decompose_inf_letter_leq",
    "encode_low_start",
    "get_embedding",
    "left_set_embed",
    "nat_to_bullet",
    "nat_to_bullet_embed",
    "node_embed",
    "ord_leq",
    "ordinal_domain",
    "pair_leq",
    "phi_to_gapseq",
    "root_spine",
    "seq_domain",
    "seq_to_tree",
    "show",
    "singleton_embed",
    "stage_count",
    "star_leq",
    "strong_decompose_fin",
    "strong_decompose_inf",
    "strong_lower_base",
    "strong_lower_combine",
    "strong_to_weak",
    "tagged_leq",
    "tree_domain",
    "tree_label_split",
    "veblen_lower",
    "weak_to_strong",
    "zeros_embed",
]
