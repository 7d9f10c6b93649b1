#!/usr/bin/env python3
"""
gapwpo Demo Script

Walks through the notation system, the gap orders, tree embedding, the
embeddings between them, reification and the maximal order types.
"""

import sys

from gapwpo.embeddings import get_embedding, show
from gapwpo.literals import parse_ord, parse_seq, parse_tree
from gapwpo.motype import F, G, H, higman_star
from gapwpo.ordinals import add, hessenberg, lsub, mul, psi
from gapwpo.ordinals import pow as ord_pow
from gapwpo.orders import bullet_leq, higman_leq, leq_s, leq_tree, leq_w, split_weak
from gapwpo.reify import E, L, OrdElem, Star, otype, reify_prefixes, simplify_type
from gapwpo.sampling import enum_seqs, enum_trees


def banner(title: str) -> None:
    print("=" * 64)
    print(title)
    print("=" * 64)
    print()


def demo_ordinals():
    """Arithmetic on terms below Gamma_0."""
    banner("Ordinal Notations Demo")

    a, b = parse_ord("w^2+w*3+1"), parse_ord("w^w")
    print(f"a = {a}, b = {b}")
    print(f"  a + b   = {add(a, b)}")
    print(f"  b + a   = {add(b, a)}")
    print(f"  a # b   = {hessenberg(a, b)}")
    print(f"  a * w   = {mul(a, parse_ord('w'))}")
    print(f"  w ^ a   = {ord_pow(parse_ord('w'), a)}")
    print(f"  -a + (a + b) = {lsub(a, add(a, b))}")
    print(f"  psi(1, 1)    = {psi(parse_ord('1'), parse_ord('1'))}")
    print(f"  phi(1,0) < phi(1,1)? {parse_ord('phi(1,0)') < parse_ord('phi(1,1)')}")
    print()


def demo_sequences():
    """The gap orders disagree exactly where the gap condition bites."""
    banner("Gap Sequences Demo")

    pairs = [("[1]", "[0,1]"), ("[0,1]", "[1,0,1]"), ("[1,0]", "[0,1]"), ("[0,0,1]", "[1,1]")]
    for s_text, t_text in pairs:
        s, t = parse_seq(s_text, parse_ord("2")), parse_seq(t_text, parse_ord("2"))
        higman = higman_leq(s.members, t.members, lambda x, y: x <= y)
        print(f"  {s} vs {t}: weak={leq_w(s, t)} strong={leq_s(s, t)} "
              f"higman={higman} bullet={bullet_leq(s, t)}")
    print()

    s = parse_seq("[0,1]", parse_ord("2"))
    t_l, t_r = parse_seq("[1]", parse_ord("2")), parse_seq("[0,1]", parse_ord("2"))
    s_l, s_r = split_weak(s, t_l, t_r)
    print(f"split_weak({s}, {t_l}, {t_r}) -> {s_l} | {s_r}")
    print(f"sequences below 3 of length <= 4: {sum(1 for _ in enum_seqs(3, 4))}")
    print()


def demo_trees():
    """Embeddability of ascending trees."""
    banner("Ascending Trees Demo")

    s = parse_tree("(0 . (1 . .))")
    t = parse_tree("(0 (0 . .) (1 (2 . .) .))")
    print(f"  {s} <= {t}? {leq_tree(s, t)}")
    print(f"  {t} <= {s}? {leq_tree(t, s)}")
    print(f"left-strict trees, labels < 2, <= 3 nodes: "
          f"{', '.join(str(u) for u in enum_trees(2, 3, True))}")
    print()


def demo_embeddings():
    """A few registered embeddings on sample inputs."""
    banner("Embeddings Demo")

    cases = [
        ("seq-to-tree", {"alpha": "4"}, "[2,0,1,0,3]"),
        ("strong-to-weak", {}, "[2,0,1]"),
        ("bullet-stage", {"n": "2"}, "w*2+3"),
        ("phi-to-gapseq", {}, "phi(1,0)"),
    ]
    for name, params, literal in cases:
        f = get_embedding(name, **params)
        print(f"  {name}({literal}) = {show(f(f.domain.read(literal)))}")
    print()


def demo_reify():
    """Reified values drop along a bad sequence."""
    banner("Reification Demo")

    print(f"otype(E*)  = {otype(Star(E()))}")
    print(f"L(5) simplified by 3 = {simplify_type(L(parse_ord('5')), OrdElem(parse_ord('3')))}")
    trees = [parse_tree(x) for x in ("(1 (1 . .) .)", "(1 . .)", "(0 (0 . .) .)", "(0 . .)")]
    for k, value in enumerate(reify_prefixes(trees, parse_ord("2")), start=1):
        print(f"  prefix {k}: {value}")
    print()


def demo_motype():
    """Closed forms of the maximal order types."""
    banner("Maximal Order Types Demo")

    for text in ("0", "1", "2", "3", "w", "w+1", "w^2"):
        a = parse_ord(text)
        print(f"  alpha={text:4} F={F(a)}  G={G(a)}  H={H(a)}")
    print(f"  higman_star(3) = {higman_star(parse_ord('3'))}")
    print()


def main():
    """Run all demos"""

    demos = {
        "ordinals": demo_ordinals,
        "sequences": demo_sequences,
        "trees": demo_trees,
        "embeddings": demo_embeddings,
        "reify": demo_reify,
        "motype": demo_motype,
    }

    if len(sys.argv) > 1:
        demo_name = sys.argv[1]
        if demo_name in demos:
            demos[demo_name]()
        else:
            print(f"Unknown demo: {demo_name}")
            print(f"Available demos: {', '.join(demos.keys())}")
            sys.exit(1)
    else:
        for demo in demos.values():
            demo()

        print("\n" + "=" * 64)
        print("All demos completed!")
        print("=" * 64)
        print()
        print("To run individual demos:")
        for name in demos:
            print(f"  python demo.py {name}")
        print()


if __name__ == "__main__":
    main()
