#!/usr/bin/env python3
"""
gapwpo command line

Compares ordinals, gap sequences and trees, applies embeddings, reifies
bad sequences and runs the property harness. Relations are reported
through the exit code: 0 if the relation holds, 1 if it fails, 2 on
parse or usage errors.
"""

import argparse
import sys
from typing import List, Optional

from gapwpo.config import get_config
from gapwpo.embeddings import Caps, get_embedding, show
from gapwpo.errors import GapWpoError, NotBad
from gapwpo.harness import default_spec, run_suite
from gapwpo.literals import infer_bound, parse_ord, parse_seq, parse_tree
from gapwpo.motype import F, G, H
from gapwpo.ordinals import add, cmp_ord, hessenberg, lsub, mul, nat_product
from gapwpo.ordinals import pow as ord_pow
from gapwpo.orders import GapVariant, inner_labels, is_left_strict, leq, leq_tree, witness_realizer
from gapwpo.reify import reify_prefixes

ARITH = {
    "add": add,
    "mul": mul,
    "pow": ord_pow,
    "nsum": hessenberg,
    "nprod": nat_product,
    "lsub": lsub,
}

MOTYPES = {"F": F, "G": G, "H": H}


def cmd_cmp_ord(args) -> int:
    print(cmp_ord(parse_ord(args.a), parse_ord(args.b)).symbol)
    return 0


def cmd_normalize(args) -> int:
    print(parse_ord(args.term))
    return 0


def cmd_arith(args) -> int:
    print(ARITH[args.op](parse_ord(args.a), parse_ord(args.b)))
    return 0


def cmd_motype(args) -> int:
    print(MOTYPES[args.fn](parse_ord(args.term)))
    return 0


def cmd_cmp_seq(args) -> int:
    s, t = parse_seq(args.s), parse_seq(args.t)
    bound = parse_ord(args.bound) if args.bound else max(s.bound, t.bound)
    s, t = s.with_bound(bound), t.with_bound(bound)
    variant = GapVariant(args.order)
    if not leq(s, t, variant):
        return 1
    if args.verbose:
        realizer = witness_realizer(s, t, variant)
        print(" ".join(str(i) for i in realizer.map))
    return 0


def cmd_cmp_tree(args) -> int:
    s, t = parse_tree(args.s), parse_tree(args.t)
    if args.left_strict:
        for label, tree in (("first", s), ("second", t)):
            if not is_left_strict(tree):
                raise GapWpoError(f"{label} tree {tree} is not left-strict")
    return 0 if leq_tree(s, t) else 1


def _params(pairs: List[str]) -> dict:
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise GapWpoError(f"parameter {pair!r} is not of the form key=value")
        params[key] = value
    return params


def cmd_embed(args) -> int:
    caps = Caps.from_config(get_config().get_harness_config())
    f = get_embedding(args.name, caps, **_params(args.param))
    x = f.domain.read(args.literal)
    if not f.domain.contains(x):
        raise GapWpoError(f"{args.literal} is not in the domain of {f.name}: {f.domain.description}")
    print(show(f(x)))
    return 0


def cmd_reify(args) -> int:
    trees = [parse_tree(part.strip()) for part in args.trees.split(";") if part.strip()]
    alpha = parse_ord(args.alpha) if args.alpha else infer_bound(
        [b for t in trees for b in inner_labels(t)])
    try:
        values = reify_prefixes(trees, alpha)
    except NotBad as e:
        print(f"[ERROR] Not a bad sequence: {e}", file=sys.stderr)
        return 1
    for value in values:
        print(value)
    if any(not b < a for a, b in zip(values, values[1:])):
        print("[ERROR] Reified values do not descend strictly", file=sys.stderr)
        return 1
    return 0


def cmd_check(args) -> int:
    spec = default_spec(args.suite, args.profile, seed=args.seed, alphabet=args.alphabet,
                        max_len=args.len, max_nodes=args.nodes, samples=args.samples,
                        max_term_size=args.max_term_size, bad_sequences=args.bad_sequences)
    report = run_suite(args.suite, spec, quiet=not args.verbose)
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="app.py",
        description="gapwpo - gap-condition well partial orders",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python app.py cmp-ord 0 1                      Compare two ordinals
  python app.py arith pow w 2                    Ordinal exponentiation
  python app.py motype G 2                       Maximal order type of weak gap sequences
  python app.py cmp-seq --order s "[1]" "[0,1]"  Exit 0 if the strong gap order holds
  python app.py embed seq-to-tree "[2,0,1,0,3]" --param alpha=4
  python app.py reify --alpha 1 "(0 . .); ."     Reify a bad sequence of trees
  python app.py check seq-equivalence            Run a harness suite
  python app.py check --profile acceptance ord-laws
        """
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cmp-ord", help="three-way ordinal comparison")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_cmp_ord)

    p = sub.add_parser("normalize", help="print the normal form of a term")
    p.add_argument("term")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("arith", help="ordinal arithmetic")
    p.add_argument("op", choices=list(ARITH))
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_arith)

    p = sub.add_parser("motype", help="maximal order types F, G and H")
    p.add_argument("fn", choices=list(MOTYPES))
    p.add_argument("term")
    p.set_defaults(func=cmd_motype)

    p = sub.add_parser("cmp-seq", help="decide a gap order on sequences")
    p.add_argument("--order", choices=[v.value for v in GapVariant], default="w")
    p.add_argument("--bound", help="common bound (default: inferred from both sequences)")
    p.add_argument("--verbose", action="store_true", help="print the realizer indices")
    p.add_argument("s")
    p.add_argument("t")
    p.set_defaults(func=cmd_cmp_seq)

    p = sub.add_parser("cmp-tree", help="decide tree embeddability")
    p.add_argument("--left-strict", action="store_true",
                   help="reject trees that are not left-strict")
    p.add_argument("s")
    p.add_argument("t")
    p.set_defaults(func=cmd_cmp_tree)

    p = sub.add_parser("embed", help="apply a registered embedding")
    p.add_argument("name")
    p.add_argument("literal")
    p.add_argument("--param", action="append", default=[], metavar="K=V",
                   help="construction parameter (repeatable)")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("reify", help="reify a bad sequence of trees")
    p.add_argument("--alpha", help="label bound (default: inferred)")
    p.add_argument("trees", help="trees separated by ';'")
    p.set_defaults(func=cmd_reify)

    p = sub.add_parser("check", help="run a harness suite")
    p.add_argument("suite")
    p.add_argument("--seed", type=int)
    p.add_argument("--alphabet", type=int)
    p.add_argument("--len", type=int)
    p.add_argument("--nodes", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--max-term-size", type=int)
    p.add_argument("--bad-sequences", type=int)
    p.add_argument("--profile", help="configured preset, e.g. acceptance")
    p.add_argument("--verbose", action="store_true", help="log progress on stderr")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the subcommand and return its exit code."""
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GapWpoError, ValueError) as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
