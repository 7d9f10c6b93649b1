"""
Literal syntax for ordinals, sequences and trees.

    ordinal   0 | NAT | w | w^F | phi(T,T) | T+T | T*NAT | (T)
    sequence  [T,T,...] | []
    tree      . | leaf(X) | (B L R)

where F is an atom or a parenthesized ordinal and X is an ordinal, a
sequence or a tree. "*" binds tighter than "+"; whitespace is ignored.
Values print back through their __str__ methods in canonical form.
"""

from functools import reduce
from typing import Optional, Sequence, Tuple

import lark as L

from gapwpo.errors import GapWpoError, ParseError
from gapwpo.ordinals import OMEGA, ONE, ZERO, OrdTerm, add, mk_phi, mul, nat, omega_pow
from gapwpo.orders import UNIT_LEAF, GapSeq, LabTree, Leaf, Node

GRAMMAR = r"""
?ordinal: sum
sum: product ("+" product)*
product: atom ("*" NAT)*
?atom: NAT -> nat
     | "w" -> omega
     | "w" "^" atom -> wpow
     | "phi" "(" sum "," sum ")" -> phi
     | "(" sum ")"
sequence: "[" "]"
        | "[" sum ("," sum)* "]"
tree: "." -> unit_leaf
    | "leaf" "(" label ")" -> labeled_leaf
    | "(" sum tree tree ")" -> node
?label: sum | sequence | tree
NAT: /[0-9]+/
%import common.WS
%ignore WS
"""


def infer_bound(members: Sequence[OrdTerm]) -> OrdTerm:
    """Smallest bound containing all members: successor of the largest."""
    if not members:
        return ONE
    return add(max(members), ONE)


class _ToValues(L.Transformer):
    def nat(self, items):
        return nat(int(items[0]))

    def omega(self, items):
        return OMEGA

    def wpow(self, items):
        return omega_pow(items[0])

    def phi(self, items):
        return mk_phi(items[0], items[1])

    def sum(self, items):
        return reduce(add, items, ZERO)

    def product(self, items):
        head, *factors = items
        for k in factors:
            head = mul(head, nat(int(k)))
        return head

    def sequence(self, items):
        return tuple(x for x in items if x is not None)

    def unit_leaf(self, items):
        return UNIT_LEAF

    def labeled_leaf(self, items):
        label = items[0]
        if isinstance(label, tuple):
            label = GapSeq(label, infer_bound(label))
        return Leaf(label)

    def node(self, items):
        return Node(items[0], items[1], items[2])


_parser = L.Lark(GRAMMAR, start=["ordinal", "sequence", "tree", "label"])


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _parse(text: str, start: str):
    try:
        tree = _parser.parse(text, start=start)
        return _ToValues().transform(tree)
    except L.exceptions.VisitError as e:
        if isinstance(e.orig_exc, GapWpoError):
            raise e.orig_exc
        raise
    except L.exceptions.UnexpectedEOF:
        raise ParseError(f"unexpected end of {start} literal", _byte_offset(text, len(text)))
    except L.exceptions.UnexpectedToken as e:
        pos = len(text) if e.token.type == "$END" else e.token.start_pos
        raise ParseError(f"unexpected token {e.token!r}", _byte_offset(text, pos))
    except L.exceptions.UnexpectedCharacters as e:
        raise ParseError(f"unexpected character {text[e.pos_in_stream]!r}",
                         _byte_offset(text, e.pos_in_stream))
    except L.exceptions.UnexpectedInput as e:
        pos = getattr(e, "pos_in_stream", None)
        if pos is None or pos < 0:
            pos = len(text)
        raise ParseError(f"invalid {start} literal", _byte_offset(text, pos))


def parse_ord(text: str) -> OrdTerm:
    """
    Parse an ordinal literal into normal form.

    Raises:
        ParseError: With the byte offset of the failure

    Example:
        parse_ord("phi(0,phi(1,0))") -> phi(1,0)
    """
    return _parse(text, "ordinal")


def parse_members(text: str) -> Tuple[OrdTerm, ...]:
    """Parse a sequence literal into its members."""
    return _parse(text, "sequence")


def parse_seq(text: str, bound: Optional[OrdTerm] = None) -> GapSeq:
    """
    Parse a sequence literal.

    Args:
        text: Literal such as "[0,w,1]"
        bound: Bound for the sequence (default: successor of the largest member)
    """
    members = parse_members(text)
    return GapSeq(members, bound if bound is not None else infer_bound(members))


def parse_tree(text: str) -> LabTree:
    """Parse a tree literal such as "(0 (2 . .) .)"."""
    return _parse(text, "tree")


def parse_label(text: str):
    """Parse an ordinal, sequence or tree literal."""
    value = _parse(text, "label")
    if isinstance(value, tuple):
        return GapSeq(value, infer_bound(value))
    return value
