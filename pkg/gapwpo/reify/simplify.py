"""
Simplified types and the maps into them.

For a term a of type A, simplify_type(A, a) names a type that the terms
b with a not <= b quasi-embed into, and e(A, a, b) is that embedding.
Every clause lowers otype, which is what makes bad sequences reifiable.
"""

from typing import List

from gapwpo.errors import DominancePreconditionViolated, TypeMismatch
from gapwpo.orders import Leaf, Node
from gapwpo.reify.terms import (
    Inj,
    OrdElem,
    PairTerm,
    RTerm,
    SeqTerm,
    check_term,
    iota,
    leq_rterm,
)
from gapwpo.reify.types import B, E, L, Prod, RType, Star, Sum, sum3


def simplify_type(a: RType, x: RTerm) -> RType:
    """
    The type A(x).

    Args:
        a: A type
        x: A term of that type

    Returns:
        The simplified type

    Raises:
        TypeMismatch: If x is not a term of a

    Example:
        simplify_type(L(5), OrdElem(3)) -> L(3)
    """
    check_term(a, x)
    return _simplify(a, x)


def _simplify(a: RType, x: RTerm) -> RType:
    if isinstance(a, L):
        return L(x.value)
    if isinstance(a, B):
        if isinstance(x, Leaf):
            return B(a.bound, _simplify(a.leaf, x.label))
        lab = L(a.bound)
        return B(x.inner, Star(sum3(a.leaf,
                                    Prod(lab, _simplify(a, x.left)),
                                    Prod(lab, _simplify(a, x.right)))))
    if isinstance(a, Sum):
        if x.tag == 0:
            return Sum(_simplify(a.left, x.value), a.right)
        return Sum(a.left, _simplify(a.right, x.value))
    if isinstance(a, Prod):
        return Sum(Prod(_simplify(a.left, x.left), a.right),
                   Prod(a.left, _simplify(a.right, x.right)))
    if isinstance(a, Star):
        if not x.items:
            return E()
        head = Star(_simplify(a.elem, x.items[0]))
        return Sum(head, Prod(Prod(head, a.elem), _simplify(a, SeqTerm(x.items[1:]))))
    raise TypeMismatch(f"type {a} has no terms")


def e(a: RType, x: RTerm, y: RTerm) -> RTerm:
    """
    Map y into simplify_type(a, x), reflecting the order.

    For terms y, z with x not <= y and x not <= z, e(a, x, y) <= e(a, x, z)
    implies y <= z.

    Args:
        a: A type
        x: The excluded term
        y: A term with x not <= y

    Returns:
        A term of simplify_type(a, x)

    Raises:
        TypeMismatch: If x or y is not a term of a
        DominancePreconditionViolated: If x <= y

    Example:
        e(L(5), OrdElem(3), OrdElem(1)) -> OrdElem(1)
    """
    check_term(a, x)
    check_term(a, y)
    if leq_rterm(x, y):
        raise DominancePreconditionViolated(f"{x} <= {y}, so {y} is not in the domain")
    return _e(a, x, y)


def _e(a: RType, x: RTerm, y: RTerm) -> RTerm:
    if isinstance(a, L):
        return y
    if isinstance(a, B):
        return _e_tree(a, x, y)
    if isinstance(a, Sum):
        if x.tag != y.tag:
            return y
        side = a.left if x.tag == 0 else a.right
        return Inj(x.tag, _e(side, x.value, y.value))
    if isinstance(a, Prod):
        if not leq_rterm(x.left, y.left):
            return Inj(0, PairTerm(_e(a.left, x.left, y.left), y.right))
        return Inj(1, PairTerm(y.left, _e(a.right, x.right, y.right)))
    return _e_star(a, x, y)


def _e_tree(a: B, s, t):
    if isinstance(s, Leaf):
        if isinstance(t, Leaf):
            return Leaf(_e(a.leaf, s.label, t.label))
        return Node(t.inner, _e_tree(a, s, t.left), _e_tree(a, s, t.right))
    if isinstance(t, Node) and t.inner < s.inner:
        return Node(t.inner, _e_tree(a, s, t.left), _e_tree(a, s, t.right))
    return Leaf(SeqTerm(tuple(_spine(a, s, t))))


def _spine(a: B, s: Node, t) -> List[RTerm]:
    # every inner label of t is >= the root label of s
    out: List[RTerm] = []
    while isinstance(t, Node):
        if not leq_rterm(s.left, t.left):
            out.append(iota(1, PairTerm(OrdElem(t.inner), _e_tree(a, s.left, t.left))))
            t = t.right
        else:
            out.append(iota(2, PairTerm(OrdElem(t.inner), _e_tree(a, s.right, t.right))))
            t = t.left
    out.append(iota(0, t.label))
    return out


def _e_star(a: Star, x: SeqTerm, y: SeqTerm) -> RTerm:
    head, rest = x.items[0], x.items[1:]
    for i, item in enumerate(y.items):
        if leq_rterm(head, item):
            before = SeqTerm(tuple(_e(a.elem, head, z) for z in y.items[:i]))
            tail = _e(a, SeqTerm(rest), SeqTerm(y.items[i + 1:]))
            return Inj(1, PairTerm(PairTerm(before, item), tail))
    return Inj(0, SeqTerm(tuple(_e(a.elem, head, z) for z in y.items)))
