"""
Ordinal notations below Gamma_0.

Terms, comparison, arithmetic and canonical printing.
"""

from gapwpo.ordinals.terms import (
    OMEGA,
    ONE,
    ZERO,
    OrdTerm,
    Ordering3,
    PrincipalTerm,
    cmp_ord,
    nat,
)
from gapwpo.ordinals.arithmetic import (
    add,
    base_decompose,
    cnf_head,
    hessenberg,
    is_epsilon,
    is_indecomposable,
    ldiv,
    lead_coefficient,
    lsub,
    mk_phi,
    mul,
    nat_product,
    omega_pow,
    pow,
    psi,
)
from gapwpo.ordinals.notation import print_ord

__all__ = [
    "OMEGA",
    "ONE",
    "ZERO",
    "OrdTerm",
    "Ordering3",
    "PrincipalTerm",
    "add",
    "base_decompose",
    "cmp_ord",
    "cnf_head",
    "hessenberg",
    "is_epsilon",
    "is_indecomposable",
    "ldiv",
    "lead_coefficient",
    "lsub",
    "mk_phi",
    "mul",
    "nat",
    "nat_product",
    "omega_pow",
    "pow",
    "print_ord",
    "psi",
]
