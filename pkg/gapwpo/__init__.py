"""
gapwpo - gap-condition well partial orders.

Ordinal notations below Gamma_0, decision procedures for gap orders on
sequences and label-constrained trees, quasi-embeddings between them, a
reification of tree bad sequences, and closed-form maximal order types.
"""

__version__ = "0.1.0"
