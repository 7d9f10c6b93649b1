"""
Order reflection of every registered embedding.
"""

from dataclasses import replace

from gapwpo.embeddings import EMBEDDING_NAMES, get_embedding
from gapwpo.harness.base import Carrier, Suite
from gapwpo.harness.checks import check_reflection

# Small enough to check on all pairs
EXHAUSTIVE = ("seq-to-tree", "weak-to-strong", "strong-to-weak", "phi-to-gapseq")

PHI_TERM_SIZE = 5


class EmbedReflectionSuite(Suite):
    """Every canned embedding reflects the order, exhaustively where the domain is small."""

    name = "embed-reflection"
    kind = Carrier.SEQUENCES
    description = "order reflection of all registered embeddings"

    def check(self):
        for emb_name in EMBEDDING_NAMES:
            caps = self.spec.caps
            if emb_name == "phi-to-gapseq":
                caps = replace(caps, max_term_size=min(caps.max_term_size, PHI_TERM_SIZE))
            f = get_embedding(emb_name, caps)
            report = check_reflection(f, spec=self.spec, exhaustive=emb_name in EXHAUSTIVE,
                                      suite=self.name, quiet=self.quiet)
            self.absorb(report)
