"""
The bullet order on sequences.

Higman's subsequence order extended by one rule: a prefix whose members
all lie strictly below the head y of the target may be dropped while
matching against <y> * t.
"""

from typing import Sequence

from gapwpo.errors import AlphabetMismatch
from gapwpo.orders.gap_seq import GapSeq


def bullet_leq_members(s: Sequence, t: Sequence) -> bool:
    """
    Decide s <= t over any totally ordered alphabet.

    B(i, j) holds when s[i:] <= t[j:]. With y = t[j], either s[i] <= y and
    B(i+1, j+1), or some prefix s[i:k] (possibly empty) lies strictly below
    y and B(k, j+1).
    """
    n, m = len(s), len(t)
    # nxt[i] holds B(i, j+1) while column j is being filled
    nxt = [False] * n + [True]
    for j in range(m - 1, -1, -1):
        y = t[j]
        col = [False] * n + [True]
        for i in range(n - 1, -1, -1):
            if s[i] <= y and nxt[i + 1]:
                col[i] = True
                continue
            k = i
            while True:
                if nxt[k]:
                    col[i] = True
                    break
                if k == n or not s[k] < y:
                    break
                k += 1
        nxt = col
    return nxt[0]


def bullet_leq(s: GapSeq, t: GapSeq) -> bool:
    """
    Bullet comparison of two sequences over the same alphabet.

    Raises:
        AlphabetMismatch: If the alphabets (bounds) differ
    """
    if s.bound != t.bound:
        raise AlphabetMismatch(f"alphabets differ: {s.bound} vs {t.bound}")
    return bullet_leq_members(s.members, t.members)
