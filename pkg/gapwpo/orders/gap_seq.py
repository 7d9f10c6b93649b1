"""
Gap-condition orders on finite ordinal sequences.

The strong order is decided by its recursive characterization, memoized
over suffix pairs. The weak order reduces to the strong one by prefixing
both sides with 0, and Gordeev's symmetric order coincides with the weak
one. The realizer definitions are kept as a brute-force oracle that the
harness uses to cross-check these reductions.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Optional, Sequence, Tuple

from gapwpo.errors import BoundMismatch, InputOutOfRange, NotDominated
from gapwpo.ordinals import ZERO, OrdTerm, add, lsub


@dataclass(frozen=True)
class GapSeq:
    """
    A finite sequence of ordinals below a bound.

    Attributes:
        members: The ordinals, in order
        bound: The ambient well order; every member lies below it
    """

    members: Tuple[OrdTerm, ...]
    bound: OrdTerm

    def __post_init__(self):
        members = tuple(self.members)
        for x in members:
            if not x < self.bound:
                raise InputOutOfRange(f"member {x} is not below bound {self.bound}")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return GapSeq(self.members[index], self.bound)
        return self.members[index]

    def __add__(self, other: "GapSeq") -> "GapSeq":
        _same_bound(self, other)
        return GapSeq(self.members + other.members, self.bound)

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.members) + "]"

    def with_bound(self, bound: OrdTerm) -> "GapSeq":
        return GapSeq(self.members, bound)


@dataclass(frozen=True)
class Realizer:
    """
    A strictly increasing index map witnessing a gap embedding.

    Attributes:
        map: Target index for each source index
    """

    map: Tuple[int, ...]

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.map, self.map[1:])):
            raise ValueError(f"realizer {self.map} is not strictly increasing")


class GapVariant(Enum):
    WEAK = "w"
    GORDEEV = "g"
    STRONG_REALIZER = "s"
    STRONG_RECURSIVE = "r"


def _same_bound(s: GapSeq, t: GapSeq) -> None:
    if s.bound != t.bound:
        raise BoundMismatch(f"bounds differ: {s.bound} vs {t.bound}")


def strong_leq_members(s: Sequence[OrdTerm], t: Sequence[OrdTerm]) -> bool:
    """
    Strong gap comparison on raw member tuples.

    R(i, j) holds when s[i:] embeds into t[j:]: either s[i:] is empty, or
    s[i] <= t[j] and s[i+1:] embeds into t[j+1:] or s[i:] embeds into
    t[j+1:]. Skipping t[j] still needs s[i] <= t[j].
    """
    n, m = len(s), len(t)
    # row[j] holds R(i+1, j) while row i is being filled
    below = [True] * (m + 1)
    for i in range(n - 1, -1, -1):
        row = [False] * (m + 1)
        for j in range(m - 1, -1, -1):
            row[j] = s[i] <= t[j] and (below[j + 1] or row[j + 1])
        below = row
    return below[0]


def leq_r(s: GapSeq, t: GapSeq) -> bool:
    """
    Strong gap order via its recursive definition.

    Raises:
        BoundMismatch: If s and t have different bounds
    """
    _same_bound(s, t)
    return strong_leq_members(s.members, t.members)


def leq_s(s: GapSeq, t: GapSeq) -> bool:
    """Strong gap order; coincides with the recursive one."""
    return leq_r(s, t)


def leq_w(s: GapSeq, t: GapSeq) -> bool:
    """Weak gap order: s <=_w t iff <0>*s <=_s <0>*t."""
    _same_bound(s, t)
    return strong_leq_members((ZERO,) + s.members, (ZERO,) + t.members)


def leq_g(s: GapSeq, t: GapSeq) -> bool:
    """Gordeev's symmetric gap order; identical to the weak order."""
    return leq_w(s, t)


_DECIDERS = {
    GapVariant.WEAK: leq_w,
    GapVariant.GORDEEV: leq_g,
    GapVariant.STRONG_REALIZER: leq_s,
    GapVariant.STRONG_RECURSIVE: leq_r,
}


def leq(s: GapSeq, t: GapSeq, variant: GapVariant) -> bool:
    """Decide the given variant."""
    return _DECIDERS[variant](s, t)


def _realizes(s: Sequence[OrdTerm], t: Sequence[OrdTerm], f: Tuple[int, ...],
              variant: GapVariant) -> bool:
    if any(not s[i] <= t[f[i]] for i in range(len(s))):
        return False
    for i in range(len(s) - 1):
        for j in range(f[i] + 1, f[i + 1]):
            if variant is GapVariant.GORDEEV:
                if not (s[i] <= t[j] or s[i + 1] <= t[j]):
                    return False
            elif not s[i + 1] <= t[j]:
                return False
    if variant is GapVariant.STRONG_REALIZER and s:
        if any(not s[0] <= t[j] for j in range(f[0])):
            return False
    return True


def _naive_recursive(s: Tuple[OrdTerm, ...], t: Tuple[OrdTerm, ...]) -> bool:
    if not s:
        return True
    if not t:
        return False
    return s[0] <= t[0] and (_naive_recursive(s[1:], t[1:]) or _naive_recursive(s, t[1:]))


def witness_realizer(s: GapSeq, t: GapSeq, variant: GapVariant) -> Optional[Realizer]:
    """
    Find the lexicographically first realizer of s <= t.

    Args:
        s: Source sequence
        t: Target sequence
        variant: Which gap clauses the realizer must satisfy; the recursive
            variant is checked as the strong realizer variant

    Returns:
        The realizer, or None if s does not embed
    """
    _same_bound(s, t)
    if variant is GapVariant.STRONG_RECURSIVE:
        variant = GapVariant.STRONG_REALIZER
    for f in combinations(range(len(t)), len(s)):
        if _realizes(s.members, t.members, f, variant):
            return Realizer(f)
    return None


def oracle_leq(s: GapSeq, t: GapSeq, variant: GapVariant) -> bool:
    """
    Brute-force decision by enumerating every strictly increasing map.

    Exponential; intended for short sequences only. The recursive variant
    is evaluated by unmemoized unfolding of its defining rules.

    Raises:
        BoundMismatch: If s and t have different bounds
    """
    _same_bound(s, t)
    if variant is GapVariant.STRONG_RECURSIVE:
        return _naive_recursive(s.members, t.members)
    return witness_realizer(s, t, variant) is not None


def split_weak(s: GapSeq, t_l: GapSeq, t_r: GapSeq) -> Tuple[GapSeq, GapSeq]:
    """
    Split s along a weak embedding into t_l * t_r.

    Takes the longest prefix s_l with s_l <=_w t_l whose remainder s_r
    satisfies s_r <=_w t_r, and s_r <=_s t_r when s_l is nonempty.

    Raises:
        NotDominated: If s is not weakly below t_l * t_r

    Example:
        split_weak([0,2], [0,1], [2]) -> ([0], [2])
    """
    if not leq_w(s, t_l + t_r):
        raise NotDominated(f"{s} is not below {t_l + t_r}")
    for k in range(len(s), -1, -1):
        s_l, s_r = s[:k], s[k:]
        if not leq_w(s_l, t_l) or not leq_w(s_r, t_r):
            continue
        if k > 0 and not leq_s(s_r, t_r):
            continue
        return s_l, s_r
    raise NotDominated(f"no split of {s} along {t_l} * {t_r}")


def higman_leq(s: Sequence, t: Sequence, elem_leq: Callable[[object, object], bool]) -> bool:
    """Plain subsequence embedding; greedy matching is complete."""
    i = 0
    for y in t:
        if i < len(s) and elem_leq(s[i], y):
            i += 1
    return i == len(s)


def shift_members(beta: OrdTerm, s: GapSeq, bound: OrdTerm) -> GapSeq:
    """The sequence beta + s: each member x replaced by beta + x, under a new bound."""
    return GapSeq(tuple(add(beta, x) for x in s.members), bound)


def unshift_members(beta: OrdTerm, s: GapSeq, bound: OrdTerm) -> GapSeq:
    """The sequence -beta + s, memberwise left subtraction."""
    return GapSeq(tuple(lsub(beta, x) for x in s.members), bound)
