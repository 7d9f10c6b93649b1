"""
Suites for the gap-condition orders and the bullet order.
"""

from itertools import product

from gapwpo.harness.base import Carrier, Suite, implies
from gapwpo.ordinals import ZERO, nat
from gapwpo.orders import (
    GapSeq,
    GapVariant,
    bullet_leq,
    bullet_leq_members,
    higman_leq,
    leq_g,
    leq_r,
    leq_s,
    leq_w,
    oracle_leq,
    split_weak,
)
from gapwpo.sampling import enum_seqs, random_seq

ORDERS = {"w": leq_w, "g": leq_g, "s": leq_s, "r": leq_r}


def _reflexive(leq):
    return lambda s: leq(s, s)


def _antisymmetric(leq):
    return lambda s, t: implies(leq(s, t) and leq(t, s), lambda: s == t)


def _transitive(leq):
    return lambda s, t, u: implies(leq(s, t) and leq(t, u), lambda: leq(s, u))


class SeqOrderAxiomsSuite(Suite):
    """Reflexivity, antisymmetry and transitivity of every gap order."""

    name = "seq-order-axioms"
    description = "partial order axioms for w, g, s and r"

    def check(self):
        seqs = list(enum_seqs(self.spec.alphabet, self.spec.max_len))
        for key, leq in ORDERS.items():
            for s in seqs:
                self.expect_law(f"{key} reflexive", _reflexive(leq), s)
            for s, t in product(seqs, repeat=2):
                self.expect_law(f"{key} antisymmetric", _antisymmetric(leq), s, t)
            for s, t, u in product(seqs, repeat=3):
                self.expect_law(f"{key} transitive", _transitive(leq), s, t, u)


class SeqEquivalenceSuite(Suite):
    """
    The reductions between the gap orders, against the brute-force oracle.

    One case per ordered pair: g agrees with w, r with s, w with s after
    prefixing both sides (by 0, or by 0 and any member on the right), and
    every decider with its realizer oracle.
    """

    name = "seq-equivalence"
    description = "w = g, s = r, w(s, t) = s(0*s, 0*t), oracle agreement"

    def check(self):
        alphabet, bound = self.spec.alphabet, nat(self.spec.alphabet)
        seqs = list(enum_seqs(alphabet, self.spec.max_len))
        zero = GapSeq((ZERO,), bound)
        heads = [GapSeq((nat(k),), bound) for k in range(alphabet)]

        def agree(s, t):
            w, st = leq_w(s, t), leq_s(s, t)
            return (
                leq_g(s, t) == w
                and leq_r(s, t) == st
                and all(leq_s(zero + s, head + t) == w for head in heads)
                and oracle_leq(s, t, GapVariant.WEAK) == w
                and oracle_leq(s, t, GapVariant.GORDEEV) == w
                and oracle_leq(s, t, GapVariant.STRONG_REALIZER) == st
                and oracle_leq(s, t, GapVariant.STRONG_RECURSIVE) == st
            )

        for s, t in product(seqs, repeat=2):
            self.expect_law("agreement", agree, s, t)


def _prefix(u, s, t):
    return implies(leq_s(s, t), lambda: leq_s(u + s, u + t))


def _weak_head(u, s, t):
    return implies(leq_w(u + s, u + t), lambda: leq_w(s, t))


def _strong_head(u, s, t):
    low = not t.members or all(t[0] < x for x in u.members)
    return implies(low and leq_s(u + s, u + t), lambda: leq_s(s, t))


def _concat(leq):
    def law(s_l, s_r, t_l, t_r):
        low = not s_r.members or all(s_r[0] <= x for x in t_l.members)
        return implies(low and leq_s(s_r, t_r) and leq(s_l, t_l),
                       lambda: leq(s_l + s_r, t_l + t_r))
    return law


def _tail(s_l, s_r, t_l, t_r):
    low = not t_r.members or all(t_r[0] < x for x in s_l.members)
    return implies(low and leq_s(s_l + s_r, t_l + t_r), lambda: leq_s(s_l, t_l))


def _padding(s, t, t_l, t_r):
    return implies(leq_w(s, t), lambda: leq_w(s, t_l + t + t_r))


def _split(s, t_l, t_r):
    if not leq_w(s, t_l + t_r):
        return True
    a, b = split_weak(s, t_l, t_r)
    return (a + b == s and leq_w(a, t_l) and leq_w(b, t_r)
            and (not a.members or leq_s(b, t_r)))


class SeqCancellationSuite(Suite):
    """Concatenation, cancellation, padding and splitting laws."""

    name = "seq-cancellation"
    description = "concatenation, head and tail removal, padding, weak splits"

    def check(self):
        alphabet, bound = self.spec.alphabet, nat(self.spec.alphabet)
        seqs = list(enum_seqs(alphabet, self.spec.max_len))
        for k in range(alphabet):
            u = GapSeq((nat(k),), bound)
            for s, t in product(seqs, repeat=2):
                self.expect_law("prefix", _prefix, u, s, t)
                self.expect_law("weak-head", _weak_head, u, s, t)
                self.expect_law("strong-head", _strong_head, u, s, t)

        pinned = not leq_s(GapSeq((nat(1),), nat(2)), GapSeq((ZERO, nat(1)), nat(2)))
        self.expect(pinned, lambda: "pinned [1] s [0,1]")

        # one extra member so that random draws reach beyond the enumerated domain
        wide = nat(alphabet + 1)
        members = [nat(k) for k in range(alphabet + 1)]
        rng = self.spec.rng()
        for _ in range(self.spec.samples):
            s_l, s_r, t_l, t_r = (random_seq(rng, members, wide, self.spec.max_len)
                                  for _ in range(4))
            self.expect_law("concat-weak", _concat(leq_w), s_l, s_r, t_l, t_r)
            self.expect_law("concat-strong", _concat(leq_s), s_l, s_r, t_l, t_r)
            self.expect_law("tail", _tail, s_l, s_r, t_l, t_r)
            self.expect_law("padding", _padding, s_l, s_r, t_l, t_r)
            self.expect_law("split", _split, s_l, t_l, t_r)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _bullet_splits(s, t_l, t_r) -> bool:
    if not bullet_leq(s, t_l + t_r):
        return True
    return any(bullet_leq(s[:k], t_l) and bullet_leq(s[k:], t_r)
               for k in range(len(s) + 1))


class BulletOrderSuite(Suite):
    """
    Transitivity and splitting of the bullet order, plus its rule-iv witness.

    The relation is decided once over all enumerated sequences and kept as
    one bitmask of upper neighbours per sequence. Transitivity is checked
    per related pair (s, t) against every u above t, and the split lemma
    per sequence t, cut point and s below t.
    """

    name = "bullet-order"
    kind = Carrier.BULLETS
    description = "bullet order transitivity and splits"

    def check(self):
        seqs = list(enum_seqs(self.spec.alphabet, self.spec.max_len))
        index = {s: i for i, s in enumerate(seqs)}
        codes = [tuple(m.finite_value() for m in s.members) for s in seqs]
        up = [sum(1 << j for j, y in enumerate(codes) if bullet_leq_members(x, y))
              for x in codes]
        down = [0] * len(seqs)
        for i, mask in enumerate(up):
            for j in _bits(mask):
                down[j] |= 1 << i

        for i, s in enumerate(seqs):
            self.expect_law("reflexive", lambda x: bullet_leq(x, x), s, ok=bool(up[i] >> i & 1))
            for j in _bits(up[i]):
                missing = up[j] & ~up[i]
                u = seqs[(missing & -missing).bit_length() - 1] if missing else seqs[j]
                self.expect_law("transitive", _transitive(bullet_leq), s, seqs[j], u,
                                ok=not missing)

        cuts = [[(index[s[:k]], index[s[k:]]) for k in range(len(s) + 1)] for s in seqs]
        for ti in range(len(seqs)):
            for left, right in cuts[ti]:
                for i in _bits(down[ti]):
                    ok = any(up[a] >> left & 1 and up[b] >> right & 1 for a, b in cuts[i])
                    self.expect_law("split", _bullet_splits, seqs[i], seqs[left], seqs[right],
                                    ok=ok)

        bound = nat(2)
        s = GapSeq((ZERO, ZERO, nat(1)), bound)
        t = GapSeq((nat(1), nat(1)), bound)
        self.expect(bullet_leq(s, t), lambda: f"rule-iv {s} {t}")
        self.expect(not higman_leq(s.members, t.members, lambda x, y: x <= y),
                    lambda: f"higman-rejects {s} {t}")
