"""
Reflection checks and bad-sequence growth.
"""

import random
import time
from itertools import product
from typing import Any, Callable, Iterable, List, Optional, Tuple

from gapwpo.embeddings import EmbedFn, show
from gapwpo.errors import GapWpoError
from gapwpo.harness.base import CheckReport, DomainSpec
from gapwpo.reify import BadSeq
from gapwpo.utils.log_helpers import log

Pair = Tuple[Any, Any]


def _violates(f: EmbedFn, x: Any, y: Any) -> bool:
    try:
        return not f.reflects(x, y)
    except GapWpoError:
        return True


def minimize_pair(f: EmbedFn, x: Any, y: Any) -> Pair:
    """
    Greedily shrink a violating pair.

    A candidate from the domain's shrink replaces x (then y) whenever it
    is still in the domain and still violates reflection; stops when no
    candidate does.
    """
    domain = f.domain
    changed = True
    while changed:
        changed = False
        for cand in domain.shrink(x):
            if domain.contains(cand) and _violates(f, cand, y):
                x, changed = cand, True
                break
        if changed:
            continue
        for cand in domain.shrink(y):
            if domain.contains(cand) and _violates(f, x, cand):
                y, changed = cand, True
                break
    return x, y


def _case_literal(f: EmbedFn, x: Any, y: Any) -> str:
    try:
        fx, fy = show(f(x)), show(f(y))
    except GapWpoError as e:
        return f"{f.name} {show(x)} {show(y)} raised {type(e).__name__}: {e}"
    return f"{f.name} {show(x)} {show(y)} -> {fx} {fy}"


def sampled_pairs(f: EmbedFn, rng: random.Random, count: int) -> Iterable[Pair]:
    for _ in range(count):
        yield f.domain.sample(rng), f.domain.sample(rng)


def exhaustive_pairs(f: EmbedFn) -> Iterable[Pair]:
    if f.domain.enumerate is None:
        raise ValueError(f"{f.name} has no enumerable domain")
    elements = list(f.domain.enumerate())
    return product(elements, repeat=2)


def check_reflection(f: EmbedFn, pairs: Optional[Iterable[Pair]] = None,
                     spec: Optional[DomainSpec] = None, exhaustive: bool = False,
                     suite: str = "reflection", quiet: bool = True) -> CheckReport:
    """
    Check that f reflects the order on pairs from its domain.

    A pair (x, y) fails when f(x) <= f(y) in the target but x <= y fails
    in the source, or when f raises on it. Failures are minimized before
    they are reported.

    Args:
        f: Embedding under test
        pairs: Explicit pairs (default: sampled or enumerated from f.domain)
        spec: Seed and sample count for sampled pairs (default: DomainSpec())
        exhaustive: Enumerate all pairs of f.domain instead of sampling
        suite: Name recorded in the report
        quiet: If True, do not log progress

    Returns:
        CheckReport for the checked pairs
    """
    spec = spec or DomainSpec()
    if pairs is None:
        pairs = exhaustive_pairs(f) if exhaustive else sampled_pairs(f, spec.rng(), spec.samples)
    start = time.perf_counter()
    cases = 0
    failures: List[str] = []
    for x, y in pairs:
        cases += 1
        if _violates(f, x, y):
            x, y = minimize_pair(f, x, y)
            failures.append(_case_literal(f, x, y))
    wall = time.perf_counter() - start
    log("Reflection", f"{f.name}: {cases} pairs, {len(failures)} failures", quiet)
    return CheckReport(suite, cases, tuple(failures), wall)


def grow_bad_sequence(spec: DomainSpec, order: Callable[[Any, Any], bool], max_len: int,
                      sample: Callable[[random.Random], Any],
                      rng: Optional[random.Random] = None) -> BadSeq:
    """
    Grow a bad sequence by rejection sampling.

    A drawn element is appended when no earlier element is <= it; growth
    stops at max_len elements or after spec.stall_budget consecutive
    rejections.

    Args:
        spec: Supplies the seed and the stall budget
        order: Order on the carrier
        max_len: Longest sequence to grow, at least 1
        sample: Draws one element
        rng: Generator to draw from (default: spec.rng())

    Returns:
        BadSeq with at least one element
    """
    rng = rng or spec.rng()
    elements = [sample(rng)]
    stalled = 0
    while len(elements) < max_len and stalled < spec.stall_budget:
        x = sample(rng)
        if any(order(prev, x) for prev in elements):
            stalled += 1
            continue
        elements.append(x)
        stalled = 0
    return BadSeq(tuple(elements), order)
