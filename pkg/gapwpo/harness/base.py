"""
Base suite class for the gapwpo harness.

Provides the domain spec every suite draws its cases from, the report it
returns, and the bookkeeping shared by all suites.
"""

import random
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from gapwpo.embeddings import Caps
from gapwpo.errors import GapWpoError
from gapwpo.sampling import minimize_args
from gapwpo.utils.log_helpers import log


class Carrier(Enum):
    ORDINALS = "ordinals"
    SEQUENCES = "sequences"
    TREES = "trees"
    BULLETS = "bullets"
    TERMS = "terms"


@dataclass(frozen=True)
class DomainSpec:
    """
    What a suite enumerates or samples.

    Attributes:
        kind: Carrier the suite works on
        alphabet: Finite bound for members and inner labels
        max_len: Longest sequence
        max_nodes: Largest tree, leaves counted
        max_term_size: Largest syntactic size of ordinal terms
        seed: Seed for every random draw of the run
        samples: Number of sampled cases per property
        stall_budget: Consecutive rejections before bad-sequence growth stops
        bad_sequences: Number of bad sequences grown by the reification suite
        reify_max_nodes: Largest tree drawn for bad sequences
    """
    kind: Carrier = Carrier.SEQUENCES
    alphabet: int = 3
    max_len: int = 4
    max_nodes: int = 7
    max_term_size: int = 6
    seed: int = 0
    samples: int = 500
    stall_budget: int = 200
    bad_sequences: int = 20
    reify_max_nodes: int = 12

    def __post_init__(self):
        for name in ("alphabet", "max_nodes", "max_term_size", "stall_budget", "reify_max_nodes"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        for name in ("max_len", "samples", "bad_sequences"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must not be negative, got {getattr(self, name)}")

    @classmethod
    def from_config(cls, config: Dict[str, Any], kind: Carrier = Carrier.SEQUENCES,
                    **overrides: Any) -> "DomainSpec":
        """
        Build a spec from a harness config section.

        Args:
            config: Merged harness/suite configuration
            kind: Carrier of the suite
            **overrides: Values taking precedence over config (None is skipped)
        """
        known = {k: v for k, v in config.items() if k in cls.__dataclass_fields__}
        known.update({k: v for k, v in overrides.items() if v is not None})
        known["kind"] = kind
        return cls(**known)

    def with_kind(self, kind: Carrier) -> "DomainSpec":
        return replace(self, kind=kind)

    @property
    def caps(self) -> Caps:
        return Caps(self.alphabet, self.max_len, self.max_nodes, self.max_term_size)

    def rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass(frozen=True)
class CheckReport:
    """
    Outcome of one suite run.

    Attributes:
        suite: Suite name
        cases: Number of cases checked
        failures: Minimized counterexample literals, in case order
        wall_time: Seconds spent (not part of the printed report)
    """
    suite: str
    cases: int
    failures: Tuple[str, ...] = ()
    wall_time: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> List[str]:
        """The printed report: one FAIL line per failure."""
        return [f"FAIL {self.suite} {case}" for case in self.failures]


class Suite(ABC):
    """
    Abstract base class for harness suites.

    Subclasses implement check(), calling expect() or expect_law() once
    per case. Cases are drawn from self.spec only, so equal specs give
    equal reports.
    """

    name: str = ""
    kind: Carrier = Carrier.SEQUENCES
    description: str = ""

    def __init__(self, spec: DomainSpec, quiet: bool = True):
        """
        Initialize suite.

        Args:
            spec: Domain spec (its kind is replaced by the suite's carrier)
            quiet: If True, do not log progress
        """
        self.spec = spec.with_kind(self.kind)
        self.quiet = quiet
        self._cases = 0
        self._failures: List[str] = []

    def expect(self, ok: bool, case: Callable[[], str]) -> None:
        """Count one case; on failure record the literal built by case()."""
        self._cases += 1
        if not ok:
            self._fail(case())

    def expect_law(self, label: str, law: Callable[..., bool], *args: Any,
                   ok: Optional[bool] = None,
                   render: Optional[Callable[..., str]] = None) -> None:
        """
        Count one case of a law; on failure record it minimized.

        The failing arguments are shrunk greedily (see sampling.minimize_args)
        while the law keeps the same outcome, a library error counting as
        its own outcome. The literal is the label followed by the shrunk
        arguments.

        Args:
            label: Law name, first word of the literal
            law: Predicate over the arguments
            *args: Arguments of this case
            ok: Outcome of law(*args) when the caller already knows it
            render: Formats the arguments (default: space-separated literals)
        """
        self._cases += 1
        outcome = _outcome(law, args) if ok is None else ok
        if outcome is True:
            return
        args = minimize_args(lambda *xs: _outcome(law, xs) is outcome, args)
        shown = render(*args) if render else " ".join(str(x) for x in args)
        self._fail(f"{label} {shown}")

    def _fail(self, literal: str) -> None:
        self._failures.append(literal)
        log(self.name, f"failure: {literal}", self.quiet)

    def absorb(self, report: CheckReport) -> None:
        """Add the cases and failures of a nested report."""
        self._cases += report.cases
        self._failures.extend(report.failures)

    @abstractmethod
    def check(self) -> None:
        """Run every case of the suite."""
        pass

    def run(self) -> CheckReport:
        """
        Run the suite once.

        Returns:
            CheckReport with the counted cases and failures
        """
        self._cases = 0
        self._failures = []
        log(self.name, f"starting ({self.description})", self.quiet)
        start = time.perf_counter()
        self.check()
        wall = time.perf_counter() - start
        report = CheckReport(self.name, self._cases, tuple(self._failures), wall)
        log(self.name, f"{report.cases} cases, {len(report.failures)} failures, {wall:.2f}s",
            self.quiet)
        return report


def implies(premise: bool, conclusion: Callable[[], bool]) -> bool:
    """premise -> conclusion, evaluating the conclusion lazily."""
    return not premise or conclusion()


def _outcome(law: Callable[..., bool], args: Sequence[Any]) -> Optional[bool]:
    """law(*args) as a bool, or None when it raises a library error."""
    try:
        return bool(law(*args))
    except GapWpoError:
        return None
