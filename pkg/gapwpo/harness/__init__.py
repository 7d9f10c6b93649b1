"""
Property harness for gapwpo.

Suites are registered by name; each draws its cases from a DomainSpec
built from the harness section of the configuration, with per-suite
overrides layered on top.
"""

from typing import Any, Dict, Optional, Type

from gapwpo.config import get_config
from gapwpo.errors import UnknownSuite
from gapwpo.harness.base import Carrier, CheckReport, DomainSpec, Suite, implies
from gapwpo.harness.checks import (
    check_reflection,
    exhaustive_pairs,
    grow_bad_sequence,
    minimize_pair,
    sampled_pairs,
)
from gapwpo.harness.embedding_suites import EmbedReflectionSuite
from gapwpo.harness.ordinal_suites import MotypeValuesSuite, OrdLawsSuite
from gapwpo.harness.reify_suites import ReifyDescentSuite
from gapwpo.harness.sequence_suites import (
    BulletOrderSuite,
    SeqCancellationSuite,
    SeqEquivalenceSuite,
    SeqOrderAxiomsSuite,
)
from gapwpo.harness.tree_suites import TreeClosureSuite, TreeOrderAxiomsSuite
from gapwpo.sampling import enum_seqs, enum_trees

SUITES: Dict[str, Type[Suite]] = {
    cls.name: cls
    for cls in (
        OrdLawsSuite,
        SeqOrderAxiomsSuite,
        SeqEquivalenceSuite,
        SeqCancellationSuite,
        TreeOrderAxiomsSuite,
        TreeClosureSuite,
        BulletOrderSuite,
        EmbedReflectionSuite,
        ReifyDescentSuite,
        MotypeValuesSuite,
    )
}


def _suite_class(name: str) -> Type[Suite]:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(f"Unknown suite: {name}. Valid suites: {', '.join(SUITES)}") from None


def default_spec(name: str, profile: Optional[str] = None, **overrides: Any) -> DomainSpec:
    """
    The configured DomainSpec of a suite.

    Args:
        name: Registered suite name
        profile: Configured profile layered over the suite settings (e.g., "acceptance")
        **overrides: Values taking precedence over the configuration (None is skipped)

    Raises:
        UnknownSuite: If the name is not registered
        UnknownProfile: If the profile is not configured
    """
    cls = _suite_class(name)
    config = get_config().get_suite_config(name, profile)
    return DomainSpec.from_config(config, cls.kind, **overrides)


def get_suite(name: str, spec: Optional[DomainSpec] = None, quiet: bool = True) -> Suite:
    """
    Factory function to create suites.

    Args:
        name: Suite name (see SUITES)
        spec: Domain spec (default: from configuration)
        quiet: If True, do not log progress

    Returns:
        Suite instance

    Raises:
        UnknownSuite: If the name is not registered
    """
    cls = _suite_class(name)
    return cls(spec or default_spec(name), quiet=quiet)


def run_suite(name: str, spec: Optional[DomainSpec] = None, quiet: bool = True) -> CheckReport:
    """
    Run one suite deterministically from spec.seed.

    Example:
        run_suite("seq-equivalence").cases -> 14641
    """
    return get_suite(name, spec, quiet).run()


__all__ = [
    "Carrier",
    "CheckReport",
    "DomainSpec",
    "SUITES",
    "Suite",
    "check_reflection",
    "default_spec",
    "enum_seqs",
    "enum_trees",
    "exhaustive_pairs",
    "get_suite",
    "grow_bad_sequence",
    "implies",
    "minimize_pair",
    "run_suite",
    "sampled_pairs",
]
