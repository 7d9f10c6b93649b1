import random

import pytest

from gapwpo.errors import UnknownProfile, UnknownSuite
from gapwpo.harness import (
    SUITES,
    Carrier,
    CheckReport,
    DomainSpec,
    Suite,
    default_spec,
    get_suite,
    grow_bad_sequence,
    run_suite,
)
from gapwpo.literals import parse_ord, parse_seq, parse_tree
from gapwpo.ordinals import OMEGA, nat
from gapwpo.orders import inner_labels, leq_w
from gapwpo.reify import first_good_pair
from gapwpo.sampling import random_seq

SMALL = DomainSpec(alphabet=2, max_len=2, max_nodes=5, max_term_size=3, samples=20,
                   bad_sequences=2, reify_max_nodes=7)


class TestDomainSpec:
    def test_defaults(self):
        spec = DomainSpec()
        assert (spec.alphabet, spec.max_len, spec.seed) == (3, 4, 0)

    @pytest.mark.parametrize("field", ["alphabet", "max_nodes", "stall_budget"])
    def test_positive_fields(self, field):
        with pytest.raises(ValueError):
            DomainSpec(**{field: 0})

    def test_negative_samples(self):
        with pytest.raises(ValueError):
            DomainSpec(samples=-1)

    def test_from_config_overrides(self):
        spec = DomainSpec.from_config({"alphabet": 2, "unrelated": 1}, Carrier.TREES,
                                      alphabet=4, seed=None)
        assert spec.alphabet == 4
        assert spec.seed == 0
        assert spec.kind is Carrier.TREES

    def test_suite_defaults_layered(self):
        assert default_spec("seq-order-axioms").alphabet == 2
        assert default_spec("seq-equivalence").alphabet == 3
        assert default_spec("seq-equivalence", seed=9).seed == 9

    def test_acceptance_profile(self):
        spec = default_spec("ord-laws", "acceptance")
        assert (spec.samples, spec.max_term_size) == (100000, 8)
        assert default_spec("bullet-order", "acceptance").max_len == 5
        assert default_spec("reify-descent", "acceptance").bad_sequences == 1000
        assert default_spec("seq-equivalence", "acceptance") == default_spec("seq-equivalence")

    def test_profile_then_overrides(self):
        assert default_spec("ord-laws", "acceptance", samples=7).samples == 7

    def test_unknown_profile(self):
        with pytest.raises(UnknownProfile, match="Valid profiles: acceptance"):
            default_spec("ord-laws", "no-such-profile")


class TestRegistry:
    def test_names(self):
        assert set(SUITES) == {
            "ord-laws", "seq-order-axioms", "seq-equivalence", "seq-cancellation",
            "tree-order-axioms", "tree-closure", "bullet-order", "embed-reflection",
            "reify-descent", "motype-values",
        }

    def test_unknown(self):
        with pytest.raises(UnknownSuite, match="Valid suites"):
            get_suite("no-such-suite")

    def test_kind_follows_suite(self):
        assert get_suite("tree-closure", SMALL).spec.kind is Carrier.TREES


class TestRuns:
    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_small_spec_passes(self, name):
        report = run_suite(name, SMALL)
        assert report.passed, report.lines()
        assert report.cases > 0

    def test_deterministic(self):
        first = run_suite("seq-cancellation", SMALL)
        second = run_suite("seq-cancellation", SMALL)
        assert first == second

    def test_report_lines(self):
        report = CheckReport("demo", 3, ("a b", "c d"))
        assert not report.passed
        assert report.lines() == ["FAIL demo a b", "FAIL demo c d"]
        assert CheckReport("demo", 3).lines() == []


class _Planted(Suite):
    """Runs one planted law that fails on its argument."""

    name = "planted"

    def __init__(self, label, law, *args, ok=None):
        super().__init__(DomainSpec())
        self.case = (label, law, args, ok)

    def check(self):
        label, law, args, ok = self.case
        self.expect_law(label, law, *args, ok=ok)


class TestMinimization:
    def test_sequence_shrinks_to_single_member(self):
        suite = _Planted("no-two", lambda s: nat(2) not in s.members,
                         parse_seq("[0,2,1,2]", nat(3)))
        report = suite.run()
        assert report.cases == 1
        assert report.lines() == ["FAIL planted no-two [2]"]

    def test_tree_shrinks_to_offending_node(self):
        suite = _Planted("no-one", lambda t: nat(1) not in inner_labels(t),
                         parse_tree("(0 (1 . .) (0 . .))"))
        assert suite.run().failures == ("no-one (1 . .)",)

    def test_ordinal_drops_summands(self):
        suite = _Planted("finite", lambda a: a < OMEGA, parse_ord("w*2+3"))
        assert suite.run().failures == ("finite w",)

    def test_every_argument_shrinks(self):
        suite = _Planted("weak", leq_w, parse_seq("[1,1]", nat(3)), parse_seq("[0,2]", nat(3)))
        assert suite.run().failures == ("weak [1] []",)

    def test_known_outcome_is_trusted(self):
        suite = _Planted("holds", lambda s: True, parse_seq("[0,1]", nat(3)), ok=False)
        assert suite.run().failures == ("holds [0,1]",)

    def test_passing_law(self):
        report = _Planted("ok", lambda s: True, parse_seq("[0]", nat(3))).run()
        assert report.passed and report.cases == 1


class TestBadSequences:
    def test_growth_is_bad(self):
        spec = DomainSpec(seed=3)
        members = [nat(i) for i in range(3)]
        bad = grow_bad_sequence(spec, leq_w, 6,
                                lambda rng: random_seq(rng, members, nat(3), 3))
        assert 1 <= len(bad) <= 6
        assert first_good_pair(bad.elements, leq_w) is None

    def test_growth_is_reproducible(self):
        spec = DomainSpec(seed=5)
        members = [nat(i) for i in range(3)]

        def sample(rng):
            return random_seq(rng, members, nat(3), 3)

        first = grow_bad_sequence(spec, leq_w, 6, sample)
        second = grow_bad_sequence(spec, leq_w, 6, sample, random.Random(5))
        assert first.elements == second.elements


@pytest.mark.slow
class TestDefaultRuns:
    def test_equivalence_covers_all_pairs(self):
        report = run_suite("seq-equivalence")
        assert report.passed, report.lines()
        assert report.cases == 14641

    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_default_spec_passes(self, name):
        report = run_suite(name)
        assert report.passed, report.lines()


@pytest.mark.slow
class TestAcceptanceRuns:
    """Each suite at the scale of the acceptance profile."""

    def run(self, name):
        report = run_suite(name, default_spec(name, "acceptance"))
        assert report.passed, report.lines()
        return report

    def test_equivalence(self):
        assert self.run("seq-equivalence").cases == 121 * 121

    def test_cancellation(self):
        # five sampled laws per draw on top of the exhaustive head laws
        assert self.run("seq-cancellation").cases > 5 * 100000

    def test_ordinal_laws(self):
        assert self.run("ord-laws").cases > 100000

    def test_pinned_values(self):
        self.run("motype-values")

    def test_reflection(self):
        self.run("embed-reflection")

    def test_reification_descent(self):
        self.run("reify-descent")

    def test_bullet_order(self):
        self.run("bullet-order")
