"""Tests for workbench.suites module."""

from unittest.mock import patch

import pytest

from varietas.exceptions import VarietasError
from varietas.languages import transition_monoid
from workbench.config import LimitsConfig, WorkbenchConfig
from workbench.suites import SuiteResult, VerificationSuites


@pytest.fixture
def suites(small_config):
    return VerificationSuites(small_config)


class TestSuiteResult:
    """Test cases for SuiteResult."""

    def test_expect(self):
        result = SuiteResult("demo")
        result.expect(True, "never shown")
        result.expect(False, "shown")
        assert result.checked == 2
        assert result.failures == ["shown"]
        assert not result.passed


class TestVerificationSuites:
    """Test cases for VerificationSuites."""

    def test_registry(self, suites):
        assert suites.names == [
            "free-cdl",
            "diamond",
            "lemmas",
            "oracle",
            "reduction",
            "regularity",
            "duality",
            "exchange",
            "qfa",
            "birkhoff",
        ]

    def test_seed_override(self, small_config):
        assert VerificationSuites(small_config).seed == 0
        assert VerificationSuites(small_config, seed=11).seed == 11

    def test_streams_are_reproducible(self, small_config):
        first = VerificationSuites(small_config, seed=5).rng(3).integers(1000, size=4)
        second = VerificationSuites(small_config, seed=5).rng(3).integers(1000, size=4)
        assert first.tolist() == second.tolist()

    def test_regexes_are_shared(self, suites):
        assert suites.regexes is suites.regexes
        assert len(suites.regexes) <= 4

    def test_duality_corpus_has_no_monoid_bound(self, suites):
        with patch("workbench.suites.random_regexes", return_value=[]) as mock_regexes:
            assert suites.regexes == []
        assert "max_monoid" not in mock_regexes.call_args.kwargs

    def test_recognizer_corpus_fits_lattice_bound(self, small_config):
        config = WorkbenchConfig(
            limits=LimitsConfig(max_lattice_generators=3), corpus=small_config.corpus
        )
        suites = VerificationSuites(config)
        for _, language in suites.recognizer_regexes:
            assert transition_monoid(language)[0].size <= 3

    @pytest.mark.parametrize(
        "name", ["free-cdl", "diamond", "qfa", "exchange", "regularity", "duality", "reduction"]
    )
    def test_suite_passes(self, suites, name):
        result = suites.run(name)
        assert result.passed, result.failures
        assert result.checked > 0

    def test_free_cdl_respects_bound(self):
        config = WorkbenchConfig(limits=LimitsConfig(max_lattice_generators=2))
        result = VerificationSuites(config).run("free-cdl")
        assert result.passed
        # sizes for 0, 1 and 2 generators, two checks each, then the refusal
        assert result.checked == 7

    def test_aborted_suite_is_a_failure(self, suites):
        with patch.object(suites, "registry", {"diamond": _explode}):
            result = suites.run("diamond")
        assert not result.passed
        assert result.failures[0].startswith("aborted:")

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["lemmas", "oracle", "birkhoff"])
    def test_exhaustive_suite_passes(self, suites, name):
        result = suites.run(name)
        assert result.passed, result.failures


def _explode(result):
    raise VarietasError("corpus unavailable")
