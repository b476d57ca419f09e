"""Tests for varietas.corpus module."""

import numpy as np
import pytest

from varietas import corpus
from varietas.bimodule import check_axioms, is_homomorphism
from varietas.corpus import (
    enumerate_bimodules,
    exchange_tuples,
    random_bimodules,
    random_quotient,
    random_regexes,
    set_partitions,
    small_lattices,
    small_monoids,
)
from varietas.exceptions import VarietasError
from varietas.languages import transition_monoid


class TestEnumeration:
    """Test cases for the exhaustive small corpora."""

    @pytest.mark.parametrize("size, expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15)])
    def test_set_partitions_are_bell_numbers(self, size, expected):
        assert len(list(set_partitions(size))) == expected

    def test_set_partitions_restricted_growth(self):
        assert list(set_partitions(0)) == [()]
        assert list(set_partitions(2)) == [(0, 0), (0, 1)]

    def test_small_monoids(self):
        """Test that the trivial monoid, ℤ/2ℤ and {1, 0} are found."""
        monoids = small_monoids(2)
        assert [m.size for m in monoids] == [1, 2, 2]
        assert all(m.is_valid() for m in monoids)

    def test_small_lattices(self):
        """Test one lattice per iso class: 1, 2, 3 and two of size 4."""
        assert sorted(lattice.size for lattice in small_lattices(4)) == [1, 2, 3, 4, 4]

    def test_enumerate_trivial_monoid(self):
        corpus = list(enumerate_bimodules(1, 2))
        assert len(corpus) == 3
        assert all(check_axioms(b).passed for b in corpus)


class TestRandomCorpora:
    """Test cases for the seeded random corpora."""

    def test_random_regexes_are_deterministic(self):
        first = random_regexes(np.random.default_rng(7), 4)
        second = random_regexes(np.random.default_rng(7), 4)
        assert [p for p, _ in first] == [p for p, _ in second]

    def test_random_regexes_respect_bounds(self):
        found = random_regexes(np.random.default_rng(3), 5, max_states=4, max_monoid=4)
        assert len({language for _, language in found}) == len(found)
        for _, language in found:
            assert language.states <= 4
            monoid, _ = transition_monoid(language)
            assert monoid.size <= 4

    def test_random_regexes_unbounded_monoid_by_default(self, mocker):
        """Test that no syntactic monoid is computed unless a monoid bound is given."""
        spy = mocker.spy(corpus, "transition_monoid")
        found = random_regexes(np.random.default_rng(3), 5, max_states=4)
        assert found
        spy.assert_not_called()

    def test_random_regexes_monoid_bound_filters(self):
        found = random_regexes(np.random.default_rng(5), 4, max_monoid=2)
        for _, language in found:
            assert transition_monoid(language)[0].size <= 2

    def test_random_bimodules(self, even):
        found = random_bimodules(np.random.default_rng(1), 5, [even])
        assert len(found) == 5
        assert all(check_axioms(b).passed for b in found)

    def test_random_quotient_is_homomorphism(self, diamond):
        rng = np.random.default_rng(2)
        for _ in range(5):
            hom = random_quotient(rng, diamond)
            assert is_homomorphism(hom)
            assert hom.is_surjective()

    def test_exchange_tuples(self, even, alternating):
        tuples = exchange_tuples(np.random.default_rng(4), 10, [even, alternating])
        assert len(tuples) == 10
        for item in tuples:
            assert item.hom.target == item.language.alphabet
            assert len(item.context.left) <= 3

    def test_exchange_tuples_need_languages(self):
        with pytest.raises(VarietasError):
            exchange_tuples(np.random.default_rng(0), 3, [])
