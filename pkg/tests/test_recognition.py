"""Tests for recognition and the U-quotient checker."""

import pytest

from varietas.bimodule import (
    FreeHomSpec,
    check_axioms,
    is_reduced,
    is_star_generated,
    recognizer_from_monoid,
)
from varietas.enums import Provenance
from varietas.exceptions import AlphabetError, StructureError
from varietas.languages import Alphabet, Machine, transition_monoid
from varietas.order import TWO, Fdl
from varietas.recognition import (
    hom_machine,
    languages_by_join_prime,
    minimal_recognizer,
    rec_of_uquotient,
    recognized_languages,
    recognizes,
    uquotient_of_hom,
)
from varietas.regex import compile_regex
from varietas.uquotient import UQuotient, check_uquotient, factor_map, lifting
from varietas.varieties import derivative_closure, quotient_order


@pytest.fixture
def parity_hom(diamond):
    return FreeHomSpec.of("a", diamond, {"a": 1})


@pytest.fixture
def counter():
    """States for |w| = 0, 1 and ≥ 2 over {a}."""
    return Machine(Alphabet.of("a"), 0, ((1,), (2,), (2,)))


class TestHomMachine:
    """Test cases for the machine of a free hom."""

    def test_parity(self, parity_hom):
        machine, elements = hom_machine(parity_hom)
        assert machine.size == 2
        assert elements == [0, 1]
        assert machine.run("aaa") == 1

    def test_identity_letter(self, diamond):
        machine, elements = hom_machine(FreeHomSpec.of("a", diamond, {"a": 0}))
        assert machine.size == 1
        assert elements == [0]


class TestRecognition:
    """Test cases for recognized languages."""

    def test_recognizes_parity(self, parity_hom, even, odd):
        assert recognizes(parity_hom, even)
        assert recognizes(parity_hom, odd)
        assert not recognizes(parity_hom, compile_regex("a*"))

    def test_alphabet_mismatch(self, parity_hom):
        with pytest.raises(AlphabetError):
            recognizes(parity_hom, compile_regex("(ab)*"))

    def test_uquotient_of_hom(self, parity_hom, even, odd):
        """Test that the ⋄-component recovers the same languages."""
        quotient = uquotient_of_hom(parity_hom)
        assert quotient.provenance is Provenance.FROM_BIMODULE
        assert quotient.codomain.size == 4
        assert rec_of_uquotient(quotient) == {even, odd}
        assert check_uquotient(quotient).passed


class TestMinimalRecognizer:
    """Test cases for the minimal reduced recognizer."""

    @pytest.mark.parametrize("pattern", ["(aa)*", "(ab)*", "a*b*", "a(a|b)*", "∅"])
    def test_recognizer_properties(self, pattern):
        language = compile_regex(pattern)
        bimodule, hom = minimal_recognizer(language)
        assert check_axioms(bimodule).passed
        assert recognizes(hom, language)
        assert is_star_generated(bimodule)
        assert is_reduced(bimodule)

    def test_even_sizes(self, even):
        """Test that (aa)* is recognized by ℤ/2ℤ on the four up-sets of its derivatives."""
        bimodule, _ = minimal_recognizer(even)
        assert bimodule.shape == (2, 4)

    def test_recognizes_whole_closure(self, alternating):
        _, hom = minimal_recognizer(alternating)
        closure = derivative_closure(alternating).as_set()
        assert recognized_languages(hom) == closure

    @pytest.mark.parametrize("pattern", ["(aa)*", "a*b*"])
    def test_factors_through_free_recognizer(self, pattern):
        """Test that the minimal recognizer is a quotient of the free one over the same monoid."""
        language = compile_regex(pattern)
        _, minimal = minimal_recognizer(language)
        monoid, letters = transition_monoid(language)
        free = recognizer_from_monoid(monoid, language.alphabet, letters)
        assert quotient_order(uquotient_of_hom(minimal), uquotient_of_hom(free)) is not None


class TestUQuotientChecker:
    """Test cases for the bounded U-quotient checker."""

    def test_val_length_mismatch(self, counter):
        with pytest.raises(StructureError):
            UQuotient(TWO, counter, (0, 1))

    def test_val_out_of_range(self, counter):
        with pytest.raises(StructureError):
            UQuotient(TWO, counter, (0, 1, 2))

    def test_not_surjective(self, counter):
        quotient = UQuotient(Fdl.chain(3), counter, (0, 2, 2))
        report = check_uquotient(quotient)
        assert not report.surjective
        assert not report.passed

    def test_missing_lifting(self, counter):
        """Test that {ε} ∪ aaa* is not closed under a⁻¹ inside its lattice."""
        quotient = UQuotient(TWO, counter, (1, 0, 1))
        report = check_uquotient(quotient)
        assert report.surjective
        assert ("a", "") in report.failed_liftings
        assert lifting(quotient, "a", "") is None
        assert report.contexts_checked == 9

    def test_nonempty_words_over_two(self, counter):
        """Test that a⁺ valued in TWO fails: a⁻¹ would have to send ⊥ to ⊤."""
        quotient = UQuotient(TWO, counter, (0, 1, 1))
        report = check_uquotient(quotient)
        assert not report.passed

    def test_languages_by_join_prime(self, parity_hom, even):
        quotient = uquotient_of_hom(parity_hom)
        found = dict(languages_by_join_prime(quotient))
        assert even in found.values()
        assert len(found) == 2

    def test_factor_map(self):
        chain = Fdl.chain(3)
        assert factor_map([(1, 1)], chain, chain) == [0, 1, 2]
        assert factor_map([(1, 0), (1, 2)], chain, chain) is None
        assert factor_map([], TWO, chain) == [0, 2]

    def test_empty_language_quotient(self):
        quotient = UQuotient(
            Fdl.trivial(), Machine(Alphabet.of("a"), 0, ((0,),)), (0,)
        )
        assert check_uquotient(quotient).passed
        assert rec_of_uquotient(quotient) == frozenset()
