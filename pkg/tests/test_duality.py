"""Tests for varietas.duality module."""

import pytest

from varietas.enums import Provenance
from varietas.exceptions import AlphabetError, VarietyError
from varietas.languages import Alphabet, FreeMonoidHom, RegularLanguage
from varietas.recognition import rec_of_uquotient
from varietas.regex import compile_regex
from varietas.uquotient import check_uquotient
from varietas.varieties import (
    LocalBasicVariety,
    derivative_closure,
    generated_local_variety,
    quotient_order,
)
from varietas.duality import (
    dual_of_hom_square,
    dual_of_variety,
    verify_local_duality,
    verify_subvariety_correspondence,
)


class TestDualOfVariety:
    """Test cases for dual_of_variety."""

    def test_even(self, even):
        """Test that Deriv((aa)*) dualizes onto the four up-sets of an antichain."""
        quotient = dual_of_variety(derivative_closure(even))
        assert quotient.codomain.size == 4
        assert quotient.machine.size == 2
        assert quotient.provenance is Provenance.DUAL_OF_VARIETY

    def test_empty_language(self):
        quotient = dual_of_variety(derivative_closure(compile_regex("∅")))
        assert quotient.codomain.size == 2
        assert quotient.val == (0,)

    def test_is_a_uquotient(self, alternating):
        assert check_uquotient(dual_of_variety(derivative_closure(alternating))).passed

    def test_recovers_members(self, alternating):
        variety = derivative_closure(alternating)
        assert rec_of_uquotient(dual_of_variety(variety)) == variety.as_set()

    def test_not_closed(self, even):
        with pytest.raises(VarietyError):
            dual_of_variety(LocalBasicVariety.of([even]))

    def test_empty_variety_needs_alphabet(self):
        with pytest.raises(VarietyError):
            dual_of_variety(LocalBasicVariety.of([]))

    def test_empty_variety(self):
        quotient = dual_of_variety(LocalBasicVariety.of([]), Alphabet.of("a"))
        assert quotient.codomain.size == 1
        assert quotient.machine.size == 1


class TestLocalDuality:
    """Test cases for the round trip V -> dual(V) -> join-primes -> V."""

    @pytest.mark.parametrize(
        "pattern", ["(aa)*", "∅", "a*", "(ab)*", "a*b*", "a(a|b)*", "(a|bb)*"]
    )
    def test_round_trip(self, pattern):
        assert verify_local_duality(derivative_closure(compile_regex(pattern)))

    def test_round_trip_of_union(self, even):
        variety = generated_local_variety([even, compile_regex("a*")])
        assert verify_local_duality(variety)


class TestQuotientOrder:
    """Test cases for the order between duals."""

    def test_subvariety_gives_smaller_quotient(self, even):
        small = derivative_closure(even)
        large = generated_local_variety([even, compile_regex("a*")])
        order = quotient_order(dual_of_variety(small), dual_of_variety(large))
        assert order is not None
        assert order.is_morphism()
        assert quotient_order(dual_of_variety(large), dual_of_variety(small)) is None

    def test_incomparable_duals(self, even):
        """Test that {a*} and Deriv((aa)*) have incomparable duals."""
        first = dual_of_variety(derivative_closure(compile_regex("a*")))
        second = dual_of_variety(derivative_closure(even))
        assert quotient_order(first, second) is None
        assert quotient_order(second, first) is None

    def test_reflexive(self, alternating):
        quotient = dual_of_variety(derivative_closure(alternating))
        assert quotient_order(quotient, quotient) is not None

    @pytest.mark.parametrize("pattern", ["(aa)*", "(ab)*", "a*b*"])
    def test_subvariety_correspondence(self, pattern):
        assert verify_subvariety_correspondence(derivative_closure(compile_regex(pattern)))

    def test_subvariety_correspondence_of_union(self, even):
        variety = generated_local_variety([even, compile_regex("a*")])
        assert verify_subvariety_correspondence(variety)


class TestHomSquare:
    """Test cases for the dual of a free monoid homomorphism."""

    def test_pullback_of_alternating(self, alternating):
        """Test that c ↦ ab pulls Deriv((ab)*) back to {c*, {ε}, ∅} and the square commutes."""
        hom = FreeMonoidHom.of("c", "ab", {"c": "ab"})
        variety, commutes = dual_of_hom_square(hom, derivative_closure(alternating))
        assert commutes
        assert variety.as_set() == {
            compile_regex("c*"),
            compile_regex("ε", "c"),
            RegularLanguage.empty("c"),
        }

    def test_erasing_hom(self, even):
        hom = FreeMonoidHom.of("cd", "a", {"c": "", "d": "aa"})
        variety, commutes = dual_of_hom_square(hom, derivative_closure(even))
        assert commutes
        assert RegularLanguage.universal("cd") in variety

    def test_target_mismatch(self, even):
        hom = FreeMonoidHom.of("c", "ab", {"c": "a"})
        with pytest.raises(AlphabetError):
            dual_of_hom_square(hom, derivative_closure(even))
