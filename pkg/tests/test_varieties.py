"""Tests for varietas.varieties module."""

import pytest

from varietas.exceptions import AlphabetError, VarietyError
from varietas.languages import (
    Context,
    FreeMonoidHom,
    RegularLanguage,
    derivative,
    enumerate_words,
    transition_monoid,
)
from varietas.regex import compile_regex
from varietas.varieties import (
    CotheorySample,
    LocalBasicVariety,
    check_cotheory,
    derivative_closure,
    generated_local_variety,
    is_local_basic_variety,
    subvariety_lattice,
    subvarieties,
)


@pytest.fixture
def pullback():
    """c ↦ ab."""
    return FreeMonoidHom.of("c", "ab", {"c": "ab"})


@pytest.fixture
def pulled_variety():
    """{c*, {ε}, ∅}, the variety generated by the preimages of Deriv((ab)*) under c ↦ ab."""
    return LocalBasicVariety.of(
        [compile_regex("c*"), compile_regex("ε", "c"), RegularLanguage.empty("c")]
    )


class TestDerivativeClosure:
    """Test cases for derivative closures."""

    def test_even(self, even, odd):
        closure = derivative_closure(even)
        assert len(closure) == 2
        assert closure.as_set() == {even, odd}
        assert closure.is_closed()

    def test_universal(self):
        assert len(derivative_closure(compile_regex("a*"))) == 1

    def test_empty(self):
        closure = derivative_closure(compile_regex("∅"))
        assert closure.languages == (RegularLanguage.empty("a"),)

    def test_alternating(self, alternating):
        """Test that Deriv((ab)*) has five members, (ba)* and ∅ among them."""
        closure = derivative_closure(alternating)
        assert len(closure) == 5
        assert compile_regex("(ba)*", "ab") in closure
        assert RegularLanguage.empty("ab") in closure

    @pytest.mark.parametrize("pattern", ["(aa)*", "(ab)*", "a*b*", "a(a|b)*", "(a|b)*abb"])
    def test_closure_is_closed(self, pattern):
        assert derivative_closure(compile_regex(pattern)).is_closed()

    def test_members_are_sorted(self, alternating):
        keys = [language.sort_key for language in derivative_closure(alternating)]
        assert keys == sorted(keys)

    @pytest.mark.parametrize("pattern", ["(aa)*", "a*b*", "(ab)*", "a(a|b)*", "(a|bb)*"])
    def test_matches_brute_force_derivatives(self, pattern):
        """Test the closure against all v⁻¹Lw⁻¹ with |v|, |w| ≤ 4."""
        language = compile_regex(pattern)
        words = list(enumerate_words(language.alphabet, 4))
        brute = {derivative(language, Context(v, w)) for v in words for w in words}
        closure = derivative_closure(language)
        assert closure.as_set() == brute
        monoid, _ = transition_monoid(language)
        assert len(closure) <= language.states * monoid.size


class TestLocalBasicVariety:
    """Test cases for variety membership and validation."""

    def test_not_closed(self, even, odd):
        variety = LocalBasicVariety.of([even])
        assert not variety.is_closed()
        with pytest.raises(VarietyError) as excinfo:
            variety.validate()
        assert excinfo.value.missing == odd

    def test_deduplicates(self, even, odd):
        assert len(LocalBasicVariety.of([even, odd, even])) == 2

    def test_mixed_alphabets(self, even, alternating):
        with pytest.raises(AlphabetError):
            LocalBasicVariety.of([even, alternating])

    def test_is_local_basic_variety(self, even, odd):
        assert is_local_basic_variety([even, odd])
        assert not is_local_basic_variety([even])

    def test_generated(self, even, odd):
        variety = generated_local_variety([even, compile_regex("a*")])
        assert variety.as_set() == {even, odd, compile_regex("a*")}

    def test_poset(self, even):
        variety = generated_local_variety([even, compile_regex("a*")])
        poset = variety.poset()
        assert poset.size == 3
        assert int(poset.leq.sum()) == 5

    def test_empty_variety(self):
        variety = LocalBasicVariety.of([], "a")
        assert len(variety) == 0
        assert variety.is_closed()


class TestSubvarieties:
    """Test cases for the lattice of subvarieties."""

    def test_even(self, even):
        found = subvarieties(derivative_closure(even))
        assert [len(v) for v in found] == [0, 2]

    def test_union_with_universal(self, even):
        variety = generated_local_variety([even, compile_regex("a*")])
        lattice, members = subvariety_lattice(variety)
        assert [len(v) for v in members] == [0, 1, 2, 3]
        assert lattice.size == 4

    def test_requires_closed_input(self, even):
        with pytest.raises(VarietyError):
            subvarieties(LocalBasicVariety.of([even]))


class TestCotheory:
    """Test cases for the bounded cotheory checker."""

    def test_preimages_covered(self, alternating, pullback, pulled_variety):
        sample = CotheorySample(
            {"ab": [derivative_closure(alternating)], "c": [pulled_variety]}, [pullback]
        )
        assert check_cotheory(sample).passed

    def test_preimage_not_covered(self, alternating, pullback):
        """Test that {c*} alone misses the preimage {ε} of (ba)*."""
        sample = CotheorySample(
            {
                "ab": [derivative_closure(alternating)],
                "c": [derivative_closure(compile_regex("c*"))],
            },
            [pullback],
        )
        report = check_cotheory(sample)
        assert not report.passed
        assert [v.kind for v in report.violations] == ["preimage-not-covered"]
        assert report.violations[0].alphabet == "c"

    def test_missing_source_family(self, alternating, pullback):
        sample = CotheorySample({"ab": [derivative_closure(alternating)]}, [pullback])
        assert [v.kind for v in check_cotheory(sample).violations] == ["missing-family"]

    def test_missing_target_family_is_noted(self, pulled_variety, pullback):
        """Test that a hom into an alphabet without a family is skipped with a note."""
        report = check_cotheory(CotheorySample({"c": [pulled_variety]}, [pullback]))
        assert report.passed
        assert len(report.notes) == 1
        assert "'ab'" in report.notes[0]

    def test_not_closed_member(self, even):
        sample = CotheorySample({"a": [LocalBasicVariety.of([even])]})
        assert [v.kind for v in check_cotheory(sample).violations] == ["not-closed"]

    def test_not_directed(self, even):
        """Test that two members without a common upper bound in the family are reported."""
        first = derivative_closure(even)
        second = derivative_closure(compile_regex("a*"))
        report = check_cotheory(CotheorySample({"a": [first, second]}))
        assert [v.kind for v in report.violations] == ["not-directed"]

    def test_directed_with_union(self, even):
        first = derivative_closure(even)
        second = derivative_closure(compile_regex("a*"))
        union = generated_local_variety([even, compile_regex("a*")])
        assert check_cotheory(CotheorySample({"a": [first, second, union]})).passed

    def test_empty_family(self):
        report = check_cotheory(CotheorySample({"a": []}))
        assert [v.kind for v in report.violations] == ["empty-ideal"]
