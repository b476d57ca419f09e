"""Tests for varietas.languages module."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from varietas.exceptions import AlphabetError, StructureError
from varietas.languages import (
    Alphabet,
    Context,
    DiamondTerm,
    Dfa,
    FreeMonoidHom,
    RegularLanguage,
    derivative,
    enumerate_words,
    eval_diamond,
    is_subset,
    membership,
    minimize,
    preimage,
    transition_monoid,
)
from varietas.order import TWO, Fdl
from varietas.regex import compile_regex

PATTERNS = ["(aa)*", "a(aa)*", "a*b*", "(ab)*", "(a|b)*abb", "(a|bb)*", "b*a", "∅", "ε"]

patterns = st.sampled_from(PATTERNS)
words_ab = st.text(alphabet="ab", max_size=4)


class TestAlphabet:
    """Test cases for Alphabet."""

    def test_of_string(self):
        """Test building an alphabet from a string."""
        sigma = Alphabet.of("ab")
        assert sigma.symbols == ("a", "b")
        assert len(sigma) == 2
        assert "a" in sigma
        assert str(sigma) == "ab"

    def test_duplicate_symbols(self):
        """Test that duplicate symbols are rejected."""
        with pytest.raises(AlphabetError):
            Alphabet.of("aba")

    @pytest.mark.parametrize("marker", ["κ", "$"])
    def test_reserved_markers(self, marker):
        """Test that end markers cannot be letters."""
        with pytest.raises(AlphabetError) as excinfo:
            Alphabet.of("a" + marker)
        assert excinfo.value.symbol == marker

    def test_foreign_letter(self):
        """Test index and check_word on letters outside the alphabet."""
        sigma = Alphabet.of("ab")
        with pytest.raises(AlphabetError):
            sigma.index("c")
        with pytest.raises(AlphabetError):
            sigma.check_word("abc")

    def test_require(self):
        """Test alphabet equality requirement."""
        Alphabet.of("ab").require(Alphabet.of("ab"))
        with pytest.raises(AlphabetError):
            Alphabet.of("ab").require(Alphabet.of("ba"))


class TestDfa:
    """Test cases for Dfa construction and minimization."""

    def test_malformed_transition_table(self):
        """Test rows of the wrong width."""
        with pytest.raises(StructureError):
            Dfa.build("ab", [[0]], 0, [0])

    def test_target_out_of_range(self):
        """Test transitions to missing states."""
        with pytest.raises(StructureError):
            Dfa.build("a", [[3]], 0, [])

    def test_initial_state_out_of_range(self):
        with pytest.raises(StructureError):
            Dfa.build("a", [[0]], 2, [])

    def test_minimize_merges_equivalent_states(self):
        """Test that a redundant 4-state parity DFA minimizes to 2 states."""
        dfa = Dfa.build("a", [[1], [2], [3], [0]], 0, [0, 2])
        language = minimize(dfa)
        assert language.states == 2
        assert language == compile_regex("(aa)*")

    def test_minimize_drops_unreachable_states(self):
        dfa = Dfa.build("a", [[0], [1]], 0, [0, 1])
        assert minimize(dfa) == RegularLanguage.universal("a")

    def test_canonical_numbering(self):
        """Test that the initial state is 0 and states are numbered breadth-first."""
        dfa = Dfa.build("ab", [[2, 1], [1, 1], [1, 0]], 0, [2])
        language = minimize(dfa)
        assert language.dfa.init == 0
        assert language.dfa.delta[0] == (1, 2)

    @given(patterns)
    @settings(max_examples=30, deadline=None)
    def test_minimize_is_idempotent(self, pattern):
        """Test that minimizing a canonical DFA returns it unchanged."""
        language = compile_regex(pattern, "ab")
        assert minimize(language.dfa) == language


class TestRegularLanguage:
    """Test cases for membership and language equality."""

    def test_membership(self, even):
        """Test membership in (aa)*."""
        assert membership(even, "")
        assert membership(even, "aa")
        assert not membership(even, "aaa")
        assert "aaaa" in even

    def test_membership_foreign_letter(self, even):
        """Test that foreign letters raise instead of rejecting."""
        with pytest.raises(AlphabetError):
            even.contains("ab")

    def test_equal_languages_have_identical_dfas(self):
        """Test that equal languages compare equal and hash alike."""
        first = compile_regex("(aa)*(aa)*")
        second = compile_regex("(aa|aaaa)*")
        assert first == second
        assert hash(first) == hash(second)
        assert first.dfa == second.dfa

    @pytest.mark.parametrize(
        "first, second",
        [
            ("(aa)*(aa)*", "(aa|aaaa)*"),
            ("a*", "(a|aa)*"),
            ("(ab)*", "(ab)*|ab"),
            ("a*b*", "(a|b)*"),
            ("(a|b)*abb", "(a|b)*bb"),
            ("(aa)*", "a(aa)*|ε"),
        ],
    )
    def test_identical_dfas_iff_short_words_agree(self, first, second):
        """Test canonicity against membership on all words shorter than |Q1|·|Q2|."""
        one, two = compile_regex(first, "ab"), compile_regex(second, "ab")
        bound = one.states * two.states
        words = enumerate_words(one.alphabet, bound - 1)
        agree = all(one.contains(word) == two.contains(word) for word in words)
        assert (one.dfa == two.dfa) == agree

    def test_empty_and_universal(self):
        assert RegularLanguage.empty("ab").is_empty()
        assert RegularLanguage.universal("ab").is_universal()
        assert compile_regex("(a|b)*") == RegularLanguage.universal("ab")

    def test_is_subset(self, even):
        """Test inclusion on the synchronized product."""
        assert is_subset(even, compile_regex("a*"))
        assert not is_subset(compile_regex("a*"), even)
        assert is_subset(RegularLanguage.empty("a"), even)

    def test_enumerate_words_shortlex(self):
        words = list(enumerate_words(Alphabet.of("ab"), 2))
        assert words == ["", "a", "b", "aa", "ab", "ba", "bb"]


class TestDerivatives:
    """Test cases for two-sided derivatives."""

    def test_left_derivative_of_even(self, even, odd):
        """Test a⁻¹(aa)* = a(aa)*."""
        assert derivative(even, Context(left="a")) == odd
        assert derivative(even, Context(left="aa")) == even

    def test_right_derivative(self, alternating):
        """Test (ab)*b⁻¹ = (ab)*a."""
        assert derivative(alternating, Context(right="b")) == compile_regex("(ab)*a", "ab")

    def test_two_sided_derivative(self, alternating):
        """Test a⁻¹(ab)*b⁻¹ = (ba)*."""
        result = derivative(alternating, Context("a", "b"))
        assert result == compile_regex("(ba)*", "ab")

    def test_derivative_foreign_context(self, even):
        with pytest.raises(AlphabetError):
            derivative(even, Context(left="b"))

    @given(patterns, words_ab, words_ab, words_ab, words_ab, words_ab)
    @settings(max_examples=60, deadline=None)
    def test_composition(self, pattern, v1, w1, v2, w2, x):
        """Test that derivatives compose along the nesting of contexts."""
        language = compile_regex(pattern, "ab")
        outer, inner = Context(v1, w1), Context(v2, w2)
        nested = derivative(derivative(language, outer), inner)
        assert nested == derivative(language, outer.then(inner))
        assert nested.contains(x) == language.contains(outer.apply(inner.apply(x)))


class TestPreimages:
    """Test cases for inverse images under free monoid homomorphisms."""

    def test_preimage_of_alternating(self, alternating):
        """Test that c ↦ ab pulls (ab)* back to c*."""
        hom = FreeMonoidHom.of("c", "ab", {"c": "ab"})
        assert preimage(alternating, hom) == compile_regex("c*")

    def test_preimage_erasing_letter(self, even):
        """Test a letter mapped to ε."""
        hom = FreeMonoidHom.of("cd", "a", {"c": "", "d": "a"})
        pulled = preimage(even, hom)
        assert pulled.contains("cdcdc")
        assert pulled.contains("dd")
        assert not pulled.contains("cdc")

    def test_preimage_target_mismatch(self, even):
        hom = FreeMonoidHom.of("c", "ab", {"c": "a"})
        with pytest.raises(AlphabetError):
            preimage(even, hom)

    def test_hom_undefined_letter(self):
        with pytest.raises(StructureError):
            FreeMonoidHom.of("cd", "a", {"c": "a"})

    def test_hom_image_outside_target(self):
        with pytest.raises(AlphabetError):
            FreeMonoidHom.of("c", "a", {"c": "b"})

    @given(
        patterns,
        st.lists(st.text(alphabet="ab", max_size=3), min_size=2, max_size=2),
        st.lists(st.text(alphabet="cd", max_size=2), min_size=1, max_size=1),
    )
    @settings(max_examples=40, deadline=None)
    def test_preimage_composes(self, pattern, first_images, second_images):
        """Test h⁻¹(g⁻¹L) = (g∘h)⁻¹L."""
        language = compile_regex(pattern, "ab")
        g = FreeMonoidHom(Alphabet.of("cd"), Alphabet.of("ab"), tuple(first_images))
        h = FreeMonoidHom(Alphabet.of("e"), Alphabet.of("cd"), tuple(second_images))
        composite = FreeMonoidHom(h.source, g.target, tuple(g.apply(w) for w in h.images))
        assert preimage(preimage(language, g), h) == preimage(language, composite)

    @given(patterns, words_ab, words_ab, st.text(alphabet="cd", max_size=3))
    @settings(max_examples=60, deadline=None)
    def test_exchange_identity(self, pattern, image_c, image_d, x):
        """Test v⁻¹(g⁻¹L)w⁻¹ = g⁻¹(g(v)⁻¹ L g(w)⁻¹)."""
        language = compile_regex(pattern, "ab")
        hom = FreeMonoidHom.of("cd", "ab", {"c": image_c, "d": image_d})
        context = Context(x[:1], x[1:])
        lhs = derivative(preimage(language, hom), context)
        rhs = preimage(
            derivative(language, Context(hom.apply(context.left), hom.apply(context.right))),
            hom,
        )
        assert lhs == rhs


class TestTransitionMonoid:
    """Test cases for the transition (syntactic) monoid."""

    def test_even_has_two_elements(self, even):
        monoid, letters = transition_monoid(even)
        assert monoid.size == 2
        assert monoid.identity == 0
        assert letters == {"a": 1}
        assert monoid.words == ("", "a")

    def test_universal_is_trivial(self):
        """Test that a* over {a} has the trivial syntactic monoid."""
        monoid, letters = transition_monoid(compile_regex("a*"))
        assert monoid.size == 1
        assert letters == {"a": 0}

    def test_alternating_has_six_elements(self, alternating):
        """Test that (ab)* has the 6-element syntactic monoid with a zero."""
        monoid, letters = transition_monoid(alternating)
        assert monoid.size == 6
        assert monoid.is_valid()
        a, b = letters["a"], letters["b"]
        zero = monoid.multiply(a, a)
        assert all(monoid.multiply(zero, m) == zero for m in range(monoid.size))
        assert monoid.product([a, b, a]) == a

    def test_product_is_concatenation(self, alternating):
        """Test that m·n acts as first m, then n."""
        monoid, letters = transition_monoid(alternating)
        ab = monoid.multiply(letters["a"], letters["b"])
        assert monoid.words[ab] == "ab"

    @pytest.mark.parametrize("pattern", PATTERNS)
    def test_recognizes_language_up_to_length_eight(self, pattern):
        """Test that membership of a word depends only on its monoid element."""
        language = compile_regex(pattern)
        monoid, letters = transition_monoid(language)
        accepting = {m for m, word in enumerate(monoid.words) if language.contains(word)}
        for word in enumerate_words(language.alphabet, 8):
            element = monoid.product(letters[c] for c in word)
            assert language.contains(word) == (element in accepting)


class TestDiamondTerms:
    """Test cases for evaluating joins of meets of words."""

    @pytest.fixture
    def parity(self, even):
        return lambda word: int(even.contains(word))

    def test_join_and_meet(self, parity):
        assert eval_diamond(DiamondTerm.of([["aa"], ["a"]]), parity, TWO) == 1
        assert eval_diamond(DiamondTerm.of([["aa", "a"]]), parity, TWO) == 0

    def test_empty_term_and_empty_clause(self, parity):
        assert eval_diamond(DiamondTerm(), parity, TWO) == 0
        assert eval_diamond(DiamondTerm.of([[]]), parity, TWO) == 1

    def test_chain_valuation(self):
        """Test that a meet picks the smaller and a join the larger length class."""
        chain = Fdl.chain(3)

        def length(word):
            return min(len(word), 2)

        assert eval_diamond(DiamondTerm.of([["a", "aaa"]]), length, chain) == 1
        assert eval_diamond(DiamondTerm.of([["a"], ["aaa"]]), length, chain) == 2
        assert DiamondTerm.of([["a", "b"], ["b"]]).words() == {"a", "b"}
