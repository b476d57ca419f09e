"""
Verification suites run by `varietas verify`.

Each suite checks one structural property exhaustively on a small corpus or
on seeded random samples and returns a SuiteResult listing every failure.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from varietas.bimodule import (
    BimoduleCongruence,
    LatticeBimodule,
    check_axioms,
    compose_homs,
    diamond_example,
    is_congruence,
    is_homomorphism,
    is_reduced,
    is_star_embedded,
    is_star_generated,
    quotient,
    recognizer_from_monoid,
    reduce,
    subbimodule,
)
from varietas.corpus import (
    enumerate_bimodules,
    exchange_tuples,
    random_bimodules,
    random_quotient,
    random_regexes,
    set_partitions,
)
from varietas.duality import verify_local_duality, verify_subvariety_correspondence
from varietas.enums import MeasurementMode
from varietas.exceptions import BoundExceededError, VarietasError
from varietas.languages import (
    Context,
    RegularLanguage,
    derivative,
    enumerate_words,
    preimage,
    transition_monoid,
)
from varietas.order import (
    all_posets,
    downset_lattice,
    free_cdl,
    join_primes,
    lattice_iso,
    poset_iso,
)
from varietas.qfa import (
    from_permutation_dfa,
    margin_report,
    parity_machine,
    rotation_machine,
    simulate,
)
from varietas.recognition import recognizes
from varietas.regex import compile_regex
from varietas.varieties import derivative_closure

from .config import WorkbenchConfig

logger = logging.getLogger(__name__)

FREE_CDL_SIZES = {0: 2, 1: 3, 2: 6, 3: 20, 4: 168}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(message)


class VerificationSuites:
    """The named suites, sharing corpora generated once per seed."""

    def __init__(self, config: WorkbenchConfig, seed: Optional[int] = None):
        self.config = config
        self.seed = config.corpus.seed if seed is None else seed
        self._exhaustive: Optional[list[LatticeBimodule]] = None
        self._regexes: Optional[list[tuple[str, RegularLanguage]]] = None
        self._recognizer_regexes: Optional[list[tuple[str, RegularLanguage]]] = None
        self.registry: dict[str, Callable[[SuiteResult], None]] = {
            "free-cdl": self.free_cdl,
            "diamond": self.diamond,
            "lemmas": self.lemmas,
            "oracle": self.oracle,
            "reduction": self.reduction,
            "regularity": self.regularity,
            "duality": self.duality,
            "exchange": self.exchange,
            "qfa": self.qfa,
            "birkhoff": self.birkhoff,
        }

    @property
    def names(self) -> list[str]:
        return list(self.registry)

    def rng(self, salt: int) -> np.random.Generator:
        """Independent stream per suite, so subset runs see the same samples."""
        return np.random.default_rng([self.seed, salt])

    @property
    def exhaustive(self) -> list[LatticeBimodule]:
        if self._exhaustive is None:
            self._exhaustive = list(enumerate_bimodules(2, 4))
        return self._exhaustive

    @property
    def regexes(self) -> list[tuple[str, RegularLanguage]]:
        """Random languages with no bound on the syntactic monoid."""
        if self._regexes is None:
            self._regexes = random_regexes(self.rng(6), self.config.corpus.random_regexes)
        return self._regexes

    @property
    def recognizer_regexes(self) -> list[tuple[str, RegularLanguage]]:
        """
        Random languages whose syntactic monoid fits the free lattice bound, for
        the free recognizers and the bimodule pools built from them.
        """
        if self._recognizer_regexes is None:
            self._recognizer_regexes = random_regexes(
                self.rng(9),
                self.config.corpus.random_regexes,
                max_monoid=self.config.limits.max_lattice_generators,
            )
        return self._recognizer_regexes

    def run(self, name: str) -> SuiteResult:
        result = SuiteResult(name)
        started = time.perf_counter()
        try:
            self.registry[name](result)
        except VarietasError as e:
            logger.error(f"Suite {name} aborted: {e}")
            result.failures.append(f"aborted: {e}")
        result.seconds = time.perf_counter() - started
        status = "passed" if result.passed else f"failed ({len(result.failures)})"
        logger.info(f"Suite {name}: {result.checked} checks {status} in {result.seconds:.2f}s")
        return result

    def free_cdl(self, result: SuiteResult) -> None:
        bound = self.config.limits.max_lattice_generators
        for k, expected in FREE_CDL_SIZES.items():
            if k > bound:
                continue
            lattice, embedding = free_cdl(list(range(k)), bound)
            result.expect(lattice.size == expected, f"|FCDL({k})| = {lattice.size} ≠ {expected}")
            result.expect(len(set(embedding.values())) == k, f"generators of FCDL({k}) collide")
        try:
            free_cdl(list(range(bound + 1)), bound)
            refused = False
        except BoundExceededError:
            refused = True
        result.expect(refused, f"FCDL({bound + 1}) was built past the bound")

    def diamond(self, result: SuiteResult) -> None:
        b = diamond_example()
        report = check_axioms(b)
        laws = sorted(v.law.value for v in report.violations)
        result.expect(report.passed, f"diamond violates {laws}")
        result.expect(is_star_generated(b), "diamond is not ⭑-generated")
        result.expect(is_star_embedded(b), "diamond is not ⭑-embedded")
        result.expect(is_reduced(b), "diamond is not reduced")
        sub, _ = subbimodule(b, [b.monoid.identity], range(b.lattice.size))
        result.expect(not is_star_generated(sub), "sub-object on the identity is ⭑-generated")
        collapsed, _ = quotient(b, BimoduleCongruence((0, 1), (0, 0, 0, 0)))
        result.expect(collapsed.shape == (2, 1), f"(ℤ/2ℤ, 1) has shape {collapsed.shape}")
        result.expect(is_star_generated(collapsed), "(ℤ/2ℤ, 1) is not ⭑-generated")
        result.expect(not is_reduced(collapsed), "(ℤ/2ℤ, 1) is reduced")
        reduced, _ = reduce(collapsed)
        result.expect(reduced.shape == (1, 1), f"reduce((ℤ/2ℤ, 1)) has shape {reduced.shape}")

    def _lemma_checks(self, result: SuiteResult, bimodule: LatticeBimodule, tag: str) -> None:
        embedded, reduced = is_star_embedded(bimodule), is_reduced(bimodule)
        result.expect(not embedded or reduced, f"{tag}: ⭑-embedded but not reduced")
        if is_star_generated(bimodule):
            result.expect(not reduced or embedded, f"{tag}: reduced but not ⭑-embedded")

    def lemmas(self, result: SuiteResult) -> None:
        for i, bimodule in enumerate(self.exhaustive):
            self._lemma_checks(result, bimodule, f"exhaustive #{i}")
        languages = [language for _, language in self.recognizer_regexes]
        samples = random_bimodules(self.rng(3), self.config.corpus.random_bimodules, languages)
        for i, bimodule in enumerate(samples):
            self._lemma_checks(result, bimodule, f"random #{i} {bimodule!r}")

    def oracle(self, result: SuiteResult) -> None:
        """is_reduced against all congruences that are diagonal on the lattice sort."""
        for i, bimodule in enumerate(self.exhaustive):
            m, d = bimodule.shape
            diagonal = tuple(range(d))
            brute = all(
                len(set(part)) == m
                for part in set_partitions(m)
                if is_congruence(bimodule, BimoduleCongruence(part, diagonal))
            )
            result.expect(brute == is_reduced(bimodule), f"exhaustive #{i}: oracle disagrees")

    def reduction(self, result: SuiteResult) -> None:
        rng = self.rng(5)
        languages = [language for _, language in self.recognizer_regexes]
        count = self.config.corpus.random_quotients
        sources = random_bimodules(rng, count, languages)
        for i, source in enumerate(sources):
            hom = random_quotient(rng, source)
            reduced, r = reduce(hom.target)
            composite = compose_homs(r, hom)
            tag = f"quotient #{i} of {source!r}"
            result.expect(is_homomorphism(composite), f"{tag}: e_R is not a homomorphism")
            result.expect(
                np.array_equal(composite.diamond.mapping, hom.diamond.mapping),
                f"{tag}: reduction changed the ⋄-component",
            )
            result.expect(is_reduced(reduced), f"{tag}: reduced codomain is not reduced")
            again, _ = reduce(reduced)
            result.expect(again == reduced, f"{tag}: reduce is not idempotent")

    def regularity(self, result: SuiteResult) -> None:
        bound = self.config.limits.max_lattice_generators
        for pattern, language in self.recognizer_regexes:
            monoid, letters = transition_monoid(language)
            hom = recognizer_from_monoid(monoid, language.alphabet, letters, bound)
            result.expect(recognizes(hom, language), f"{pattern!r}: free recognizer misses L")
            result.expect(is_star_generated(hom.target), f"{pattern!r}: not ⭑-generated")
            result.expect(is_reduced(hom.target), f"{pattern!r}: not reduced")

    def duality(self, result: SuiteResult) -> None:
        for pattern, language in self.regexes:
            closure = derivative_closure(language)
            result.expect(verify_local_duality(closure), f"Deriv({pattern!r}): round trip fails")
            if len(closure) <= 4:
                result.expect(
                    verify_subvariety_correspondence(closure),
                    f"Deriv({pattern!r}): subvariety correspondence fails",
                )

    def exchange(self, result: SuiteResult) -> None:
        """v⁻¹(g⁻¹L)w⁻¹ = g⁻¹(g(v)⁻¹ L g(w)⁻¹)."""
        languages = [language for _, language in self.regexes]
        samples = exchange_tuples(self.rng(8), self.config.corpus.exchange_samples, languages)
        for sample in samples:
            hom, context = sample.hom, sample.context
            lhs = derivative(preimage(sample.language, hom), context)
            image = Context(hom.apply(context.left), hom.apply(context.right))
            rhs = preimage(derivative(sample.language, image), hom)
            result.expect(lhs == rhs, f"exchange fails for {hom} and {context}")

    def qfa(self, result: SuiteResult) -> None:
        tol = self.config.qfa.tolerance
        rotation = rotation_machine()
        for word, expected in (("a", 0.5), ("aa", 0.75)):
            for mode in MeasurementMode:
                p = simulate(rotation, word, mode).p_acc
                result.expect(abs(p - expected) <= tol, f"rotation p_acc({word!r}) = {p}")
        parity = parity_machine()
        margin = margin_report(parity, compile_regex("(aa)*"), 6)
        result.expect(
            abs(margin.min_accept - 1.0) <= tol and abs(margin.max_accept) <= tol,
            f"parity margin is ({margin.min_accept}, {margin.max_accept})",
        )
        group = compile_regex("((a|b)(a|b))*")
        embedded = from_permutation_dfa(group)
        for machine in (rotation, parity, embedded):
            for word in enumerate_words(machine.alphabet, 6):
                for mode in MeasurementMode:
                    for step in simulate(machine, word, mode).steps:
                        total = step.p_acc + step.p_rej + step.continuing
                        result.expect(abs(total - 1.0) <= tol, f"mass {total} after {word!r}")
        for word in enumerate_words(group.alphabet, self.config.limits.max_word_length):
            for mode in MeasurementMode:
                p = simulate(embedded, word, mode).p_acc
                expected = 1.0 if group.contains(word) else 0.0
                result.expect(abs(p - expected) <= tol, f"embedded DFA p_acc({word!r}) = {p}")

    def birkhoff(self, result: SuiteResult) -> None:
        for poset in all_posets(5):
            lattice, _ = downset_lattice(poset)
            primes, _ = join_primes(lattice)
            found = poset_iso(poset, primes) is not None
            result.expect(found, f"J(𝒟(P)) ≇ P for {poset.leq.tolist()}")
            again, _ = downset_lattice(primes)
            result.expect(lattice_iso(lattice, again) is not None, "𝒟(J(D)) ≇ D")
