"""
Local basic varieties: finite sets of regular languages over one alphabet that
are closed under two-sided derivatives.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Union

import numpy as np

from .exceptions import AlphabetError, VarietyError
from .languages import (
    Alphabet,
    FreeMonoidHom,
    RegularLanguage,
    is_subset,
    minimize,
    preimage,
)
from .order import Fdl, FinitePoset, LatticeMorphism
from .uquotient import UQuotient, factor_map, reachable_pairs

logger = logging.getLogger(__name__)


def _common_alphabet(
    languages: Iterable[RegularLanguage], alphabet: Optional[Alphabet]
) -> Optional[Alphabet]:
    for language in languages:
        if alphabet is None:
            alphabet = language.alphabet
        elif language.alphabet != alphabet:
            raise AlphabetError(
                f"Mixed alphabets {str(alphabet)!r} and {str(language.alphabet)!r} in one variety"
            )
    return alphabet


@dataclass(frozen=True)
class LocalBasicVariety:
    """
    Finite set of languages over one alphabet, deduplicated and sorted by
    canonical DFA. Closure under derivatives is checked by `validate`.
    """

    alphabet: Optional[Alphabet]
    languages: tuple[RegularLanguage, ...]

    @classmethod
    def of(
        cls,
        languages: Iterable[RegularLanguage],
        alphabet: Optional[Union[str, Alphabet]] = None,
    ) -> "LocalBasicVariety":
        members = set(languages)
        sigma = _common_alphabet(members, Alphabet.of(alphabet) if alphabet is not None else None)
        return cls(sigma, tuple(sorted(members, key=lambda language: language.sort_key)))

    def __len__(self) -> int:
        return len(self.languages)

    def __iter__(self) -> Iterator[RegularLanguage]:
        return iter(self.languages)

    def __contains__(self, language: object) -> bool:
        return language in self.languages

    def as_set(self) -> frozenset[RegularLanguage]:
        return frozenset(self.languages)

    def issubset(self, other: "LocalBasicVariety") -> bool:
        return self.as_set() <= other.as_set()

    def missing_derivatives(self) -> list[RegularLanguage]:
        members = self.as_set()
        missing = {
            d
            for language in self.languages
            for d in derivative_closure(language)
            if d not in members
        }
        return sorted(missing, key=lambda language: language.sort_key)

    def is_closed(self) -> bool:
        return not self.missing_derivatives()

    def validate(self) -> None:
        missing = self.missing_derivatives()
        if missing:
            raise VarietyError(
                f"Set of {len(self)} languages is not closed under derivatives: "
                f"{len(missing)} missing",
                missing[0],
            )

    def poset(self) -> FinitePoset:
        """The members ordered by inclusion."""
        n = len(self.languages)
        leq = np.array(
            [[is_subset(a, b) for b in self.languages] for a in self.languages], dtype=bool
        ).reshape(n, n)
        return FinitePoset(leq, self.languages)


def derivative_closure(language: RegularLanguage) -> LocalBasicVariety:
    """
    All derivatives v⁻¹Lw⁻¹. The left part moves the initial state to any
    reachable state, the right part replaces the finals by their preimage under
    a transformation of the transition monoid.
    """
    dfa = language.dfa
    elements, _ = dfa.transformations()
    final_sets = {
        frozenset(q for q in range(dfa.size) if move[q] in dfa.finals) for move in elements
    }
    found = {
        minimize(dfa.with_finals(finals, init=state))
        for state in dfa.reachable()
        for finals in final_sets
    }
    logger.debug(
        f"Derivative closure of a {dfa.size}-state language: {len(found)} languages "
        f"from {dfa.size * len(elements)} candidates"
    )
    return LocalBasicVariety.of(found, language.alphabet)


def generated_local_variety(
    languages: Iterable[RegularLanguage], alphabet: Optional[Union[str, Alphabet]] = None
) -> LocalBasicVariety:
    """Union of the derivative closures."""
    members = list(languages)
    sigma = _common_alphabet(members, Alphabet.of(alphabet) if alphabet is not None else None)
    found: set[RegularLanguage] = set()
    for language in members:
        found |= derivative_closure(language).as_set()
    return LocalBasicVariety.of(found, sigma)


def is_local_basic_variety(languages: Iterable[RegularLanguage]) -> bool:
    members = set(languages)
    return generated_local_variety(members).as_set() == members


def subvarieties(variety: LocalBasicVariety) -> list[LocalBasicVariety]:
    """All derivative-closed subsets, smallest first; unions of member closures."""
    variety.validate()
    generators = {derivative_closure(language).as_set() for language in variety}
    found: set[frozenset[RegularLanguage]] = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        fresh = []
        for current in frontier:
            for generator in generators:
                union = current | generator
                if union not in found:
                    found.add(union)
                    fresh.append(union)
        frontier = fresh
    result = [LocalBasicVariety.of(members, variety.alphabet) for members in found]
    return sorted(result, key=lambda v: (len(v), [lang.sort_key for lang in v]))


def subvariety_lattice(variety: LocalBasicVariety) -> tuple[Fdl, list[LocalBasicVariety]]:
    """The subvarieties ordered by inclusion, as a distributive lattice."""
    members = subvarieties(variety)
    leq = [[a.issubset(b) for b in members] for a in members]
    return Fdl(leq, labels=members), members


@dataclass
class CotheoryViolation:
    kind: str
    alphabet: str
    detail: str
    witness: Optional[RegularLanguage] = None


@dataclass
class CotheoryReport:
    violations: list[CotheoryViolation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class CotheorySample:
    """
    Finite snapshot of a cotheory: per alphabet (keyed by its symbols) a
    family of local basic varieties generating an ideal, plus homomorphisms.
    """

    families: dict[str, list[LocalBasicVariety]]
    homs: list[FreeMonoidHom] = field(default_factory=list)


def check_cotheory(sample: CotheorySample) -> CotheoryReport:
    """
    Check that every family consists of closed members and is directed, and
    that every listed hom g: Δ* -> Σ* maps each Σ-member into some Δ-member
    by preimage. A family stands for the ideal it generates, so downward
    closure holds by construction.
    """
    report = CotheoryReport()
    for key, family in sample.families.items():
        if not family:
            report.violations.append(CotheoryViolation("empty-ideal", key, "family has no member"))
        for position, member in enumerate(family):
            missing = member.missing_derivatives()
            if missing:
                report.violations.append(
                    CotheoryViolation(
                        "not-closed", key, f"member {position} misses derivatives", missing[0]
                    )
                )
        for (i, first), (j, second) in combinations(enumerate(family), 2):
            union = first.as_set() | second.as_set()
            if not any(union <= candidate.as_set() for candidate in family):
                report.violations.append(
                    CotheoryViolation(
                        "not-directed",
                        key,
                        f"members {i} and {j} have no upper bound in the family",
                    )
                )

    for hom in sample.homs:
        source, target = str(hom.source), str(hom.target)
        if target not in sample.families:
            logger.info(f"Skipping preimage check of {hom}: no family over {target!r}")
            report.notes.append(f"no family over {target!r}; preimages under {hom} unchecked")
            continue
        if source not in sample.families:
            report.violations.append(
                CotheoryViolation("missing-family", source, f"no family for the source of {hom}")
            )
            continue
        candidates = [member.as_set() for member in sample.families[source]]
        for position, member in enumerate(sample.families[target]):
            pulled = {preimage(language, hom) for language in member}
            if any(pulled <= candidate for candidate in candidates):
                continue
            best = max(candidates, key=lambda c: len(pulled & c), default=frozenset())
            witness = min(pulled - best, key=lambda language: language.sort_key)
            report.violations.append(
                CotheoryViolation(
                    "preimage-not-covered",
                    source,
                    f"preimage of member {position} over {target!r} lies in no member",
                    witness,
                )
            )
    if not report.passed:
        logger.info(f"Cotheory check found {len(report.violations)} violations")
    return report


def quotient_order(first: UQuotient, second: UQuotient) -> Optional[LatticeMorphism]:
    """
    The lattice morphism h with first = h · second, or None when first ≰ second.

    Runs both machines in lockstep; the reachable value pairs must extend to a
    lattice morphism from the second codomain onto the first.
    """
    start = (first.machine.init, second.machine.init)
    pairs = [
        (second.val[q], first.val[p])
        for p, q in reachable_pairs(first.machine, second.machine, start)
    ]
    mapping = factor_map(pairs, second.codomain, first.codomain)
    if mapping is None:
        return None
    return LatticeMorphism(second.codomain, first.codomain, mapping)
