"""
Seeded corpora for the verification suites: exhaustive small bimodules and
random regexes, bimodules, quotients and exchange tuples.
"""

import logging
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterator, Optional

import numpy as np

from .bimodule import (
    BimoduleHom,
    LatticeBimodule,
    check_axioms,
    generated_congruence,
    product,
    quotient,
    recognizer_from_monoid,
)
from .exceptions import VarietasError
from .languages import (
    Alphabet,
    Context,
    FreeMonoidHom,
    RegularLanguage,
    Word,
    transition_monoid,
)
from .monoid import FiniteMonoid
from .order import Fdl, all_posets, downset_lattice, lattice_iso
from .recognition import minimal_recognizer
from .regex import compile_regex

logger = logging.getLogger(__name__)

MAX_REGEX_STATES = 5


def set_partitions(size: int) -> Iterator[tuple[int, ...]]:
    """All partitions of 0..size-1 as restricted-growth label sequences."""

    def grow(prefix: list[int], classes: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for label in range(classes + 1):
            yield from grow(prefix + [label], max(classes, label + 1))

    yield from grow([], 0)


def small_monoids(max_size: int) -> list[FiniteMonoid]:
    """All monoid tables on 1..max_size elements with identity 0 (labelled, not up to iso)."""
    found = []
    for n in range(1, max_size + 1):
        free_cells = [(a, b) for a in range(1, n) for b in range(1, n)]
        for values in cartesian(range(n), repeat=len(free_cells)):
            table = np.zeros((n, n), dtype=np.int64)
            table[0, :] = np.arange(n)
            table[:, 0] = np.arange(n)
            for (a, b), v in zip(free_cells, values):
                table[a, b] = v
            monoid = FiniteMonoid(table, 0)
            if monoid.is_valid():
                found.append(monoid)
    return found


def small_lattices(max_size: int) -> list[Fdl]:
    """Distributive lattices with at most max_size elements, one per iso class."""
    found: list[Fdl] = []
    for poset in all_posets(max_size):
        lattice, _ = downset_lattice(poset)
        if lattice.size > max_size:
            continue
        if not any(lattice_iso(lattice, seen) is not None for seen in found):
            found.append(lattice)
    return found


def _endomorphisms(lattice: Fdl) -> list[tuple[int, ...]]:
    """Bounded lattice endomorphisms of a small lattice, by brute force."""
    n = lattice.size
    found = []
    for values in cartesian(range(n), repeat=n):
        f = np.array(values)
        if f[lattice.bottom] != lattice.bottom or f[lattice.top] != lattice.top:
            continue
        joins = np.array_equal(f[lattice.join], lattice.join[f[:, None], f[None, :]])
        meets = np.array_equal(f[lattice.meet], lattice.meet[f[:, None], f[None, :]])
        if joins and meets:
            found.append(values)
    return found


def enumerate_bimodules(max_monoid: int = 2, max_lattice: int = 4) -> Iterator[LatticeBimodule]:
    """
    Every valid bimodule with |M| ≤ max_monoid and |D| ≤ max_lattice, up to the
    labelling of the chosen monoid tables and lattice representatives.

    Actions of the identity are fixed to the identity map; the remaining
    elements act by lattice endomorphisms and ι is arbitrary, the axioms
    filter the rest.
    """
    count = 0
    for monoid in small_monoids(max_monoid):
        others = [m for m in range(monoid.size) if m != monoid.identity]
        for lattice in small_lattices(max_lattice):
            endos = _endomorphisms(lattice)
            identity = tuple(range(lattice.size))
            for iota in cartesian(range(lattice.size), repeat=monoid.size):
                for lefts in cartesian(endos, repeat=len(others)):
                    for rights in cartesian(endos, repeat=len(others)):
                        left = np.empty((monoid.size, lattice.size), dtype=np.int64)
                        right = np.empty((lattice.size, monoid.size), dtype=np.int64)
                        left[monoid.identity] = identity
                        right[:, monoid.identity] = identity
                        for m, row in zip(others, lefts):
                            left[m] = row
                        for m, col in zip(others, rights):
                            right[:, m] = col
                        candidate = LatticeBimodule(monoid, lattice, iota, left, right)
                        if check_axioms(candidate).passed:
                            count += 1
                            yield candidate
    logger.info(f"Enumerated {count} bimodules with |M| ≤ {max_monoid}, |D| ≤ {max_lattice}")


def _random_word(rng: np.random.Generator, alphabet: Alphabet, max_length: int) -> Word:
    length = int(rng.integers(0, max_length + 1))
    return "".join(alphabet.symbols[int(i)] for i in rng.integers(0, len(alphabet), length))


def _random_pattern(rng: np.random.Generator, symbols: str, depth: int) -> str:
    if depth == 0 or rng.random() < 0.25:
        return symbols[int(rng.integers(len(symbols)))]
    match int(rng.integers(3)):
        case 0:
            return _random_pattern(rng, symbols, depth - 1) + _random_pattern(
                rng, symbols, depth - 1
            )
        case 1:
            left = _random_pattern(rng, symbols, depth - 1)
            return f"({left}|{_random_pattern(rng, symbols, depth - 1)})"
        case _:
            return f"({_random_pattern(rng, symbols, depth - 1)})*"


def random_regexes(
    rng: np.random.Generator,
    count: int,
    max_states: int = MAX_REGEX_STATES,
    max_monoid: Optional[int] = None,
) -> list[tuple[str, RegularLanguage]]:
    """
    Distinct random patterns over {a} or {a, b} whose minimal DFA has at most
    max_states states. With max_monoid set, languages whose syntactic monoid
    is larger are skipped as well.
    """
    found: dict[RegularLanguage, str] = {}
    attempts = 0
    while len(found) < count and attempts < 200 * count:
        attempts += 1
        symbols = "ab" if rng.random() < 0.6 else "a"
        pattern = _random_pattern(rng, symbols, 3)
        language = compile_regex(pattern, Alphabet.of(symbols))
        if language.states > max_states or language in found:
            continue
        if max_monoid is not None and transition_monoid(language)[0].size > max_monoid:
            continue
        found[language] = pattern
    if len(found) < count:
        logger.warning(f"Only {len(found)} of {count} random regexes met the size filter")
    return [(pattern, language) for language, pattern in found.items()]


def random_bimodules(
    rng: np.random.Generator, count: int, languages: Optional[list[RegularLanguage]] = None
) -> list[LatticeBimodule]:
    """
    Larger bimodules: minimal recognizers of languages, free recognizers of
    small monoids and products of pairs of them, drawn at random.
    """
    pool: list[LatticeBimodule] = []
    for language in languages or []:
        bimodule, _ = minimal_recognizer(language)
        pool.append(bimodule)
    for monoid in small_monoids(2):
        letters = {"a": monoid.size - 1}
        pool.append(recognizer_from_monoid(monoid, "a", letters, max_generators=2).target)
    result = []
    while len(result) < count:
        first = pool[int(rng.integers(len(pool)))]
        if rng.random() < 0.5:
            result.append(first)
            continue
        second = pool[int(rng.integers(len(pool)))]
        if first.lattice.size * second.lattice.size <= 64:
            result.append(product(first, second))
    return result


def random_quotient(rng: np.random.Generator, bimodule: LatticeBimodule) -> BimoduleHom:
    """The quotient by the congruence generated from one random pair on each sort."""
    m, d = bimodule.shape
    pairs_m = [tuple(int(x) for x in rng.integers(0, m, 2))] if rng.random() < 0.5 else []
    pairs_d = [tuple(int(x) for x in rng.integers(0, d, 2))] if rng.random() < 0.7 else []
    congruence = generated_congruence(bimodule, pairs_m, pairs_d)
    _, hom = quotient(bimodule, congruence)
    return hom


@dataclass(frozen=True)
class ExchangeTuple:
    language: RegularLanguage
    hom: FreeMonoidHom
    context: Context


def random_hom(
    rng: np.random.Generator, source: Alphabet, target: Alphabet, max_image: int = 2
) -> FreeMonoidHom:
    return FreeMonoidHom(
        source, target, tuple(_random_word(rng, target, max_image) for _ in source)
    )


def exchange_tuples(
    rng: np.random.Generator,
    count: int,
    languages: list[RegularLanguage],
    max_context: int = 3,
) -> list[ExchangeTuple]:
    """Random (L, g, v, w) with g: Δ* -> Σ* and |v|, |w| ≤ max_context."""
    if not languages:
        raise VarietasError("Exchange tuples need at least one language")
    result = []
    for _ in range(count):
        language = languages[int(rng.integers(len(languages)))]
        source = Alphabet.of("cd" if rng.random() < 0.5 else "c")
        hom = random_hom(rng, source, language.alphabet)
        context = Context(
            _random_word(rng, source, max_context), _random_word(rng, source, max_context)
        )
        result.append(ExchangeTuple(language, hom, context))
    return result
