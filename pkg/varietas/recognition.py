"""
Languages recognized by finite lattice bimodules and U-quotients, and the
minimal reduced recognizer of a regular language.
"""

import logging
from collections import deque

import numpy as np

from .bimodule import FreeHomSpec, LatticeBimodule
from .enums import Provenance
from .languages import (
    Context,
    Dfa,
    Machine,
    RegularLanguage,
    derivative,
    minimize,
    transition_monoid,
)
from .order import join_primes, sublattice, upset_lattice
from .uquotient import UQuotient
from .varieties import derivative_closure

logger = logging.getLogger(__name__)


def hom_machine(hom: FreeHomSpec) -> tuple[Machine, list[int]]:
    """
    The machine whose states are the monoid elements reachable from 1 by right
    multiplication with letter images, with the element behind each state.
    """
    table = hom.target.monoid.table
    elements = [hom.target.monoid.identity]
    index = {elements[0]: 0}
    queue = deque(elements)
    while queue:
        element = queue.popleft()
        for letter in hom.letter_image:
            nxt = int(table[element, letter])
            if nxt not in index:
                index[nxt] = len(elements)
                elements.append(nxt)
                queue.append(nxt)
    delta = tuple(
        tuple(index[int(table[m, letter])] for letter in hom.letter_image) for m in elements
    )
    return Machine(hom.alphabet, 0, delta), elements


def recognized_languages(hom: FreeHomSpec) -> frozenset[RegularLanguage]:
    """All L_c = {w : c ≤ ι(h^⭑(w))} for c a nonzero join-prime of the target lattice."""
    machine, elements = hom_machine(hom)
    lattice = hom.target.lattice
    values = hom.target.iota[elements]
    _, primes = join_primes(lattice)
    found = set()
    for c in primes:
        finals = np.flatnonzero(lattice.leq[c, values]).tolist()
        found.add(minimize(Dfa(machine.alphabet, machine.init, machine.delta, frozenset(finals))))
    return frozenset(found)


def recognizes(hom: FreeHomSpec, language: RegularLanguage) -> bool:
    hom.alphabet.require(language.alphabet, "recognizer and language")
    return language in recognized_languages(hom)


def uquotient_of_hom(hom: FreeHomSpec) -> UQuotient:
    """The ⋄-component of h as a U-quotient onto the sublattice generated by its ι-image."""
    machine, elements = hom_machine(hom)
    codomain, embedding = sublattice(hom.target.lattice, hom.target.iota[elements].tolist())
    position = {e: i for i, e in enumerate(embedding)}
    val = tuple(position[int(hom.target.iota[m])] for m in elements)
    return UQuotient(codomain, machine, val, Provenance.FROM_BIMODULE)


def languages_by_join_prime(quotient: UQuotient) -> list[tuple[int, RegularLanguage]]:
    """Each nonzero join-prime c of the codomain with L_c = {w : c ≤ ê(w)}."""
    machine = quotient.machine
    leq = quotient.codomain.leq
    _, primes = join_primes(quotient.codomain)
    result = []
    for c in primes:
        finals = frozenset(q for q in range(machine.size) if leq[c, quotient.val[q]])
        result.append((c, minimize(Dfa(machine.alphabet, machine.init, machine.delta, finals))))
    return result


def rec_of_uquotient(quotient: UQuotient) -> frozenset[RegularLanguage]:
    return frozenset(language for _, language in languages_by_join_prime(quotient))


def minimal_recognizer(language: RegularLanguage) -> tuple[LatticeBimodule, FreeHomSpec]:
    """
    Syntactic monoid of L acting on the up-set lattice of its derivative closure.

    ι(m) is the set of derivatives containing a representative word of m, and
    m ▷ S (resp. S ◁ m) the set of derivatives whose left (resp. right)
    derivative by that word lies in S.
    """
    monoid, letter_map = transition_monoid(language)
    closure = derivative_closure(language)
    members = list(closure.languages)
    lattice, decoding = upset_lattice(closure.poset())
    element = {subset: i for i, subset in enumerate(decoding)}
    index = {member: i for i, member in enumerate(members)}
    words = monoid.words or ()

    iota = [
        element[frozenset(i for i, member in enumerate(members) if member.contains(w))]
        for w in words
    ]
    left_moves = [
        [index[derivative(member, Context(left=w))] for member in members] for w in words
    ]
    right_moves = [
        [index[derivative(member, Context(right=w))] for member in members] for w in words
    ]

    def pull_back(moves: list[int], subset: frozenset[int]) -> int:
        return element[frozenset(i for i, target in enumerate(moves) if target in subset)]

    act_left = [[pull_back(moves, subset) for subset in decoding] for moves in left_moves]
    act_right = [[pull_back(moves, subset) for moves in right_moves] for subset in decoding]
    bimodule = LatticeBimodule(monoid, lattice, iota, act_left, act_right)
    logger.info(
        f"Minimal recognizer: |M| = {monoid.size}, {len(members)} derivatives, |D| = {lattice.size}"
    )
    return bimodule, FreeHomSpec.of(language.alphabet, bimodule, letter_map)
