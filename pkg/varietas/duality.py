"""
Finite duality between local basic varieties and U-quotients.

A variety V dualizes to the U-quotient onto the up-sets of (V, ⊆) with
ê(w) = {L ∈ V : w ∈ L}; its join-primes give back the members of V.
"""

import logging
from collections import deque
from typing import Optional

from .enums import Provenance
from .exceptions import VarietyError
from .languages import Alphabet, FreeMonoidHom, Machine, preimage
from .order import upset_lattice
from .recognition import languages_by_join_prime
from .uquotient import UQuotient
from .varieties import LocalBasicVariety, generated_local_variety, quotient_order, subvarieties

logger = logging.getLogger(__name__)


def dual_of_variety(
    variety: LocalBasicVariety, alphabet: Optional[Alphabet] = None
) -> UQuotient:
    """
    The U-quotient dual to a finite local basic variety.

    The machine is the reachable part of the synchronized product of the
    member DFAs. `alphabet` is only needed for the empty variety.
    """
    variety.validate()
    sigma = variety.alphabet or alphabet
    if sigma is None:
        raise VarietyError("The empty variety needs an explicit alphabet to dualize")
    members = variety.languages
    lattice, decoding = upset_lattice(variety.poset())
    element = {subset: i for i, subset in enumerate(decoding)}

    start = tuple(language.dfa.init for language in members)
    index = {start: 0}
    states = [start]
    delta: list[tuple[int, ...]] = []
    queue = deque(states)
    while queue:
        state = queue.popleft()
        row = []
        for a in range(len(sigma)):
            target = tuple(language.dfa.delta[q][a] for language, q in zip(members, state))
            if target not in index:
                index[target] = len(states)
                states.append(target)
                queue.append(target)
            row.append(index[target])
        delta.append(tuple(row))
    val = tuple(
        element[
            frozenset(
                i
                for i, (language, q) in enumerate(zip(members, state))
                if q in language.dfa.finals
            )
        ]
        for state in states
    )
    logger.debug(
        f"Dual of a {len(members)}-language variety: {len(states)} states, |D| = {lattice.size}"
    )
    return UQuotient(lattice, Machine(sigma, 0, tuple(delta)), val, Provenance.DUAL_OF_VARIETY)


def verify_local_duality(variety: LocalBasicVariety) -> bool:
    """
    Recover V from the join-primes of its dual: the recovered languages must be
    exactly the members, one per join-prime, with c ≤ c′ iff L_c′ ⊆ L_c.
    """
    quotient = dual_of_variety(variety)
    recovered = languages_by_join_prime(quotient)
    languages = [language for _, language in recovered]
    if set(languages) != variety.as_set() or len(set(languages)) != len(languages):
        logger.warning("Dual join-primes do not recover the variety")
        return False
    leq = quotient.codomain.leq
    position = {language: i for i, language in enumerate(variety.languages)}
    inclusion = variety.poset().leq
    for c, first in recovered:
        for d, second in recovered:
            if bool(leq[c, d]) != bool(inclusion[position[second], position[first]]):
                logger.warning("Join-prime order does not match reversed language inclusion")
                return False
    return True


def dual_of_hom_square(
    hom: FreeMonoidHom, variety: LocalBasicVariety
) -> tuple[LocalBasicVariety, bool]:
    """
    V_Δ generated by the preimages g⁻¹L, and whether ê_Δ(w) and ê_Σ(g(w))
    agree under L ↦ g⁻¹L on every reachable pair of states.
    """
    variety.validate()
    if variety.alphabet is not None:
        hom.target.require(variety.alphabet, "homomorphism target and variety")
    pulled = {language: preimage(language, hom) for language in variety}
    target_variety = generated_local_variety(pulled.values(), hom.source)
    upper = dual_of_variety(variety, hom.target)
    lower = dual_of_variety(target_variety, hom.source)

    lower_labels = lower.codomain.labels or ()
    upper_labels = upper.codomain.labels or ()
    position = {language: i for i, language in enumerate(target_variety.languages)}
    start = (lower.machine.init, upper.machine.init)
    seen = {start}
    queue = deque([start])
    commutes = True
    while queue and commutes:
        p, q = queue.popleft()
        lower_set, upper_set = lower_labels[lower.val[p]], upper_labels[upper.val[q]]
        for i, language in enumerate(variety.languages):
            if (i in upper_set) != (position[pulled[language]] in lower_set):
                commutes = False
        for letter, image in zip(hom.source, hom.images):
            pair = (lower.machine.step(p, letter), upper.machine.run(image, q))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    if not commutes:
        logger.warning(f"Hom square does not commute for {hom}")
    return target_variety, commutes


def verify_subvariety_correspondence(variety: LocalBasicVariety) -> bool:
    """For all subvarieties V1, V2 of V: V1 ⊆ V2 iff dual(V1) ≤ dual(V2)."""
    members = subvarieties(variety)
    duals = [dual_of_variety(member, variety.alphabet) for member in members]
    for first, first_dual in zip(members, duals):
        for second, second_dual in zip(members, duals):
            comparable = quotient_order(first_dual, second_dual) is not None
            if comparable != first.issubset(second):
                logger.warning(
                    f"Subvarieties of sizes {len(first)} and {len(second)} break the correspondence"
                )
                return False
    return True
