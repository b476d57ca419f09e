"""
U-quotients of the free lattice over Σ^⭑, held as finite machines with a
state valuation into a finite distributive lattice.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .enums import Provenance
from .exceptions import StructureError
from .languages import Alphabet, Machine, Word
from .order import Fdl, LatticeMorphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class UQuotient:
    """
    The CDL quotient ê of Σ^⋄ with ê(w) = val(δ(init, w)) on words.

    `val` assigns a codomain element to every machine state.
    """

    codomain: Fdl
    machine: Machine
    val: tuple[int, ...]
    provenance: Provenance = Provenance.EXTERNAL

    def __post_init__(self) -> None:
        if len(self.val) != self.machine.size:
            raise StructureError("val needs one lattice element per machine state", "val")
        if any(not 0 <= v < self.codomain.size for v in self.val):
            raise StructureError("val entries must be codomain elements", "val")

    @property
    def alphabet(self) -> Alphabet:
        return self.machine.alphabet

    def value(self, word: Word) -> int:
        """ê(w)."""
        return self.val[self.machine.run(word)]


def factor_map(pairs: Iterable[tuple[int, int]], source: Fdl, target: Fdl) -> Optional[list[int]]:
    """
    The lattice morphism source -> target through the given (a, f(a)) pairs, if any.

    The pairs, with (⊥, ⊥) and (⊤, ⊤), are closed under componentwise join and
    meet; the result is a morphism exactly when the closure is the graph of a
    total function.
    """
    found = {(source.bottom, target.bottom), (source.top, target.top)}
    found |= {(int(a), int(b)) for a, b in pairs}
    frontier = list(found)
    while frontier:
        fresh = []
        current = list(found)
        for a1, b1 in frontier:
            for a2, b2 in current:
                for pair in (
                    (int(source.join[a1, a2]), int(target.join[b1, b2])),
                    (int(source.meet[a1, a2]), int(target.meet[b1, b2])),
                ):
                    if pair not in found:
                        found.add(pair)
                        fresh.append(pair)
        frontier = fresh
    mapping: dict[int, int] = {}
    for a, b in found:
        if mapping.setdefault(a, b) != b:
            return None
    if len(mapping) != source.size:
        return None
    return [mapping[a] for a in range(source.size)]


def reachable_pairs(
    first: Machine, second: Machine, start: tuple[int, int]
) -> list[tuple[int, int]]:
    """State pairs reachable from `start` when both machines read the same words."""
    first.alphabet.require(second.alphabet, "synchronized machines")
    seen = {start}
    order = [start]
    queue = deque(order)
    while queue:
        p, q = queue.popleft()
        for a in range(len(first.alphabet)):
            pair = (first.delta[p][a], second.delta[q][a])
            if pair not in seen:
                seen.add(pair)
                order.append(pair)
                queue.append(pair)
    return order


@dataclass
class UQuotientReport:
    """Outcome of the bounded U-quotient checker."""

    surjective: bool = True
    failed_liftings: list[tuple[Word, Word]] = field(default_factory=list)
    contexts_checked: int = 0

    @property
    def passed(self) -> bool:
        return self.surjective and not self.failed_liftings


def lifting(quotient: UQuotient, left: Word, right: Word) -> Optional[LatticeMorphism]:
    """The endomorphism ū with ê(left·x·right) = ū(ê(x)) for all x, if it exists."""
    machine = quotient.machine
    start = machine.run(left)
    move = machine.transformation(right)
    pairs = [
        (quotient.val[s], quotient.val[move[t]])
        for s, t in reachable_pairs(machine, machine, (machine.init, start))
    ]
    mapping = factor_map(pairs, quotient.codomain, quotient.codomain)
    if mapping is None:
        return None
    return LatticeMorphism(quotient.codomain, quotient.codomain, mapping)


def check_uquotient(quotient: UQuotient) -> UQuotientReport:
    """
    Check surjectivity of ê onto the codomain and the existence of a lifting
    for every context. Left contexts range over the reachable states and right
    contexts over the state transformations, so finitely many cases cover all
    words.
    """
    machine = quotient.machine
    report = UQuotientReport()
    reachable = machine.reachable()
    image = quotient.codomain.closure(quotient.val[q] for q in reachable)
    report.surjective = len(image) == quotient.codomain.size

    # shortest word reaching each state
    access: dict[int, Word] = {machine.init: ""}
    queue = deque([machine.init])
    while queue:
        state = queue.popleft()
        for symbol in machine.alphabet:
            target = machine.step(state, symbol)
            if target not in access:
                access[target] = access[state] + symbol
                queue.append(target)

    _, right_words = machine.transformations()
    for state in reachable:
        for right in right_words:
            report.contexts_checked += 1
            if lifting(quotient, access[state], right) is None:
                report.failed_liftings.append((access[state], right))
    if not report.passed:
        logger.warning(
            f"U-quotient check failed: surjective={report.surjective}, "
            f"{len(report.failed_liftings)} contexts without lifting"
        )
    return report

