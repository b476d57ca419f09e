"""
Exact simulation of measure-many quantum finite automata.

Each input word is read as κ·w·$. After every symbol the configuration is
measured: acceptance and rejection mass is accumulated and only the
non-halting part evolves further.
"""

import logging
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

import numpy as np

from .enums import MeasurementMode, StateKind, VarietasConstants
from .exceptions import AlphabetError, BoundExceededError, QfaError
from .languages import (
    Alphabet,
    Context,
    Dfa,
    FreeMonoidHom,
    RegularLanguage,
    Word,
    enumerate_words,
)

logger = logging.getLogger(__name__)

KAPPA = VarietasConstants.LEFT_END_MARKER
DOLLAR = VarietasConstants.RIGHT_END_MARKER


@dataclass(frozen=True, eq=False)
class Kwqfa:
    """
    Kondacs-Watrous automaton: one unitary per symbol of Σ ∪ {κ, $}, an
    initial basis state and a partition of the basis into accepting,
    rejecting and non-halting states.
    """

    alphabet: Alphabet
    unitaries: Mapping[str, np.ndarray]
    init: int
    partition: tuple[StateKind, ...]

    def __post_init__(self) -> None:
        k = len(self.partition)
        if k == 0:
            raise QfaError("Automaton needs at least one basis state", "partition")
        expected = set(self.alphabet) | {KAPPA, DOLLAR}
        if set(self.unitaries) != expected:
            raise QfaError(
                f"Unitaries must be given for exactly {sorted(expected)}, "
                f"got {sorted(self.unitaries)}",
                "unitaries",
            )
        matrices = {}
        for symbol, matrix in self.unitaries.items():
            array = np.array(matrix, dtype=np.complex128)
            if array.shape != (k, k):
                raise QfaError(
                    f"Matrix for {symbol!r} must be {k}x{k}, got {array.shape}", "unitaries"
                )
            array.flags.writeable = False
            matrices[symbol] = array
        object.__setattr__(self, "unitaries", matrices)
        if not 0 <= self.init < k:
            raise QfaError(f"Initial state {self.init} out of range", "init")

    @property
    def size(self) -> int:
        return len(self.partition)

    def mask(self, kind: StateKind) -> np.ndarray:
        return np.array([tag is kind for tag in self.partition])


@dataclass
class QfaValidationReport:
    residuals: dict[str, float]
    tolerance: float
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)


def validate(
    automaton: Kwqfa, tolerance: float = VarietasConstants.QFA_TOLERANCE
) -> QfaValidationReport:
    """Unitarity residual max|T†T − I| per symbol, and partition coverage."""
    identity = np.eye(automaton.size)
    residuals = {
        symbol: float(np.max(np.abs(matrix.conj().T @ matrix - identity)))
        for symbol, matrix in automaton.unitaries.items()
    }
    report = QfaValidationReport(residuals, tolerance)
    for symbol, residual in residuals.items():
        if residual > tolerance:
            report.failures.append(f"T[{symbol}] is not unitary: residual {residual:.3e}")
    if any(not isinstance(tag, StateKind) for tag in automaton.partition):
        report.failures.append("partition tags must be accept, reject or non-halting")
    return report


@dataclass(frozen=True)
class SimStep:
    symbol: str
    p_acc: float
    p_rej: float
    continuing: float


@dataclass
class SimTrace:
    mode: MeasurementMode
    steps: list[SimStep] = field(default_factory=list)

    @property
    def p_acc(self) -> float:
        return self.steps[-1].p_acc if self.steps else 0.0

    @property
    def p_rej(self) -> float:
        return self.steps[-1].p_rej if self.steps else 0.0

    @property
    def continuing(self) -> float:
        return self.steps[-1].continuing if self.steps else 1.0


def simulate(
    automaton: Kwqfa, word: Word, mode: MeasurementMode = MeasurementMode.SUBSPACE
) -> SimTrace:
    """
    Propagate κ·w·$ exactly. In subspace mode the unnormalized non-halting
    vector evolves; in basis mode a distribution over basis states does.
    """
    automaton.alphabet.check_word(word)
    accept = automaton.mask(StateKind.ACCEPT)
    reject = automaton.mask(StateKind.REJECT)
    keep = automaton.mask(StateKind.NON_HALTING)
    trace = SimTrace(mode)
    p_acc = p_rej = 0.0
    if mode is MeasurementMode.SUBSPACE:
        psi = np.zeros(automaton.size, dtype=np.complex128)
        psi[automaton.init] = 1.0
        for symbol in KAPPA + word + DOLLAR:
            psi = automaton.unitaries[symbol] @ psi
            weights = np.abs(psi) ** 2
            p_acc += float(weights[accept].sum())
            p_rej += float(weights[reject].sum())
            psi = np.where(keep, psi, 0)
            trace.steps.append(SimStep(symbol, p_acc, p_rej, float((np.abs(psi) ** 2).sum())))
    else:
        dist = np.zeros(automaton.size)
        dist[automaton.init] = 1.0
        for symbol in KAPPA + word + DOLLAR:
            dist = (np.abs(automaton.unitaries[symbol]) ** 2) @ dist
            p_acc += float(dist[accept].sum())
            p_rej += float(dist[reject].sum())
            dist = np.where(keep, dist, 0.0)
            trace.steps.append(SimStep(symbol, p_acc, p_rej, float(dist.sum())))
    return trace


def accept_probability(
    automaton: Kwqfa, word: Word, mode: MeasurementMode = MeasurementMode.SUBSPACE
) -> float:
    return simulate(automaton, word, mode).p_acc


@dataclass
class MarginReport:
    """Acceptance extremes over members and non-members up to a length bound."""

    min_accept: float
    max_accept: float
    length: int
    mode: MeasurementMode
    words_checked: int = 0

    @property
    def margin(self) -> float:
        return min(self.min_accept, 1.0 - self.max_accept)

    @property
    def bounded_error(self) -> bool:
        return self.min_accept > 0.5 and self.max_accept < 0.5


def _check_bound(length: int, max_length: int) -> None:
    if length > max_length:
        raise BoundExceededError(
            f"Word length bound {length} exceeds the maximum {max_length}", max_length
        )


def margin_report(
    automaton: Kwqfa,
    language: RegularLanguage,
    length: int,
    mode: MeasurementMode = MeasurementMode.SUBSPACE,
    max_length: int = VarietasConstants.MAX_MARGIN_LENGTH,
) -> MarginReport:
    """Exhaustive acceptance extremes over Σ^{≤n}; empty sides give 1.0 and 0.0."""
    if automaton.alphabet != language.alphabet:
        raise AlphabetError(
            f"Automaton alphabet {str(automaton.alphabet)!r} differs from "
            f"language alphabet {str(language.alphabet)!r}"
        )
    _check_bound(length, max_length)
    report = MarginReport(1.0, 0.0, length, mode)
    for word in enumerate_words(automaton.alphabet, length):
        p = accept_probability(automaton, word, mode)
        report.words_checked += 1
        if language.contains(word):
            report.min_accept = min(report.min_accept, p)
        else:
            report.max_accept = max(report.max_accept, p)
    logger.info(
        f"Margin over {report.words_checked} words: min-accept {report.min_accept:.6f}, "
        f"max-accept {report.max_accept:.6f}"
    )
    return report


@dataclass(frozen=True)
class ProbeEntry:
    kind: str
    description: str
    cut: tuple[Word, ...]
    margin: float

    @property
    def consistent(self) -> bool:
        return self.margin > 0.5


@dataclass
class ProbeReport:
    """Bounded evidence only: a finite cut never decides membership in the class."""

    length: int
    mode: MeasurementMode
    language_cut: tuple[Word, ...] = ()
    entries: list[ProbeEntry] = field(default_factory=list)
    conclusive: bool = False

    @property
    def consistent(self) -> bool:
        return all(entry.consistent for entry in self.entries)


def _cut(probabilities: Sequence[tuple[Word, float]]) -> tuple[tuple[Word, ...], float]:
    inside = [p for _, p in probabilities if p > 0.5]
    outside = [p for _, p in probabilities if p <= 0.5]
    margin = min(min(inside, default=1.0), 1.0 - max(outside, default=0.0))
    return tuple(w for w, p in probabilities if p > 0.5), margin


def basic_variety_probe(
    automaton: Kwqfa,
    contexts: Sequence[Context],
    homs: Sequence[FreeMonoidHom],
    length: int,
    mode: MeasurementMode = MeasurementMode.SUBSPACE,
    max_length: int = VarietasConstants.MAX_MARGIN_LENGTH,
) -> ProbeReport:
    """
    Cut the words of length ≤ n at acceptance 1/2, then cut the derivatives
    x ↦ v·x·w and preimages x ↦ g(x) the same way and report their margins.
    """
    _check_bound(length, max_length)
    sigma = automaton.alphabet
    words = list(enumerate_words(sigma, length))
    report = ProbeReport(length, mode)
    report.language_cut, _ = _cut([(w, accept_probability(automaton, w, mode)) for w in words])
    for context in contexts:
        sigma.check_word(context.left + context.right)
        cut, margin = _cut(
            [(x, accept_probability(automaton, context.apply(x), mode)) for x in words]
        )
        report.entries.append(
            ProbeEntry("derivative", f"({context.left!r}, {context.right!r})", cut, margin)
        )
    for hom in homs:
        hom.target.require(sigma, "homomorphism target and automaton")
        pulled = list(enumerate_words(hom.source, length))
        cut, margin = _cut([(x, accept_probability(automaton, hom.apply(x), mode)) for x in pulled])
        images = ", ".join(f"{c}->{img!r}" for c, img in zip(hom.source, hom.images))
        report.entries.append(ProbeEntry("preimage", images, cut, margin))
    return report


def parity_machine() -> Kwqfa:
    """Accepts words of even length with certainty: states even, odd, accept, reject."""
    swap_ab = np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    route = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    return Kwqfa(
        Alphabet.of("a"),
        {KAPPA: np.eye(4), "a": swap_ab, DOLLAR: route},
        0,
        parse_partition("nnar"),
    )


def rotation_machine(angle: float = np.pi / 4) -> Kwqfa:
    """Each `a` rotates the non-halting state towards the accepting one by `angle`."""
    c, s = np.cos(angle), np.sin(angle)
    return Kwqfa(
        Alphabet.of("a"),
        {KAPPA: np.eye(2), "a": np.array([[c, -s], [s, c]]), DOLLAR: np.eye(2)},
        0,
        parse_partition("na"),
    )


def from_permutation_dfa(dfa: Union[Dfa, RegularLanguage]) -> Kwqfa:
    """
    Embed a DFA whose letters all permute the states: n non-halting copies of
    the states plus n accepting and n rejecting sinks that `$` swaps in.
    """
    automaton = dfa.dfa if isinstance(dfa, RegularLanguage) else dfa
    n = automaton.size
    unitaries: dict[str, np.ndarray] = {KAPPA: np.eye(3 * n)}
    for symbol in automaton.alphabet:
        move = automaton.transformation(symbol)
        if sorted(move) != list(range(n)):
            raise QfaError(f"Letter {symbol!r} does not permute the states", "unitaries")
        matrix = np.eye(3 * n)
        matrix[:n, :n] = 0
        for q, target in enumerate(move):
            matrix[target, q] = 1
        unitaries[symbol] = matrix
    end = np.zeros((3 * n, 3 * n))
    for q in range(n):
        partner = q + n if q in automaton.finals else q + 2 * n
        end[partner, q] = end[q, partner] = 1
    for q in range(n, 3 * n):
        if not end[:, q].any():
            end[q, q] = 1
    unitaries[DOLLAR] = end
    partition = (StateKind.NON_HALTING,) * n + (StateKind.ACCEPT,) * n + (StateKind.REJECT,) * n
    return Kwqfa(automaton.alphabet, unitaries, automaton.init, partition)


def parse_partition(text: str) -> tuple[StateKind, ...]:
    """Partition tags from a string of a/r/n letters; whitespace is ignored."""
    try:
        return tuple(StateKind(c) for c in text if not c.isspace())
    except ValueError:
        raise QfaError(f"Partition {text!r} may only contain a, r and n", "partition") from None
