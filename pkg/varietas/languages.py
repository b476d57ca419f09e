"""
Regular languages as canonical minimal DFAs.

Every RegularLanguage holds a DFA that is minimal, reachable-only and numbered
in breadth-first discovery order over the alphabet order, so two languages are
equal exactly when their DFAs are identical tuples.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterable, Iterator, Mapping, Optional, Union

from .enums import VarietasConstants
from .exceptions import AlphabetError, StructureError
from .monoid import FiniteMonoid

if TYPE_CHECKING:
    from .order import Fdl

logger = logging.getLogger(__name__)

Word = str


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct single-character symbols."""

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        for symbol in self.symbols:
            if not isinstance(symbol, str) or len(symbol) != 1:
                raise AlphabetError(f"Symbol {symbol!r} is not a single character", symbol)
            if symbol in VarietasConstants.RESERVED_SYMBOLS:
                raise AlphabetError(f"Symbol {symbol!r} is a reserved end marker", symbol)
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError(f"Duplicate symbols in alphabet {''.join(self.symbols)!r}")

    @classmethod
    def of(cls, symbols: Union[str, Iterable[str], "Alphabet"]) -> "Alphabet":
        """Build an alphabet from a string or an iterable of symbols."""
        if isinstance(symbols, Alphabet):
            return symbols
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.symbols

    def __str__(self) -> str:
        return "".join(self.symbols)

    def index(self, symbol: str) -> int:
        """Position of a symbol; raises AlphabetError for foreign letters."""
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise AlphabetError(
                f"Letter {symbol!r} is not in alphabet {str(self)!r}", symbol
            ) from None

    def check_word(self, word: Word) -> Word:
        """Return the word unchanged if every letter belongs to the alphabet."""
        for letter in word:
            if letter not in self.symbols:
                raise AlphabetError(f"Letter {letter!r} is not in alphabet {str(self)!r}", letter)
        return word

    def require(self, other: "Alphabet", what: str = "operands") -> None:
        """Raise AlphabetError unless both alphabets are identical."""
        if self != other:
            raise AlphabetError(
                f"Alphabet mismatch between {what}: {str(self)!r} vs {str(other)!r}"
            )


@dataclass(frozen=True)
class Machine:
    """Complete deterministic transition structure without acceptance."""

    alphabet: Alphabet
    init: int
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.alphabet) == 0:
            raise AlphabetError("Automata need a non-empty alphabet")
        n = len(self.delta)
        if n == 0:
            raise StructureError("Automaton has no states", "delta")
        if not 0 <= self.init < n:
            raise StructureError(f"Initial state {self.init} out of range 0..{n - 1}", "init")
        for state, row in enumerate(self.delta):
            if len(row) != len(self.alphabet):
                raise StructureError(
                    f"State {state} has {len(row)} transitions, expected {len(self.alphabet)}",
                    "delta",
                )
            for target in row:
                if not 0 <= target < n:
                    raise StructureError(f"Transition target {target} out of range", "delta")

    @property
    def size(self) -> int:
        return len(self.delta)

    def step(self, state: int, symbol: str) -> int:
        return self.delta[state][self.alphabet.index(symbol)]

    def run(self, word: Word, start: Optional[int] = None) -> int:
        """State reached from `start` (default: the initial state) after reading `word`."""
        state = self.init if start is None else start
        for letter in word:
            state = self.delta[state][self.alphabet.index(letter)]
        return state

    def transformation(self, word: Word) -> tuple[int, ...]:
        """The state map q -> δ(q, word)."""
        return tuple(self.run(word, q) for q in range(self.size))

    def transformations(self) -> tuple[list[tuple[int, ...]], list[Word]]:
        """
        The state maps induced by all words, numbered breadth-first from the
        identity, with a shortest word inducing each.
        """
        letters = [tuple(row[a] for row in self.delta) for a in range(len(self.alphabet))]
        elements = [tuple(range(self.size))]
        words = [""]
        index = {elements[0]: 0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for a, letter in enumerate(letters):
                composed = tuple(letter[q] for q in elements[i])
                if composed not in index:
                    index[composed] = len(elements)
                    elements.append(composed)
                    words.append(words[i] + self.alphabet.symbols[a])
                    queue.append(index[composed])
        return elements, words

    def reachable(self) -> list[int]:
        """Reachable states in breadth-first discovery order over the alphabet order."""
        order = [self.init]
        seen = {self.init}
        queue = deque([self.init])
        while queue:
            state = queue.popleft()
            for target in self.delta[state]:
                if target not in seen:
                    seen.add(target)
                    order.append(target)
                    queue.append(target)
        return order


@dataclass(frozen=True)
class Dfa(Machine):
    """Machine with a set of final states."""

    finals: frozenset[int]

    def __post_init__(self) -> None:
        super().__post_init__()
        if not all(0 <= q < self.size for q in self.finals):
            raise StructureError(f"Final states {sorted(self.finals)} not within states", "finals")

    @classmethod
    def build(
        cls,
        alphabet: Union[str, Alphabet],
        delta: Iterable[Iterable[int]],
        init: int = 0,
        finals: Iterable[int] = (),
    ) -> "Dfa":
        """Convenience constructor from plain lists."""
        return cls(
            alphabet=Alphabet.of(alphabet),
            init=init,
            delta=tuple(tuple(int(t) for t in row) for row in delta),
            finals=frozenset(int(q) for q in finals),
        )

    def accepts(self, word: Word) -> bool:
        return self.run(word) in self.finals

    def with_finals(self, finals: Iterable[int], init: Optional[int] = None) -> "Dfa":
        return Dfa(
            alphabet=self.alphabet,
            init=self.init if init is None else init,
            delta=self.delta,
            finals=frozenset(finals),
        )


@dataclass(frozen=True)
class RegularLanguage:
    """A regular language, held as its canonical minimal DFA."""

    dfa: Dfa

    @property
    def alphabet(self) -> Alphabet:
        return self.dfa.alphabet

    @property
    def states(self) -> int:
        return self.dfa.size

    @property
    def sort_key(self) -> tuple:
        return (self.dfa.size, self.dfa.delta, tuple(sorted(self.dfa.finals)))

    def contains(self, word: Word) -> bool:
        self.alphabet.check_word(word)
        return self.dfa.accepts(word)

    def __contains__(self, word: object) -> bool:
        return isinstance(word, str) and self.contains(word)

    def is_empty(self) -> bool:
        return not self.dfa.finals

    def is_universal(self) -> bool:
        return len(self.dfa.finals) == self.dfa.size

    @classmethod
    def empty(cls, alphabet: Union[str, Alphabet]) -> "RegularLanguage":
        sigma = Alphabet.of(alphabet)
        return cls(Dfa(sigma, 0, ((0,) * len(sigma),), frozenset()))

    @classmethod
    def universal(cls, alphabet: Union[str, Alphabet]) -> "RegularLanguage":
        sigma = Alphabet.of(alphabet)
        return cls(Dfa(sigma, 0, ((0,) * len(sigma),), frozenset({0})))


@dataclass(frozen=True)
class FreeMonoidHom:
    """Monoid homomorphism g: Δ* -> Σ* given by the images of the letters of Δ."""

    source: Alphabet
    target: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.source):
            raise StructureError("Homomorphism must give one image per source letter", "images")
        for image in self.images:
            self.target.check_word(image)

    @classmethod
    def of(
        cls,
        source: Union[str, Alphabet],
        target: Union[str, Alphabet],
        mapping: Mapping[str, Word],
    ) -> "FreeMonoidHom":
        delta = Alphabet.of(source)
        missing = [c for c in delta if c not in mapping]
        if missing:
            raise StructureError(f"Homomorphism undefined on {missing}", "images")
        return cls(delta, Alphabet.of(target), tuple(mapping[c] for c in delta))

    @classmethod
    def identity(cls, alphabet: Union[str, Alphabet]) -> "FreeMonoidHom":
        sigma = Alphabet.of(alphabet)
        return cls(sigma, sigma, sigma.symbols)

    def image(self, letter: str) -> Word:
        return self.images[self.source.index(letter)]

    def apply(self, word: Word) -> Word:
        return "".join(self.image(letter) for letter in word)


@dataclass(frozen=True)
class Context:
    """Two-sided context x -> v x w."""

    left: Word = ""
    right: Word = ""

    def apply(self, word: Word) -> Word:
        return self.left + word + self.right

    def then(self, inner: "Context") -> "Context":
        """The context x -> left·(inner.left x inner.right)·right."""
        return Context(self.left + inner.left, inner.right + self.right)


@dataclass(frozen=True)
class DiamondTerm:
    """Finite join of finite meets of words; no clauses is ⊥, an empty clause is ⊤."""

    clauses: tuple[tuple[Word, ...], ...] = ()

    @classmethod
    def of(cls, clauses: Iterable[Iterable[Word]]) -> "DiamondTerm":
        return cls(tuple(tuple(clause) for clause in clauses))

    @classmethod
    def word(cls, word: Word) -> "DiamondTerm":
        return cls(((word,),))

    def words(self) -> set[Word]:
        return {w for clause in self.clauses for w in clause}


def minimize(dfa: Dfa) -> RegularLanguage:
    """
    Canonical minimal DFA for the language of `dfa`.

    Unreachable states are dropped, equivalent states merged with Hopcroft's
    partition refinement, and the blocks renumbered breadth-first.
    """
    reachable = dfa.reachable()
    finals = frozenset(q for q in reachable if q in dfa.finals)
    others = frozenset(q for q in reachable if q not in dfa.finals)

    # inverse transitions restricted to reachable states
    inverse: dict[tuple[int, int], set[int]] = {}
    for q in reachable:
        for a, target in enumerate(dfa.delta[q]):
            inverse.setdefault((a, target), set()).add(q)

    partition = {block for block in (finals, others) if block}
    block_of = {q: block for block in partition for q in block}
    worklist = set()
    if len(partition) == 2:
        worklist.add(finals if len(finals) <= len(others) else others)

    while worklist:
        splitter = worklist.pop()
        for a in range(len(dfa.alphabet)):
            affected: dict[frozenset[int], set[int]] = {}
            for target in splitter:
                for q in inverse.get((a, target), ()):
                    affected.setdefault(block_of[q], set()).add(q)
            for block, overlap in affected.items():
                if len(overlap) == len(block):
                    continue
                inside = frozenset(overlap)
                outside = block - inside
                partition.remove(block)
                partition.update((inside, outside))
                for q in inside:
                    block_of[q] = inside
                for q in outside:
                    block_of[q] = outside
                if block in worklist:
                    worklist.remove(block)
                    worklist.update((inside, outside))
                else:
                    worklist.add(inside if len(inside) <= len(outside) else outside)

    # breadth-first renumbering of the blocks
    number: dict[frozenset[int], int] = {block_of[dfa.init]: 0}
    order = [block_of[dfa.init]]
    queue = deque(order)
    while queue:
        block = queue.popleft()
        representative = next(iter(block))
        for target in dfa.delta[representative]:
            target_block = block_of[target]
            if target_block not in number:
                number[target_block] = len(order)
                order.append(target_block)
                queue.append(target_block)

    delta = tuple(
        tuple(number[block_of[t]] for t in dfa.delta[next(iter(block))]) for block in order
    )
    canonical_finals = frozenset(number[block] for block in order if block <= finals)
    logger.debug(f"Minimized {dfa.size} states to {len(order)}")
    return RegularLanguage(Dfa(dfa.alphabet, 0, delta, canonical_finals))


def membership(language: RegularLanguage, word: Word) -> bool:
    """Whether `word` belongs to `language`."""
    return language.contains(word)


def derivative(language: RegularLanguage, context: Context) -> RegularLanguage:
    """The two-sided derivative v⁻¹Lw⁻¹ = {u : vuw ∈ L}."""
    sigma = language.alphabet
    sigma.check_word(context.left)
    sigma.check_word(context.right)
    dfa = language.dfa
    start = dfa.run(context.left)
    finals = [q for q in range(dfa.size) if dfa.run(context.right, q) in dfa.finals]
    return minimize(dfa.with_finals(finals, init=start))


def preimage(language: RegularLanguage, hom: FreeMonoidHom) -> RegularLanguage:
    """The inverse image g⁻¹L = {w ∈ Δ* : g(w) ∈ L}."""
    hom.target.require(language.alphabet, "homomorphism target and language")
    dfa = language.dfa
    delta = tuple(
        tuple(dfa.run(image, q) for image in hom.images) for q in range(dfa.size)
    )
    return minimize(Dfa(hom.source, dfa.init, delta, dfa.finals))


def transition_monoid(language: RegularLanguage) -> tuple[FiniteMonoid, dict[str, int]]:
    """
    Transition monoid of the canonical DFA, which is the syntactic monoid of L.

    Elements are numbered breadth-first from the identity; `labels` carries the
    state transformations and `words` a shortest representative of each element.
    The product m·n is "first m, then n", matching word concatenation.
    """
    dfa = language.dfa
    elements, words = dfa.transformations()
    index = {element: i for i, element in enumerate(elements)}
    table = [
        [index[tuple(second[q] for q in first)] for second in elements] for first in elements
    ]
    monoid = FiniteMonoid(table, 0, labels=tuple(elements), words=tuple(words))
    letter_map = {symbol: index[dfa.transformation(symbol)] for symbol in dfa.alphabet}
    return monoid, letter_map


def eval_diamond(term: DiamondTerm, valuation: Callable[[Word], int], lattice: "Fdl") -> int:
    """Evaluate a join of meets of words in `lattice`."""
    result = lattice.bottom
    for clause in term.clauses:
        value = lattice.top
        for word in clause:
            value = int(lattice.meet[value, valuation(word)])
        result = int(lattice.join[result, value])
    return result


def is_subset(first: RegularLanguage, second: RegularLanguage) -> bool:
    """Language inclusion, decided on the synchronized product."""
    first.alphabet.require(second.alphabet, "compared languages")
    a, b = first.dfa, second.dfa
    start = (a.init, b.init)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if p in a.finals and q not in b.finals:
            return False
        for x in range(len(a.alphabet)):
            pair = (a.delta[p][x], b.delta[q][x])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def enumerate_words(alphabet: Alphabet, max_length: int) -> Iterator[Word]:
    """All words of length ≤ max_length in shortlex order."""
    for length in range(max_length + 1):
        for letters in itertools.product(alphabet.symbols, repeat=length):
            yield "".join(letters)
