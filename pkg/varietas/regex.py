"""
Regex dialect for regular-language input.

Literals, concatenation, `|`, `*` and parentheses, plus `ε` for the empty word
and `∅` for the empty language. Patterns compile through a Thompson automaton
and the subset construction into a canonical minimal DFA.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Union

from .enums import VarietasConstants
from .exceptions import RegexSyntaxError
from .languages import Alphabet, Dfa, RegularLanguage, minimize

logger = logging.getLogger(__name__)

OPERATORS = frozenset("|*()")


@dataclass(frozen=True)
class Null:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Symbol:
    letter: str


@dataclass(frozen=True)
class Concat:
    first: "Regex"
    second: "Regex"


@dataclass(frozen=True)
class Alternative:
    first: "Regex"
    second: "Regex"


@dataclass(frozen=True)
class Repeat:
    body: "Regex"


Regex = Union[Null, Epsilon, Symbol, Concat, Alternative, Repeat]


class _Parser:
    """Recursive-descent parser over the pattern characters, whitespace skipped."""

    def __init__(self, pattern: str):
        self.tokens = [(i, c) for i, c in enumerate(pattern) if not c.isspace()]
        self.position = 0
        self.end = len(pattern)

    def peek(self) -> Optional[str]:
        if self.position < len(self.tokens):
            return self.tokens[self.position][1]
        return None

    def offset(self) -> int:
        if self.position < len(self.tokens):
            return self.tokens[self.position][0]
        return self.end

    def parse(self) -> Regex:
        if not self.tokens:
            raise RegexSyntaxError("Empty pattern", 0)
        tree = self.alternative()
        if self.peek() is not None:
            raise RegexSyntaxError(f"Unexpected {self.peek()!r}", self.offset())
        return tree

    def alternative(self) -> Regex:
        tree = self.concatenation()
        while self.peek() == "|":
            self.position += 1
            tree = Alternative(tree, self.concatenation())
        return tree

    def concatenation(self) -> Regex:
        parts: list[Regex] = []
        while self.peek() is not None and self.peek() not in "|)":
            parts.append(self.repetition())
        if not parts:
            return Epsilon()
        tree = parts[0]
        for part in parts[1:]:
            tree = Concat(tree, part)
        return tree

    def repetition(self) -> Regex:
        tree = self.atom()
        while self.peek() == "*":
            self.position += 1
            tree = Repeat(tree)
        return tree

    def atom(self) -> Regex:
        token, offset = self.peek(), self.offset()
        if token == "(":
            self.position += 1
            tree = self.alternative()
            if self.peek() != ")":
                raise RegexSyntaxError("Unbalanced parenthesis", offset)
            self.position += 1
            return tree
        if token == "*":
            raise RegexSyntaxError("Nothing to repeat", offset)
        if token is None or token in OPERATORS:
            raise RegexSyntaxError(f"Unexpected {token!r}", offset)
        self.position += 1
        if token == VarietasConstants.EMPTY_WORD_TOKEN:
            return Epsilon()
        if token == VarietasConstants.EMPTY_LANGUAGE_TOKEN:
            return Null()
        if token in VarietasConstants.RESERVED_SYMBOLS:
            raise RegexSyntaxError(f"End marker {token!r} cannot be a literal", offset)
        return Symbol(token)


def parse_regex(pattern: str) -> Regex:
    """Parse a pattern into its syntax tree; raises RegexSyntaxError."""
    return _Parser(pattern).parse()


def literals(tree: Regex) -> set[str]:
    match tree:
        case Symbol(letter):
            return {letter}
        case Concat(first, second) | Alternative(first, second):
            return literals(first) | literals(second)
        case Repeat(body):
            return literals(body)
        case _:
            return set()


@dataclass
class _Nfa:
    """Thompson automaton: ε-edges and single-letter edges."""

    epsilon: list[list[int]] = field(default_factory=list)
    edges: list[list[tuple[str, int]]] = field(default_factory=list)

    def state(self) -> int:
        self.epsilon.append([])
        self.edges.append([])
        return len(self.epsilon) - 1

    def build(self, tree: Regex) -> tuple[int, int]:
        start, accept = self.state(), self.state()
        match tree:
            case Null():
                pass
            case Epsilon():
                self.epsilon[start].append(accept)
            case Symbol(letter):
                self.edges[start].append((letter, accept))
            case Concat(first, second):
                s1, a1 = self.build(first)
                s2, a2 = self.build(second)
                self.epsilon[start].append(s1)
                self.epsilon[a1].append(s2)
                self.epsilon[a2].append(accept)
            case Alternative(first, second):
                for branch in (first, second):
                    s, a = self.build(branch)
                    self.epsilon[start].append(s)
                    self.epsilon[a].append(accept)
            case Repeat(body):
                s, a = self.build(body)
                self.epsilon[start] += [s, accept]
                self.epsilon[a] += [s, accept]
        return start, accept

    def close(self, states: frozenset[int]) -> frozenset[int]:
        found = set(states)
        stack = list(states)
        while stack:
            for target in self.epsilon[stack.pop()]:
                if target not in found:
                    found.add(target)
                    stack.append(target)
        return frozenset(found)


def to_dfa(tree: Regex, alphabet: Alphabet) -> Dfa:
    """Subset construction over the Thompson automaton of `tree`."""
    nfa = _Nfa()
    start, accept = nfa.build(tree)
    initial = nfa.close(frozenset({start}))
    index = {initial: 0}
    order = [initial]
    delta: list[list[int]] = []
    queue = deque([initial])
    while queue:
        current = queue.popleft()
        row = []
        for letter in alphabet:
            moved = frozenset(t for q in current for c, t in nfa.edges[q] if c == letter)
            target = nfa.close(moved)
            if target not in index:
                index[target] = len(order)
                order.append(target)
                queue.append(target)
            row.append(index[target])
        delta.append(row)
    finals = [i for i, subset in enumerate(order) if accept in subset]
    logger.debug(f"Subset construction produced {len(order)} states")
    return Dfa.build(alphabet, delta, 0, finals)


def compile_regex(
    pattern: str,
    alphabet: Optional[Union[str, Alphabet]] = None,
    default_symbol: str = VarietasConstants.DEFAULT_SYMBOL,
) -> RegularLanguage:
    """
    Compile a pattern into a canonical RegularLanguage.

    Without an explicit alphabet the sorted set of literals is used, falling
    back to `default_symbol` for letter-free patterns such as `∅` or `ε*`.
    """
    tree = parse_regex(pattern)
    letters = literals(tree)
    if alphabet is None:
        sigma = Alphabet(tuple(sorted(letters)) or (default_symbol,))
    else:
        sigma = Alphabet.of(alphabet)
        for letter in sorted(letters):
            sigma.check_word(letter)
    return minimize(to_dfa(tree, sigma))
