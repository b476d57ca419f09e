"""
Enums and constants for the varietas workbench.
"""

from enum import Enum, IntEnum


class Provenance(Enum):
    """Where a U-quotient came from."""

    FROM_BIMODULE = "from-bimodule"
    DUAL_OF_VARIETY = "dual-of-variety"
    EXTERNAL = "external"


class MeasurementMode(Enum):
    """Measurement performed by a quantum automaton after each symbol."""

    SUBSPACE = "subspace"
    BASIS = "basis"


class StateKind(Enum):
    """Partition tag of a quantum automaton basis state."""

    ACCEPT = "a"
    REJECT = "r"
    NON_HALTING = "n"


class BimoduleLaw(Enum):
    """Equational laws of a lattice bimodule, as reported by the axiom checker."""

    MONOID_ASSOCIATIVITY = "monoid-associativity"
    MONOID_IDENTITY = "monoid-identity"
    LATTICE_ORDER = "lattice-order"
    LATTICE_DISTRIBUTIVITY = "lattice-distributivity"
    LEFT_BIACTION = "left-biaction"
    RIGHT_BIACTION = "right-biaction"
    LEFT_UNIT = "left-unit"
    RIGHT_UNIT = "right-unit"
    COMPATIBILITY = "compatibility"
    LEFT_JOIN = "left-join"
    LEFT_MEET = "left-meet"
    LEFT_BOTTOM = "left-bottom"
    LEFT_TOP = "left-top"
    RIGHT_JOIN = "right-join"
    RIGHT_MEET = "right-meet"
    RIGHT_BOTTOM = "right-bottom"
    RIGHT_TOP = "right-top"
    LEFT_TRANSLATION = "left-translation"
    RIGHT_TRANSLATION = "right-translation"


class VarietasConstants:
    """Workbench constants."""

    # End markers of quantum automata; never part of an input alphabet
    LEFT_END_MARKER = "κ"
    RIGHT_END_MARKER = "$"
    RESERVED_SYMBOLS = frozenset({LEFT_END_MARKER, RIGHT_END_MARKER})

    # Regex tokens
    EMPTY_WORD_TOKEN = "ε"
    EMPTY_LANGUAGE_TOKEN = "∅"
    DEFAULT_SYMBOL = "a"

    # |FCDL(4)| = 168; larger generator sets are refused unless overridden
    MAX_FREE_GENERATORS = 4

    # Numeric tolerance for unitarity and probability conservation
    QFA_TOLERANCE = 1e-9

    # Exhaustive word bounds
    MAX_MARGIN_LENGTH = 10
    ORACLE_WORD_LENGTH = 8


class ErrorCodes(IntEnum):
    """Error codes for workbench operations."""

    SUCCESS = 0
    ALPHABET_ERROR = 2001
    STRUCTURE_ERROR = 2002
    REGEX_SYNTAX_ERROR = 2003
    LATTICE_ERROR = 2004
    BOUND_EXCEEDED = 2005
    CONGRUENCE_ERROR = 2006
    VARIETY_ERROR = 2007
    QFA_ERROR = 2008
