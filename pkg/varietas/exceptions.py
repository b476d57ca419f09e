"""
Custom exceptions for workbench operations.
"""

from typing import Optional

from .enums import ErrorCodes


class VarietasError(Exception):
    """Base exception for workbench operations."""

    def __init__(self, message: str, error_code: ErrorCodes = ErrorCodes.SUCCESS):
        super().__init__(message)
        self.error_code = error_code
        self.message = message

    def __str__(self) -> str:
        return f"[{self.error_code.name}] {self.message}"


class AlphabetError(VarietasError):
    """Foreign letters or mismatched alphabets."""

    def __init__(self, message: str, symbol: Optional[str] = None):
        super().__init__(message, ErrorCodes.ALPHABET_ERROR)
        self.symbol = symbol


class StructureError(VarietasError):
    """Malformed tables, partitions or automata."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message, ErrorCodes.STRUCTURE_ERROR)
        self.field = field


class RegexSyntaxError(VarietasError):
    """Regex parse errors."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message, ErrorCodes.REGEX_SYNTAX_ERROR)
        self.position = position


class LatticeError(VarietasError):
    """Inputs that are not lattices, not distributive, or not monotone."""

    def __init__(self, message: str, witness: Optional[tuple] = None):
        super().__init__(message, ErrorCodes.LATTICE_ERROR)
        self.witness = witness


class BoundExceededError(VarietasError):
    """A size bound was exceeded."""

    def __init__(self, message: str, bound: Optional[int] = None):
        super().__init__(message, ErrorCodes.BOUND_EXCEEDED)
        self.bound = bound


class CongruenceError(VarietasError):
    """Quotient requested by a relation that is not a congruence."""

    def __init__(self, message: str):
        super().__init__(message, ErrorCodes.CONGRUENCE_ERROR)


class VarietyError(VarietasError):
    """Language sets that are not closed under derivatives."""

    def __init__(self, message: str, missing: Optional[object] = None):
        super().__init__(message, ErrorCodes.VARIETY_ERROR)
        self.missing = missing


class QfaError(VarietasError):
    """Malformed quantum automata."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message, ErrorCodes.QFA_ERROR)
        self.field = field
