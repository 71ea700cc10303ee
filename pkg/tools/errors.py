"""
NumRange Toolkit - Error types
Library code raises these; only main.py maps them to exit codes.
"""

from typing import Optional


class NumRangeError(ValueError):
    """Base class for toolkit errors"""


class ShapeError(NumRangeError):
    """Dimension mismatch or non-square input"""


class PreconditionError(NumRangeError):
    """An operation precondition does not hold"""


class MatrixParseError(NumRangeError):
    """Malformed matrix file; carries the position when known"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)
