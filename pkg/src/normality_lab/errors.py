"""Exception types shared across the package.

Every failure a caller can reasonably branch on gets its own class and
carries the numbers needed to explain itself (positions, budgets, digit
values), so CLI layers never have to parse message strings.
"""
from __future__ import annotations


class NormalityLabError(Exception):
    """Base class for all package-specific errors."""


class InsufficientDigitsError(NormalityLabError):
    """A digit stream ran dry before an operation got what it asked for.

    Attributes:
        available: digits the stream produced before exhausting.
        requested: digits the failing operation needed in total.
        source: human-readable description of the stream's origin.
    """

    def __init__(self, available: int, requested: int, source: str = ""):
        self.available = available
        self.requested = requested
        self.source = source
        where = f" [{source}]" if source else ""
        super().__init__(
            f"digit stream exhausted after {available} digits"
            f" (requested {requested}){where}"
        )


class DigitFileError(NormalityLabError):
    """Base class for problems with on-disk digit files."""


class MalformedHeaderError(DigitFileError):
    def __init__(self, path, line: int, detail: str):
        self.path = path
        self.line = line
        self.detail = detail
        super().__init__(f"{path}:{line}: malformed header: {detail}")


class InvalidDigitError(DigitFileError):
    """A digit token in the file is unparseable or out of range for the base."""

    def __init__(self, path, line: int, column: int, detail: str):
        self.path = path
        self.line = line
        self.column = column
        self.detail = detail
        super().__init__(f"{path}:{line}:{column}: {detail}")


class EnumerationBudgetError(NormalityLabError):
    """A brute-force enumeration would exceed its configured budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} strings, over the budget of {budget}"
        )
