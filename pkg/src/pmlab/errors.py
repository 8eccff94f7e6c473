"""Exception hierarchy for pmlab."""

from __future__ import annotations


class PmlabError(Exception):
    pass


class MalformedTables(PmlabError):
    pass


class InvalidOrder(PmlabError):
    pass


class OrderOverflow(PmlabError):
    pass


class CapExceeded(PmlabError):
    pass


class UniquenessViolation(PmlabError):
    """Two distinct von Neumann inverses were found for one element."""


class InvariantViolation(PmlabError):
    """A property that must hold on every finite instance was falsified.

    Carries the offending witness so reports can show it.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotIdempotent(PmlabError):
    pass


class NotPseudomeadow(PmlabError):
    def __init__(self, message: str, element: int | None = None, minimal_sum: int | None = None):
        super().__init__(message)
        self.element = element
        self.minimal_sum = minimal_sum


class NotAnIdeal(PmlabError):
    pass


class NotPrime(PmlabError):
    pass


class NotMaximal(PmlabError):
    pass


class NotReduced(PmlabError):
    pass


class AlgSyntaxError(PmlabError):
    def __init__(self, message: str, line: int, column: int = 1, expected: str | None = None):
        loc = f"line {line}, column {column}"
        text = f"{loc}: {message}"
        if expected:
            text += f" (expected {expected})"
        super().__init__(text)
        self.line = line
        self.column = column
        self.expected = expected


class AxiomViolation(PmlabError):
    def __init__(self, report):
        failed = ", ".join(
            f"({a}) at {report.witnesses[a]}" for a in report.failed_axioms()
        )
        super().__init__(f"axioms violated: {failed}")
        self.report = report
