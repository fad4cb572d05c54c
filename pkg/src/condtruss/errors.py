"""
Exception hierarchy shared by the library and the command-line roles.
"""

from __future__ import annotations


class CondTrussError(Exception):
    """Base class for every error raised by condtruss."""

    exit_code: int = 1


class UsageError(CondTrussError):
    """Raised when an operation is invoked with arguments it cannot accept."""

    exit_code = 2

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class DeadEdgeError(UsageError):
    """Raised when peeling an edge that has already been removed."""

    def __init__(self, eid: int):
        self.eid = eid
        super().__init__(f"Edge {eid} is not alive")


class GraphMismatchError(UsageError):
    """Raised when a decomposition or index was built from a different graph."""

    def __init__(self, expected: bytes, actual: bytes, what: str = "index"):
        self.expected = expected
        self.actual = actual
        self.what = what
        super().__init__(
            f"The {what} does not belong to this graph "
            f"(digest {expected.hex()[:16]}… != {actual.hex()[:16]}…)"
        )


class EdgeListParseError(CondTrussError):
    """Raised when an edge-list line is not UTF-8 or does not hold exactly two tokens."""

    exit_code = 2

    def __init__(
        self,
        line_number: int,
        line: str,
        source: str | None = None,
        reason: str | None = None,
    ):
        self.line_number = line_number
        self.line = line
        self.source = source
        self.reason = reason or f"expected 2 tokens, got {line.strip()!r}"
        where = f"{source}:{line_number}" if source else f"line {line_number}"
        super().__init__(f"Malformed edge at {where}: {self.reason}")


class IndexFormatError(CondTrussError):
    """Raised when an index or decomposition file cannot be decoded."""

    exit_code = 3

    def __init__(self, offset: int, reason: str, unit: str = "byte offset"):
        self.offset = offset
        self.reason = reason
        super().__init__(f"Invalid data at {unit} {offset}: {reason}")


class LabelLookupError(CondTrussError, KeyError):
    """Raised when a query names a vertex label the graph does not contain."""

    exit_code = 4

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"Unknown vertex label: {label!r}")

    def __str__(self) -> str:
        return f"Unknown vertex label: {self.label!r}"
