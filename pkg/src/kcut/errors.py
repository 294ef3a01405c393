"""Exception types shared across the package.

The CLI maps these onto exit codes (see ``kcut.cli``), so every failure a
user can trigger should surface as one of them.
"""


class KCutError(Exception):
    """Base class for all package errors."""


class ParseError(KCutError, ValueError):
    """Malformed graph6 / edge-list input.

    ``offset`` is a 0-based byte offset (graph6) and ``line`` a 1-based line
    number (edge lists, graph6 streams); either may be ``None``.
    """

    def __init__(self, message, *, offset=None, line=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class GraphTooLarge(KCutError, ValueError):
    """Order exceeds what the bitset representation supports."""


class DisconnectedGraph(KCutError, ValueError):
    """Operation requires a connected input."""


class BudgetExceeded(KCutError):
    """An exhaustive search would exceed its configured budget."""


class MethodMismatch(KCutError):
    """Two independent computations of the same quantity disagree."""


class TheoremViolation(KCutError):
    """A proven inequality or characterization failed on a concrete graph.

    ``details`` holds the structured findings so callers can report them.
    """

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details if details is not None else []
