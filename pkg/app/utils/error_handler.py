"""
Error types and CLI error translation.

Every failure the library raises on purpose derives from LvcError. The CLI
translates those into a user-facing message, a suggestion and a process exit
status through a single table.
"""

from typing import Any, Dict, Optional, Sequence, Tuple


class LvcError(Exception):
    """Base class for all deliberate library errors."""


class DomainMismatchError(LvcError, ValueError):
    """Inputs live on incompatible domains (different point sets, kinds or dimensions)."""


class BudgetExceededError(LvcError):
    """An exact enumeration or search would exceed its configured budget."""

    def __init__(self, what: str, requested: int, budget: int):
        super().__init__(f"{what}: requested {requested} exceeds budget {budget}")
        self.what = what
        self.requested = requested
        self.budget = budget


class DegenerateInputError(LvcError, ValueError):
    """Empty supports, all-zero weights, out-of-range parameters."""


class UnsupportedDomainError(LvcError, ValueError):
    """A restricted oracle was handed a domain outside its restriction tag."""


class PreconditionError(LvcError):
    """A generator precondition failed; carries the offending subset when there is one."""

    def __init__(self, message: str, subset: Optional[Sequence[Any]] = None,
                 labelling: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.subset = tuple(subset) if subset is not None else None
        self.labelling = tuple(labelling) if labelling is not None else None


class SpecParseError(LvcError, ValueError):
    """A class, domain or generator spec string could not be resolved."""


class UnknownSuiteError(LvcError, KeyError):
    """verify() was asked for a suite that does not exist."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown suite"


class DegenerateSampleError(LvcError):
    """A random draw produced duplicate or non-general-position points; retried by callers."""


# Mapping of error types to (message, exit status)
EXIT_CODES: Dict[type, Tuple[str, int]] = {
    DomainMismatchError: ("Incompatible inputs", 2),
    SpecParseError: ("Could not parse spec", 2),
    DegenerateInputError: ("Degenerate input", 2),
    UnsupportedDomainError: ("Domain not supported by this oracle", 3),
    BudgetExceededError: ("Exact computation budget exceeded", 4),
    PreconditionError: ("Generator precondition violated", 5),
    UnknownSuiteError: ("Unknown verification suite", 6),
    DegenerateSampleError: ("Could not draw a non-degenerate sample", 7),
}

SUGGESTIONS: Dict[type, str] = {
    BudgetExceededError: "Shrink the point set or raise LVC_ORACLE_CALL_BUDGET; exact answers are never approximated",
    UnsupportedDomainError: "Use a moment-curve domain (psi:n=..) or an axis-colinear domain (line:..) for this class",
    SpecParseError: "Check the kind:key=value syntax, e.g. intervals:k=3 or ptf:n=5,k=2,domain=cube",
    PreconditionError: "Pick alpha so that alpha*n does not exceed the LVC dimension of the class on S",
    UnknownSuiteError: "Run `main.py verify --list` to see the available suites",
}


def get_error_message(exc: BaseException) -> Tuple[str, int]:
    """
    Get a user-facing message and exit status for an exception.

    Args:
        exc: any exception

    Returns:
        Tuple of (message, exit_status)

    Example:
        >>> get_error_message(UnknownSuiteError("nope"))
        ('Unknown verification suite', 6)
    """
    for error_type, entry in EXIT_CODES.items():
        if isinstance(exc, error_type):
            return entry
    if isinstance(exc, (ValueError, OSError)):
        return ("Invalid input", 2)
    return ("Unexpected error", 1)


def handle_cli_exception(exc: BaseException, operation: str = "operation") -> Dict[str, Any]:
    """
    Build a detail dict describing a failed CLI operation.

    Args:
        exc: the exception raised by the library
        operation: the subcommand or step that failed

    Returns:
        Dict with error, operation, detail, exit_status and (when known) suggestion
    """
    message, status = get_error_message(exc)
    detail: Dict[str, Any] = {
        "error": message,
        "operation": operation,
        "detail": str(exc),
        "exit_status": status,
    }
    for error_type, suggestion in SUGGESTIONS.items():
        if isinstance(exc, error_type):
            detail["suggestion"] = suggestion
            break
    if isinstance(exc, PreconditionError) and exc.subset is not None:
        detail["subset"] = [str(p) for p in exc.subset]
        if exc.labelling is not None:
            detail["labelling"] = list(exc.labelling)
    return detail


def format_error_for_logging(exc: BaseException, operation: str) -> str:
    message, status = get_error_message(exc)
    return f"❌ {operation} failed: {message} (exit {status}) | {exc}"
