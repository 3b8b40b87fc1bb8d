"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class DentileError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class DomainError(DentileError, ValueError):
    """Arguments outside the domain of an operation (CLI exit code 2)."""

    exit_code = 2


class UntileableRegion(DomainError):
    """A region that cannot be tiled was handed to a counting operation."""


class RegimeError(DomainError):
    """An asymptotic formula was requested in a regime it does not cover."""


class InvariantViolation(DentileError, AssertionError):
    """An internal consistency check failed (CLI exit code 3)."""

    exit_code = 3
