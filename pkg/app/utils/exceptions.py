"""
Error Types
===========

Exception hierarchy shared by the Gaussian core, the services and the CLI.

Hierarchy:
    KeyRateError
        DomainError       <- out-of-range physical parameter, non-physical CM
        UsageError        <- malformed call (empty list, bad permutation, ...)
        SingularityError  <- homodyne on a zero-variance quadrature, closed form on a
                             near-singular CM, q/p entropy disagreement

DomainError and UsageError also derive from ValueError, and SingularityError
from ArithmeticError, so callers that only know the builtin types still catch
them.
"""


class KeyRateError(Exception):
    """Base class for every error raised by the toolkit."""


class DomainError(KeyRateError, ValueError):
    """A parameter or covariance matrix lies outside its physical domain."""


class UsageError(KeyRateError, ValueError):
    """An operation was called with structurally invalid arguments."""


class SingularityError(KeyRateError, ArithmeticError):
    """A conditioning step would divide by a vanishing variance."""
