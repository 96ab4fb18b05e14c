"""Exception hierarchy for homolattice.

Every anticipated failure raises a subclass of :class:`HomolatticeError`, so
callers (and the CLI, which maps them to exit status 1) can catch one type.
Anything else escaping the library is a bug.
"""

from __future__ import annotations


class HomolatticeError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionError(HomolatticeError, ValueError):
    """A vector or matrix has the wrong length/shape for the operation."""


class InvalidSurfaceError(HomolatticeError, ValueError):
    """An operation required a (strictly) valid surface and got one that is not.

    Carries the offending validation report so callers can show diagnostics.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class DegeneratePairingError(HomolatticeError):
    """Symplectic pairing could not pair all inputs; reports the achieved rank."""

    def __init__(self, message: str, achieved_rank: int):
        super().__init__(message)
        self.achieved_rank = achieved_rank


class ModelingError(HomolatticeError):
    """An internal cross-check failed (formula vs. oracle, certification, ...).

    These checks guard theorems; a failure means a modeling bug, not bad input.
    """


class NoLogicalsError(HomolatticeError):
    """Distance was requested for a surface that encodes no logical qubits."""


class BudgetError(HomolatticeError):
    """The exact-search sheet budget 2^m was exceeded.

    Use the brute-force method, or raise the budget explicitly (``budget=``
    argument or the ``HOMOLATTICE_BUDGET`` environment variable).
    """


class UnsupportedTopologyError(HomolatticeError):
    """The boundary-strategy basis only covers genus-0 surfaces with holes."""


class OutOfDomainError(HomolatticeError, ValueError):
    """Arguments lie outside the operation's stated domain."""


class OverheadError(HomolatticeError):
    """Overhead n/(k*d^2) is undefined because k = 0 or d = 0."""
