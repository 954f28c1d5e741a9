"""Exception hierarchy shared by every evaluator in the package."""


class HurwitzError(Exception):
    """Base class for all errors raised by :mod:`hurwitz`."""


class DomainError(HurwitzError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """The evaluation point coincides with a pole (s = 1)."""


class LimitError(DomainError):
    """A request exceeds a documented size limit (e.g. character modulus)."""


class ConvergenceError(HurwitzError, ArithmeticError):
    """The requested accuracy could not be reached after escalation."""
