"""
Exception hierarchy for the surgeon toolkit.

Every error raised by the library derives from SurgeonError so callers can
catch the whole family at once; arithmetic and lookup failures also derive
from the matching builtin so ordinary ``except ValueError`` code keeps working.
"""


class SurgeonError(Exception):
    """Base class for all surgeon errors."""


class InvalidCoefficient(SurgeonError, ArithmeticError):
    """A coefficient is malformed or an undefined operation involves infinity."""


class NoRewriteApplies(SurgeonError):
    """A continued-fraction rewrite was requested on a word it does not match."""


class NotCoprime(SurgeonError, ValueError):
    """Lens space parameters share a common factor."""


class InvalidChain(SurgeonError, ValueError):
    """A chain segment has a non-integral interior coefficient."""


class MagicInconsistency(SurgeonError):
    """Two magic-manifold patterns matched the same filling with different results."""

    def __init__(self, message: str, results=None):
        super().__init__(message)
        self.results = list(results or [])


class UnsupportedParameters(SurgeonError, ValueError):
    """Parameters fall outside every regime with a stated closed form."""


class InvalidCusp(SurgeonError, ValueError):
    """A cusp shape has linearly dependent translations."""


class InvalidMultislope(SurgeonError, ValueError):
    """A multislope does not fit the manifold it is applied to."""


class ManifoldDataError(SurgeonError, ValueError):
    """A cusped manifold document failed validation."""


class UnknownTable(SurgeonError, KeyError):
    """No dataset is registered under the requested id."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else 'unknown table'


class DatasetError(SurgeonError, ValueError):
    """A dataset file or one of its cell expressions is malformed."""
