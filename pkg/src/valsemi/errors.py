"""Exception hierarchy shared across the package.

Everything raised intentionally derives from DomainError so the CLI can map
domain failures to a single exit code.
"""


class DomainError(Exception):
    """Base class for domain-level failures (CLI exit code 1)."""


class ParameterError(DomainError):
    """An input violates a named validity condition."""


class TrivialGroupError(DomainError):
    """The trivial group has no generator."""


class PrimeSearchCeilingError(DomainError):
    """A prime search exceeded the configured ceiling."""


class GrowthConditionError(DomainError):
    """A value sequence violates gamma_{l+1} > mbar_l * gamma_l."""


class InconsistentSequenceError(DomainError):
    """A value sequence admits no bounded expansion where one is required."""


class DepthError(DomainError):
    """The truncation depth is insufficient to answer exactly."""


class ZeroPolynomialError(DomainError):
    """An operation that is undefined for the zero polynomial."""


class ConstructionError(DomainError):
    """A valuation construction was refused or failed its preconditions."""


class OracleBoundError(DomainError):
    """A brute-force oracle was invoked beyond its size bounds."""
