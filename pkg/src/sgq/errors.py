"""Exception taxonomy shared across the package.

Usage errors (bad tokens, out-of-domain parameters, malformed input) derive
from ValueError; operational failures (caps, missing or inconsistent data)
derive from RuntimeError. The CLI maps the former to exit status 2 and the
latter to exit status 1.
"""


class SgqError(Exception):
    """Base class for all package-specific errors."""


class FactorRangeError(SgqError, ValueError):
    """Integer outside the supported factorization range [1, 2**127)."""


class NotDivisibleError(SgqError, ValueError):
    """Exact division requested where the quotient is not integral."""


class UnknownGroupError(SgqError, ValueError):
    """Group token or sporadic name not recognized."""


class ParameterDomainError(SgqError, ValueError):
    """Family parameters outside the simple-group domain."""


class GeneratorFileError(SgqError, ValueError):
    """Malformed permutation generator file."""


class CensusCapError(SgqError, RuntimeError):
    """Enumeration exceeded the configured element cap."""


class DataFileError(SgqError, RuntimeError):
    """Vendored data file missing or unreadable."""


class ConsistencyError(SgqError, RuntimeError):
    """Internal cross-check failed (corrupt data or logic fault)."""
