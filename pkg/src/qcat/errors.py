"""Exception hierarchy shared by all modules."""


class QcatError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(QcatError):
    """Malformed input data: missing table entries, unknown identifiers,
    schema violations.  Distinct from a law violation, which is reported
    as a witness inside a PropertyReport."""


class PreconditionError(QcatError):
    """An operation was called on data that fails its stated precondition
    (e.g. extracting a locale from a non-divisible quantale)."""


class EnumerationBoundError(QcatError):
    """A bounded enumeration (presheaves, completions) would exceed the
    configured candidate bound."""
