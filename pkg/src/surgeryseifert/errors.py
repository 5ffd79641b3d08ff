"""Exception hierarchy shared by the library and the CLI."""


class SurgerySeifertError(Exception):
    """Base class for all errors raised by this package."""


class DiagramError(SurgerySeifertError, ValueError):
    """A diagram file or record is malformed or inconsistent."""


class DimensionError(SurgerySeifertError, ValueError):
    """Matrix and vector shapes do not agree."""


class NotNullHomologousError(SurgerySeifertError):
    """The integer system M X = V has no solution.

    Equivalently the tracked curve is not null-homologous in the surgered
    manifold, so it bounds no Seifert surface there and linking numbers
    against it are undefined.
    """


class SeifertDataError(SurgerySeifertError, ValueError):
    """Basis-curve data is incomplete or inconsistent."""


class InvariantViolation(SurgerySeifertError):
    """An internal cross-check failed (e.g. ledger versus diagram)."""
