"""Exception types shared across the package."""


class FundfreqError(Exception):
    """Base class for all fundfreq errors."""


class DomainError(FundfreqError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class DegenerateFrequencyError(FundfreqError):
    """The per-harmonic normal equations are numerically singular.

    Happens when a trial frequency drives ``j*lambda`` toward 0 or pi,
    collapsing the cosine/sine design columns onto each other.
    """


class CurvatureError(FundfreqError):
    """The criterion curvature is zero or non-finite; no Newton step exists."""


class BoundaryError(FundfreqError):
    """A Newton iterate left the admissible interval (0, pi/p).

    The rejected raw value is carried in ``value``.
    """

    def __init__(self, value: float, message: str | None = None):
        self.value = value
        super().__init__(message or f"iterate {value!r} left the admissible frequency interval")
