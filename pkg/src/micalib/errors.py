"""Exception hierarchy used across the calibration pipeline."""


class CalibrationError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(CalibrationError):
    """Array/vector sizes disagree with the declared (N, K) layout."""


class NonOrthonormal(CalibrationError):
    """Matrix claimed to be a rotation fails the orthonormality check."""


class DegenerateGeometry(CalibrationError):
    """Source coincides with an array position (or the reference origin)."""


class DegenerateTiming(CalibrationError):
    """Emission times do not allow separating offset from clock drift."""


class DegenerateTriangulation(CalibrationError):
    """The two DOA rays used for triangulation are (near-)parallel."""


class DegenerateRegistration(CalibrationError):
    """Point sets are collinear; the aligning rotation is not unique."""


class InsufficientSteps(CalibrationError):
    """Fewer time steps than the operation requires."""


class SolverFailure(CalibrationError):
    """A sub-solver did not reach an acceptable residual."""


class AllOutliers(CalibrationError):
    """Outlier rejection removed too many points to keep fitting."""


class SingularNormalEquations(CalibrationError):
    """Gauss-Newton normal matrix is singular (unobservable problem)."""

    def __init__(self, message, rank=None, size=None, gap_ratio=None):
        super().__init__(message)
        self.rank = rank
        self.size = size
        self.gap_ratio = gap_ratio


class InvalidSpec(CalibrationError):
    """Scenario specification is inconsistent or unsupported."""


class ParseError(CalibrationError):
    """Dataset/config file could not be parsed."""


class SchemaMismatch(CalibrationError):
    """Dataset file content disagrees with its declared schema."""
