"""Exception hierarchy for the casson3 package."""


class Casson3Error(Exception):
    """Base class for all computation errors raised by this package."""


class InvalidSurgery(Casson3Error):
    """Surgery description is not 1/K on a (2,q) torus knot with q odd, K nonzero."""


class UnsupportedFamily(Casson3Error):
    """The sphere did not arise from the supported surgery family."""


class AmbiguousSnap(Casson3Error):
    """Two rationals with admissible denominator lie inside the error window."""


class NoCandidate(Casson3Error):
    """No rational with admissible denominator lies inside the error window."""


class SnapFailure(Casson3Error):
    """Float-path snapping was rejected; caller should fall back to the exact path."""


class SingularSystem(Casson3Error):
    """Interpolation abscissae repeat."""


class ConventionMismatch(Casson3Error):
    """The frozen sign conventions failed their calibration anchors."""


class InapplicableMove(Casson3Error):
    """A chain-complex move's precondition does not hold (e.g. no cancellable pair)."""


class GradingFormulaUnavailable(Casson3Error):
    """No grading formula is implemented for this sphere."""


class MissingClosedForm(Casson3Error):
    """No stored closed forms for this q."""


class DegreeExceeded(Casson3Error):
    """A check point deviates from the fitted polynomial."""


class NotCoprime(Casson3Error):
    """Torus knot parameters must be coprime."""
