"""Error hierarchy.

Every raisable condition carries a stable machine-readable ``code`` so that
callers (and the command line front end) can dispatch without string-matching
human prose.  Exit-status policy lives in the CLI, not here; the only contract
at this level is the code string and the payload attributes documented per
class.
"""


class SeqcmError(Exception):
    """Base class; ``code`` is stable across releases."""

    code = "internal-error"


class AmbientMismatchError(SeqcmError):
    """Operands live in polynomial rings with different variable counts."""

    code = "ambient-mismatch"


class UndefinedInputError(SeqcmError):
    """Operation applied to an input it is not defined for (e.g. m_of(1))."""

    code = "undefined-input"


class NotHomogeneousError(SeqcmError):
    code = "not-homogeneous"


class SingularMatrixError(SeqcmError):
    code = "singular-matrix"


class ParseError(SeqcmError):
    """Text input rejected; cites 1-based line and column."""

    code = "parse-error"

    def __init__(self, message, line=1, column=1):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.line = line
        self.column = column


class CapacityError(SeqcmError):
    """A configured size cap was exceeded; deliberate, never silent."""

    code = "capacity"

    def __init__(self, what, limit, requested):
        super().__init__(
            "%s exceeds cap: requested %s, limit %s" % (what, requested, limit)
        )
        self.what = what
        self.limit = limit
        self.requested = requested


class GenericityError(SeqcmError):
    """Random coordinate changes kept disagreeing within the retry budget."""

    code = "genericity-failure"


class CertificationError(SeqcmError):
    """A two-seed cross-check failed after the retry budget."""

    code = "certification-failure"


class NotStronglyStableError(SeqcmError):
    """Input ideal fails the strong-stability exchange test.

    ``witness`` is (generator, i, j) with x_j * u / x_i outside the ideal.
    """

    code = "not-strongly-stable"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class StrongStabilityViolationError(SeqcmError):
    """A computed generic initial ideal is not strongly stable (bug flag)."""

    code = "strong-stability-violation"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSquarefreeError(SeqcmError):
    code = "not-squarefree"


class AmbientGrowthError(SeqcmError):
    """A shifted generator needs a variable index beyond the ambient ring."""

    code = "ambient-growth"


class ShiftedViolationError(SeqcmError):
    """Shifted-complex output fails the squarefree exchange test (bug flag)."""

    code = "shifted-violation"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BoundTooSmallError(SeqcmError):
    """A swept degree bound ended before the stabilization check passed."""

    code = "bound-too-small"


class BoxInstabilityError(SeqcmError):
    """Widening the Cech summation box changed a reported value."""

    code = "box-instability"


class WindowInstabilityError(SeqcmError):
    """Widening the comparison window changed a verdict."""

    code = "window-instability"


class InconsistencyError(SeqcmError):
    """Two routes that must agree did not; always a bug, never a verdict."""

    code = "inconsistency"
