"""Deciders built on the two local cohomology routes and on shifting.

Equality of eventually-polynomial cohomology tables is decided on a finite
window and then re-checked once on a widened window.  Both routes produce
tables whose negative-degree behavior is polynomial of degree < n starting
just below the default window, so agreement on the widened window settles
agreement everywhere; a base verdict that flips under widening means the
caller picked a window too small to be conclusive, and is reported as
WindowInstabilityError rather than silently trusted.
"""

from .errors import (
    InconsistencyError,
    UndefinedInputError,
    WindowInstabilityError,
)
from .groebner import PolynomialIdeal, gin
from .monomial import (
    MonomialIdeal,
    default_cohomology_window,
    local_cohomology_strongly_stable,
)
from .oracles import cech_local_cohomology
from .simplicial import (
    alexander_dual,
    betti_numbers_of_ideal,
    complex_of,
    shifted_complex,
    stanley_reisner_ideal,
)


def widen_window(window, n):
    return (window[0] - (n + 2), window[1] + 2)


def _merge_windows(a, b):
    return (min(a[0], b[0]), max(a[1], b[1]))


class ComparisonReport:
    """Outcome of comparing two cohomology tables over a window."""

    def __init__(self, left_label, right_label, window, wide_window,
                 verdict, diff, left, right, seed=None, notes=()):
        self.left_label = left_label
        self.right_label = right_label
        self.window = window
        self.wide_window = wide_window
        self.verdict = verdict
        self.diff = list(diff)
        self.left = left
        self.right = right
        self.seed = seed
        self.notes = list(notes)

    def to_json(self):
        return {
            "left": self.left_label,
            "right": self.right_label,
            "window": list(self.window),
            "wide_window": None if self.wide_window is None else list(self.wide_window),
            "verdict": self.verdict,
            "diff": [list(entry) for entry in self.diff],
            "tables": {
                "left": None if self.left is None else self.left.to_json(),
                "right": None if self.right is None else self.right.to_json(),
            },
            "seed": self.seed,
            "notes": self.notes,
        }


def conclusive_table_comparison(make_left, make_right, window, n):
    """(equal, wide left table, wide right table, wide window).

    Raises WindowInstabilityError when the base window said equal but the
    widened window disagrees.
    """
    base_equal = make_left(window).equal_on(make_right(window), window)
    wide = widen_window(window, n)
    left_wide = make_left(wide)
    right_wide = make_right(wide)
    wide_equal = left_wide.equal_on(right_wide, wide)
    if base_equal and not wide_equal:
        raise WindowInstabilityError(
            "tables agree on %r but not on %r" % (window, wide))
    return wide_equal, left_wide, right_wide, wide


class BettiComparison:
    """Betti tables of an ideal and of its shifted companion, side by side."""

    def __init__(self, left_label, right_label, left, right):
        self.left_label = left_label
        self.right_label = right_label
        self.left = left
        self.right = right
        self.equal = left.same_entries(right)
        self.first_difference = None if self.equal else left.first_difference(right)

    def to_json(self):
        return {
            "left": self.left_label,
            "right": self.right_label,
            "equal": self.equal,
            "first_difference": (None if self.first_difference is None
                                 else list(self.first_difference)),
            "tables": {"left": self.left.to_json(), "right": self.right.to_json()},
        }


class SeqCMVerdict:
    """Boolean verdict plus the evidence that produced it."""

    def __init__(self, value, route, seed, details):
        self.value = bool(value)
        self.route = route
        self.seed = seed
        self.details = details

    def to_json(self):
        details = self.details
        if hasattr(details, "to_json"):
            details = details.to_json()
        return {"value": self.value, "route": self.route,
                "seed": self.seed, "details": details}


def is_componentwise_linear(ideal, seed):
    """Whether a squarefree monomial ideal is componentwise linear.

    Decided by shifting: the ideal qualifies exactly when its graded Betti
    numbers survive the passage to the shifted complex unchanged.  The
    zero and unit ideals qualify trivially.
    """
    cx = complex_of(ideal)
    shifted = shifted_complex(cx, seed)
    comparison = BettiComparison(
        "ideal", "shifted ideal",
        betti_numbers_of_ideal(cx), betti_numbers_of_ideal(shifted))
    return SeqCMVerdict(comparison.equal, "betti-vs-shifted", seed, comparison)


def is_sequentially_cm(cx, seed):
    """Whether the face ring of the complex is sequentially Cohen-Macaulay.

    Decided through the Alexander dual: the complex qualifies exactly when
    the Stanley-Reisner ideal of its dual is componentwise linear.
    """
    dual_ideal = stanley_reisner_ideal(alexander_dual(cx))
    inner = is_componentwise_linear(dual_ideal, seed)
    return SeqCMVerdict(inner.value, "dual-componentwise-linear",
                        seed, inner.details)


def main_theorem_check(ideal, seed, window=None):
    """Compare local cohomology of R/I with that of R/gin(I).

    The gin side always runs (dimension filtration of the strongly stable
    gin).  The R/I side runs through the Cech complex and therefore needs
    a monomial ideal; otherwise it is skipped and the verdict says so.
    Whenever both sides run, the degreewise inequality left <= right is
    asserted; a violation cannot come from the mathematics and raises
    InconsistencyError.
    """
    if isinstance(ideal, MonomialIdeal):
        monomial = ideal
        poly = None if ideal.is_zero() else PolynomialIdeal.from_monomial_ideal(ideal)
    else:
        poly = ideal
        monomial = ideal.as_monomial_ideal() if ideal.is_monomial() else None
    n = ideal.n
    if monomial is not None and monomial.is_unit():
        raise UndefinedInputError("main theorem check on the zero ring")
    if poly is None or (monomial is not None and monomial.is_zero()):
        gin_ideal = MonomialIdeal.zero(n)  # gin of 0 is 0
    else:
        gin_ideal = gin(poly, seed)
    if window is None:
        window = default_cohomology_window(gin_ideal)
        if monomial is not None:
            window = _merge_windows(window, default_cohomology_window(monomial))

    def right(w):
        return local_cohomology_strongly_stable(gin_ideal, w)

    if monomial is None:
        table = right(window)
        return ComparisonReport(
            "cech R/I", "filtration R/gin(I)", window, None,
            "left-skipped", (), None, table, seed,
            ["input is not a monomial ideal; only the gin side was computed"])

    def left(w):
        return cech_local_cohomology(monomial, w)

    equal, left_wide, right_wide, wide = conclusive_table_comparison(
        left, right, window, n)
    if not left_wide.leq_on(right_wide, wide):
        raise InconsistencyError(
            "cohomology of R/I exceeds that of R/gin(I) somewhere on %r" % (wide,))
    return ComparisonReport(
        "cech R/I", "filtration R/gin(I)", window, wide,
        "equal" if equal else "unequal",
        left_wide.diff(right_wide, wide), left_wide, right_wide, seed)


def theorem41_check(cx, seed, window=None):
    """Compare face-ring local cohomology before and after shifting.

    Computes both tables with the Cech route and cross-checks the verdict
    against the sequential Cohen-Macaulay decider; the two must agree, and
    a mismatch raises InconsistencyError.
    """
    ideal = stanley_reisner_ideal(cx)
    shifted = shifted_complex(cx, seed)
    shifted_ideal = stanley_reisner_ideal(shifted)
    n = cx.n
    if window is None:
        window = _merge_windows(default_cohomology_window(ideal),
                                default_cohomology_window(shifted_ideal))
    equal, left_wide, right_wide, wide = conclusive_table_comparison(
        lambda w: cech_local_cohomology(ideal, w),
        lambda w: cech_local_cohomology(shifted_ideal, w),
        window, n)
    verdict = is_sequentially_cm(cx, seed)
    if equal != verdict.value:
        raise InconsistencyError(
            "cohomology comparison says %s but the shifting decider says %s"
            % ("equal" if equal else "unequal", verdict.value))
    report = ComparisonReport(
        "cech face ring", "cech shifted face ring", window, wide,
        "equal" if equal else "unequal",
        left_wide.diff(right_wide, wide), left_wide, right_wide, seed,
        ["verdict concords with the sequential Cohen-Macaulay decider"])
    return report, verdict
