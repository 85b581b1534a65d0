"""Monomials, polynomials, and linear coordinate changes over Q.

The ambient ring is always Q[x1, ..., xn] with the degree reverse
lexicographic order induced by x1 > x2 > ... > xn; no other order and no
other coefficient field exist in this artifact.  Exponent vectors are dense
tuples, which is the right trade-off for the supported range n <= 16.

Canonical text form: terms in decreasing order, coefficients as integers or
``p/q``, e.g. ``3/2*x1^2*x3 - x2``.  The parser accepts exactly the same
grammar (plus surrounding whitespace) and reports line/column on rejection.

>>> f = parse_polynomial("3/2*x1^2*x3 - x2", 3)
>>> str(f)
'3/2*x1^2*x3 - x2'
>>> str(f * f)
'9/4*x1^4*x3^2 - 3*x1^2*x2*x3 + x2^2'
"""

from fractions import Fraction
import random

from . import linalg
from .errors import AmbientMismatchError, ParseError, SingularMatrixError

MAX_VARIABLES = 16

# Entry range for random coordinate changes; singular draws are rejected.
RANDOM_ENTRY_BOUND = 10**4


def _check_ambient(n):
    if not 1 <= n <= MAX_VARIABLES:
        raise AmbientMismatchError(
            "ambient variable count %r outside 1..%d" % (n, MAX_VARIABLES)
        )


class Monomial:
    """An exponent vector; the ambient size is len(exponents)."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents):
        exponents = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exponents):
            raise ValueError("negative exponent in %r" % (exponents,))
        object.__setattr__(self, "exponents", exponents)
        object.__setattr__(self, "degree", sum(exponents))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def one(cls, n):
        return cls((0,) * n)

    @classmethod
    def variable(cls, i, n):
        """x_i in Q[x1..xn]; i is 1-based."""
        if not 1 <= i <= n:
            raise ValueError("variable index %d outside 1..%d" % (i, n))
        return cls(tuple(int(j == i - 1) for j in range(n)))

    @property
    def n(self):
        return len(self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __mul__(self, other):
        _same_ambient(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other):
        _same_ambient(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other):
        """Exact quotient; raises if other does not divide self."""
        if not other.divides(self):
            raise ValueError("%s does not divide %s" % (other, self))
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other):
        _same_ambient(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other):
        _same_ambient(self, other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def is_coprime(self, other):
        _same_ambient(self, other)
        return all(min(a, b) == 0 for a, b in zip(self.exponents, other.exponents))

    def exponent(self, i):
        """Exponent of x_i, 1-based."""
        return self.exponents[i - 1]

    def support(self):
        """1-based indices of variables dividing the monomial."""
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    @property
    def max_var(self):
        """Largest 1-based index with positive exponent; 0 for the unit."""
        for i in range(len(self.exponents) - 1, -1, -1):
            if self.exponents[i]:
                return i + 1
        return 0

    def is_squarefree(self):
        return all(e <= 1 for e in self.exponents)

    def extended(self, n):
        """The same monomial viewed in Q[x1..xn], n >= current ambient."""
        if n < len(self.exponents):
            raise AmbientMismatchError("cannot shrink ambient from %d to %d"
                                       % (len(self.exponents), n))
        return Monomial(self.exponents + (0,) * (n - len(self.exponents)))

    def __str__(self):
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append("x%d" % (i + 1))
            elif e > 1:
                parts.append("x%d^%d" % (i + 1, e))
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return "Monomial(%r)" % (self.exponents,)


def _same_ambient(a, b):
    if len(a.exponents) != len(b.exponents):
        raise AmbientMismatchError(
            "ambient mismatch: %d vs %d variables" % (len(a.exponents), len(b.exponents))
        )


def degrevlex_key(monomial):
    """Sort key realizing degrevlex with x1 > x2 > ... > xn.

    Compare total degree first; ties break so that u > v exactly when the
    last nonzero entry of exp(u) - exp(v) is negative.

    >>> a, b = Monomial((0, 2, 0)), Monomial((1, 0, 1))
    >>> degrevlex_key(a) > degrevlex_key(b)   # x2^2 > x1*x3
    True
    """
    return (monomial.degree, tuple(-e for e in reversed(monomial.exponents)))


def compare(u, v):
    """-1, 0, or 1 as u <, =, > v in degrevlex."""
    _same_ambient(u, v)
    ku, kv = degrevlex_key(u), degrevlex_key(v)
    return (ku > kv) - (ku < kv)


class TermOrder:
    """The single supported order; kept as a named value so signatures can
    state their order explicitly."""

    __slots__ = ("name",)

    def __init__(self, name):
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("TermOrder is immutable")

    def key(self, monomial):
        return degrevlex_key(monomial)

    def compare(self, u, v):
        return compare(u, v)

    def __repr__(self):
        return "TermOrder(%r)" % (self.name,)


DEGREVLEX = TermOrder("degrevlex")


class Polynomial:
    """Map monomial -> nonzero Fraction; the zero polynomial has no terms."""

    __slots__ = ("n", "_coeffs")

    def __init__(self, n, coeffs=()):
        _check_ambient(n)
        clean = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for mono, c in items:
            if mono.n != n:
                raise AmbientMismatchError(
                    "monomial in %d variables inside a %d-variable polynomial"
                    % (mono.n, n)
                )
            c = Fraction(c)
            if c:
                c0 = clean.get(mono)
                c = c if c0 is None else c0 + c
                if c:
                    clean[mono] = c
                elif mono in clean:
                    del clean[mono]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, c, n):
        return cls(n, [(Monomial.one(n), Fraction(c))])

    @classmethod
    def variable(cls, i, n):
        return cls(n, [(Monomial.variable(i, n), Fraction(1))])

    @classmethod
    def from_monomial(cls, mono, coeff=1):
        return cls(mono.n, [(mono, Fraction(coeff))])

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def coefficient(self, mono):
        return self._coeffs.get(mono, Fraction(0))

    def terms(self):
        """(monomial, coefficient) pairs in decreasing degrevlex order."""
        return sorted(self._coeffs.items(), key=lambda t: degrevlex_key(t[0]),
                      reverse=True)

    def monomials(self):
        return [m for m, _ in self.terms()]

    def __len__(self):
        return len(self._coeffs)

    def leading_monomial(self):
        if not self._coeffs:
            return None
        return max(self._coeffs, key=degrevlex_key)

    def leading_coefficient(self):
        lm = self.leading_monomial()
        return self._coeffs[lm] if lm is not None else Fraction(0)

    def leading_term(self):
        lm = self.leading_monomial()
        if lm is None:
            return None
        return (lm, self._coeffs[lm])

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self._coeffs:
            return -1
        return max(m.degree for m in self._coeffs)

    def is_homogeneous(self):
        degs = {m.degree for m in self._coeffs}
        return len(degs) <= 1

    def is_monomial(self):
        return len(self._coeffs) == 1

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.n == other.n
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.n, frozenset(self._coeffs.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Polynomial(self.n, out)

    def __neg__(self):
        return Polynomial(self.n, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                m = m1 * m2
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial(self.n, {m: c * v for m, v in self._coeffs.items()})

    def monic(self):
        lc = self.leading_coefficient()
        if not lc:
            return self
        return self.scale(Fraction(1) / lc)

    def times_monomial(self, mono, coeff=1):
        coeff = Fraction(coeff)
        if not coeff:
            return Polynomial.zero(self.n)
        return Polynomial(self.n, {m * mono: c * coeff for m, c in self._coeffs.items()})

    def evaluate(self, point):
        """Value at a rational point (sequence of n numbers)."""
        if len(point) != self.n:
            raise AmbientMismatchError("point has %d coordinates, need %d"
                                       % (len(point), self.n))
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for m, c in self._coeffs.items():
            v = c
            for p, e in zip(point, m.exponents):
                if e:
                    v *= p**e
            total += v
        return total

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError("expected Polynomial, got %r" % (other,))
        if self.n != other.n:
            raise AmbientMismatchError(
                "ambient mismatch: %d vs %d variables" % (self.n, other.n)
            )

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, (mono, c) in enumerate(self.terms()):
            neg = c < 0
            mag = -c if neg else c
            if mono.degree == 0:
                body = _fraction_str(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = "%s*%s" % (_fraction_str(mag), mono)
            if i == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Polynomial(%d, %s)" % (self.n, str(self))


def _fraction_str(c):
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


# ---------------------------------------------------------------------------
# Parsing.  Grammar (whitespace-insensitive between tokens):
#   poly   := ['-'] term (('+'|'-') term)*
#   term   := coef ('*' factor)* | factor ('*' factor)*
#   coef   := int ['/' int]
#   factor := 'x' int ['^' int]

class _Tokenizer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _line_col(self, pos):
        line = self.text.count("\n", 0, pos) + 1
        nl = self.text.rfind("\n", 0, pos)
        return line, pos - nl if nl >= 0 else pos + 1

    def error(self, message, pos=None):
        line, col = self._line_col(self.pos if pos is None else pos)
        raise ParseError(message, line, col)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])


def parse_polynomial(text, n):
    """Parse the canonical text form in Q[x1..xn].

    >>> parse_polynomial("x1*x2 + x2^2", 2).degree()
    2
    >>> parse_polynomial("0", 2).is_zero()
    True
    """
    _check_ambient(n)
    tok = _Tokenizer(text)
    total = Polynomial.zero(n)
    first = True
    while True:
        tok.skip_ws()
        if tok.pos >= len(tok.text):
            if first:
                tok.error("empty polynomial")
            break
        if first:
            sign = -1 if tok.take("-") else 1
            first = False
        else:
            if tok.take("+"):
                sign = 1
            elif tok.take("-"):
                sign = -1
            else:
                tok.error("expected '+' or '-' between terms")
        total = total + _parse_term(tok, n, sign)
    return total


def _parse_term(tok, n, sign):
    coeff = Fraction(sign)
    exps = [0] * n
    saw_factor = False
    ch = tok.peek()
    if ch.isdigit():
        num = tok.integer()
        if tok.take("/"):
            den_pos = tok.pos
            den = tok.integer()
            if den == 0:
                tok.error("zero denominator", den_pos)
            coeff *= Fraction(num, den)
        else:
            coeff *= num
        saw_factor = True
        if not tok.take("*"):
            return Polynomial.constant(coeff, n)
    while True:
        ch = tok.peek()
        if ch != "x":
            if saw_factor and not ch:
                break
            tok.error("expected a variable like x2" if saw_factor or ch else
                      "expected a coefficient or variable")
        at = tok.pos
        tok.pos += 1
        idx = tok.integer()
        if not 1 <= idx <= n:
            tok.error("variable x%d outside ambient Q[x1..x%d]" % (idx, n), at)
        e = 1
        if tok.take("^"):
            e = tok.integer()
        exps[idx - 1] += e
        saw_factor = True
        if not tok.take("*"):
            break
    return Polynomial(n, [(Monomial(exps), coeff)])


# ---------------------------------------------------------------------------
# Coordinate changes.

class RationalMatrix:
    """Square matrix over Q acting on variables as x_i -> sum_j a_ij x_j."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix is not square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def random_invertible(cls, n, seed):
        """Dense integer matrix, entries uniform in [-10^4, 10^4], redrawn
        (deterministically from the same stream) until nonsingular."""
        rng = random.Random(seed)
        while True:
            rows = [
                [rng.randint(-RANDOM_ENTRY_BOUND, RANDOM_ENTRY_BOUND) for _ in range(n)]
                for _ in range(n)
            ]
            mat = cls(rows)
            if mat.det() != 0:
                return mat

    def det(self):
        return linalg.det([list(r) for r in self.rows])

    def is_invertible(self):
        return self.det() != 0

    def inverse(self):
        if not self.is_invertible():
            raise SingularMatrixError("matrix is singular")
        return RationalMatrix(linalg.invert([list(r) for r in self.rows]))

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            return RationalMatrix(linalg.matmul(
                [list(r) for r in self.rows], [list(r) for r in other.rows]))
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __repr__(self):
        return "RationalMatrix(%r)" % ([list(map(str, r)) for r in self.rows],)


def apply_coordinate_change(f, matrix):
    """Substitute x_i -> sum_j a_ij x_j in f.

    The matrix must be invertible, so the map is a ring automorphism and in
    particular sends nonzero homogeneous forms to nonzero forms of the same
    degree.

    >>> f = parse_polynomial("x1*x2", 2)
    >>> g = RationalMatrix([[1, 1], [0, 1]])
    >>> str(apply_coordinate_change(f, g))
    'x1*x2 + x2^2'
    """
    if matrix.n != f.n:
        raise AmbientMismatchError(
            "matrix size %d does not match ambient %d" % (matrix.n, f.n)
        )
    if not matrix.is_invertible():
        raise SingularMatrixError("coordinate change must be invertible")
    n = f.n
    images = [
        Polynomial(n, [(Monomial.variable(j + 1, n), matrix.rows[i][j])
                       for j in range(n) if matrix.rows[i][j]])
        for i in range(n)
    ]
    # Power cache per variable; degrees stay small (corpus degree <= ~6).
    powers = [{0: Polynomial.constant(1, n)} for _ in range(n)]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    total = Polynomial.zero(n)
    for mono, c in f.terms():
        piece = Polynomial.constant(c, n)
        for i, e in enumerate(mono.exponents):
            if e:
                piece = piece * power(i, e)
        total = total + piece
    return total
