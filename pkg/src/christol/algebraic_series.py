"""Bivariate polynomials over F_p and the power-series branches they cut out.

The polynomial text format is a tiny expression language:

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := uint | 'x' | 'y' | '(' expr ')'

Whitespace between tokens is ignored.  There is no unary minus and no
implicit multiplication: write "2*x", not "2x".  Degrees are capped
(default 64 in each variable) so a typo like x^999999 fails fast instead
of allocating.

expand_branch() grows the unique power series f with Q(x, f) = 0 that
extends a given seed of low-order coefficients.  The workhorse is
coefficient-by-coefficient candidate testing; when dQ/dy does not vanish
at the starting point, a Newton iteration with precision doubling takes
over and reaches large precision in a logarithmic number of series
multiplications.
"""

import math
from dataclasses import dataclass

from .errors import (
    AmbiguousBranch,
    DegreeOverflow,
    ModulusMismatch,
    NoBranch,
    NonUnitDenominator,
    PolynomialSyntaxError,
)
from .finite_field import ensure_prime
from .power_series import TruncatedSeries

DEFAULT_DEGREE_CAP = 64


class BivariatePolynomial:
    """A polynomial Q(x, y) over F_p that genuinely involves y.

    coeffs[i][j] is the coefficient of x^i y^j; the grid is rectangular
    with trailing zero rows and columns trimmed.  Q must have y-degree at
    least 1: these polynomials exist to define series in y, and a
    univariate constraint defines nothing.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        ensure_prime(p)
        grid = [[int(c) % p for c in row] for row in coeffs]
        width = max((len(row) for row in grid), default=0)
        for row in grid:
            row.extend([0] * (width - len(row)))
        while grid and not any(grid[-1]):
            grid.pop()
        while grid and not any(row[-1] for row in grid):
            for row in grid:
                row.pop()
        if not grid or len(grid[0]) < 2:
            raise ValueError("polynomial must involve y")
        self.p = p
        self.coeffs = tuple(tuple(row) for row in grid)

    @classmethod
    def from_dict(cls, p: int, terms: dict) -> "BivariatePolynomial":
        """Build from {(i, j): coefficient of x^i y^j}."""
        if not terms:
            raise ValueError("polynomial must involve y")
        dx = max(i for i, _ in terms)
        dy = max(j for _, j in terms)
        grid = [[0] * (dy + 1) for _ in range(dx + 1)]
        for (i, j), c in terms.items():
            grid[i][j] = c
        return cls(p, grid)

    @property
    def dx(self) -> int:
        return len(self.coeffs) - 1

    @property
    def dy(self) -> int:
        return len(self.coeffs[0]) - 1

    def coefficient(self, i: int, j: int) -> int:
        if 0 <= i <= self.dx and 0 <= j <= self.dy:
            return self.coeffs[i][j]
        return 0

    def y_row(self, j: int) -> tuple:
        """Coefficients in x of the y^j term."""
        return tuple(self.coeffs[i][j] for i in range(self.dx + 1))

    def _row_series(self, j: int, n: int) -> TruncatedSeries:
        row = self.y_row(j)[:n]
        return TruncatedSeries(self.p, row + (0,) * (n - len(row)))

    def evaluate(self, f: TruncatedSeries) -> TruncatedSeries:
        """Q(x, f), truncated at f's precision (Horner in y)."""
        if f.p != self.p:
            raise ModulusMismatch(f"mixed moduli {self.p} and {f.p}")
        n = f.precision
        acc = TruncatedSeries.zero(self.p, n)
        for j in range(self.dy, -1, -1):
            acc = acc * f + self._row_series(j, n)
        return acc

    def evaluate_dy(self, f: TruncatedSeries) -> TruncatedSeries:
        """(dQ/dy)(x, f), truncated at f's precision."""
        if f.p != self.p:
            raise ModulusMismatch(f"mixed moduli {self.p} and {f.p}")
        n = f.precision
        acc = TruncatedSeries.zero(self.p, n)
        for j in range(self.dy, 0, -1):
            acc = acc * f + self._row_series(j, n).scale(j)
        return acc

    def dy_at_origin(self, a0: int) -> int:
        """(dQ/dy)(0, a0) as a residue; nonzero means Newton applies."""
        total = 0
        for j in range(1, self.dy + 1):
            total += j * self.coeffs[0][j] * pow(a0, j - 1, self.p)
        return total % self.p

    def to_text(self) -> str:
        """Render in the input grammar; parse_bivariate() round-trips it.

        Terms appear in lexicographic (j, i) order with residues spelled
        out, e.g. "x + y + 2*x*y^2".
        """
        parts = []
        for j in range(self.dy + 1):
            for i in range(self.dx + 1):
                c = self.coeffs[i][j]
                if not c:
                    continue
                factors = []
                if c != 1 or (i == 0 and j == 0):
                    factors.append(str(c))
                if i:
                    factors.append("x" if i == 1 else f"x^{i}")
                if j:
                    factors.append("y" if j == 1 else f"y^{j}")
                parts.append("*".join(factors))
        return " + ".join(parts)

    def __eq__(self, other):
        return (
            isinstance(other, BivariatePolynomial)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"BivariatePolynomial(p={self.p}, {self.to_text()!r})"


# -- parsing ----------------------------------------------------------

_TOKEN_CHARS = set("+-*^()xy")


class _Parser:
    # Operates on {(i, j): residue} dicts and only wraps the final result
    # in a BivariatePolynomial, since intermediates (like "(1+x)") need
    # not involve y.

    def __init__(self, text: str, p: int, max_dx: int, max_dy: int):
        self.text = text
        self.p = p
        self.max_dx = max_dx
        self.max_dy = max_dy
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def _fail(self, message):
        raise PolynomialSyntaxError(message, self.pos)

    def _uint(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isascii() and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self._fail("expected an unsigned integer")
        return int(self.text[start : self.pos])

    def _check_degrees(self, poly):
        for i, j in poly:
            if i > self.max_dx or j > self.max_dy:
                raise DegreeOverflow(
                    f"term x^{i}*y^{j} exceeds degree caps ({self.max_dx}, {self.max_dy})"
                )

    def _mul(self, a, b):
        out = {}
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                key = (i1 + i2, j1 + j2)
                v = (out.get(key, 0) + c1 * c2) % self.p
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        self._check_degrees(out)
        return out

    def _addsub(self, a, b, sign):
        out = dict(a)
        for key, c in b.items():
            v = (out.get(key, 0) + sign * c) % self.p
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        return out

    def parse(self):
        poly = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            self._fail(f"unexpected character {self.text[self.pos]!r}")
        return poly

    def _expr(self):
        poly = self._term()
        while True:
            ch = self._peek()
            if ch not in ("+", "-"):
                return poly
            self.pos += 1
            rhs = self._term()
            poly = self._addsub(poly, rhs, 1 if ch == "+" else -1)

    def _term(self):
        poly = self._factor()
        while self._peek() == "*":
            self.pos += 1
            poly = self._mul(poly, self._factor())
        return poly

    def _factor(self):
        poly = self._atom()
        if self._peek() == "^":
            self.pos += 1
            exponent = self._uint()
            result = {(0, 0): 1}
            square = poly
            e = exponent
            while e:
                if e & 1:
                    result = self._mul(result, square)
                e >>= 1
                if e:
                    square = self._mul(square, square)
            poly = result
        return poly

    def _atom(self):
        ch = self._peek()
        if ch is None:
            self._fail("unexpected end of input")
        if ch == "(":
            self.pos += 1
            poly = self._expr()
            if self._peek() != ")":
                self._fail("expected ')'")
            self.pos += 1
            return poly
        if ch == "x":
            self.pos += 1
            return {(1, 0): 1}
        if ch == "y":
            self.pos += 1
            return {(0, 1): 1}
        if ch.isascii() and ch.isdigit():
            value = self._uint() % self.p
            return {(0, 0): value} if value else {}
        self._fail(f"unexpected character {ch!r}")


def parse_bivariate(
    text: str,
    p: int,
    max_dx: int = DEFAULT_DEGREE_CAP,
    max_dy: int = DEFAULT_DEGREE_CAP,
) -> BivariatePolynomial:
    """Parse polynomial text over F_p into a BivariatePolynomial.

    Raises PolynomialSyntaxError (with offset) on malformed text,
    DegreeOverflow past the caps, and ValueError if the result does not
    involve y.
    """
    ensure_prime(p)
    terms = _Parser(text, p, max_dx, max_dy).parse()
    return BivariatePolynomial.from_dict(p, terms)


@dataclass(frozen=True)
class BranchSpec:
    """A defining polynomial plus the seed coefficients that pick one of
    its power-series roots.  The seed is exactly as many low-order
    coefficients as it takes to make the branch unique."""

    q: BivariatePolynomial
    seed: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "seed", tuple(int(c) % self.q.p for c in self.seed))

    @property
    def p(self) -> int:
        return self.q.p


# -- expansion --------------------------------------------------------


def _roots_at_origin(q: BivariatePolynomial):
    """Residues c with Q(0, c) = 0, by direct evaluation."""
    p = q.p
    col = [q.coeffs[0][j] for j in range(q.dy + 1)]
    roots = []
    for c in range(p):
        acc = 0
        for coeff in reversed(col):
            acc = (acc * c + coeff) % p
        if acc == 0:
            roots.append(c)
    return roots


def _start_coefficient(q: BivariatePolynomial, seed) -> int:
    if seed:
        a0 = seed[0]
        acc = 0
        for j in range(q.dy, -1, -1):
            acc = (acc * a0 + q.coeffs[0][j]) % q.p
        if acc:
            raise NoBranch(0)
        return a0
    roots = _roots_at_origin(q)
    if not roots:
        raise NoBranch(0)
    if len(roots) > 1:
        raise AmbiguousBranch(0)
    return roots[0]


def _hasse_rows(q: BivariatePolynomial, a0: int, n: int):
    """H[m] = (m-th Hasse y-derivative of Q)(x, a0) as length-n lists.

    H[m] has y-row coefficients C(j, m) * a0^(j-m) summed over j >= m.
    """
    p = q.p
    rows = []
    for m in range(q.dy + 1):
        acc = [0] * n
        for j in range(m, q.dy + 1):
            w = (math.comb(j, m) % p) * pow(a0, j - m, p) % p
            if not w:
                continue
            for i in range(min(q.dx + 1, n)):
                if q.coeffs[i][j]:
                    acc[i] = (acc[i] + w * q.coeffs[i][j]) % p
        rows.append(acc)
    return rows


def _hasse_update(rows, c: int, k: int, p: int, n: int):
    """Replace H[m] <- Hasse rows of Q at (partial + c*x^k).

    Uses H'_m = sum_l C(m+l, m) c^l x^(k*l) H_(m+l); the composition rule
    for Hasse derivatives, exact in characteristic p.
    """
    dy = len(rows) - 1
    powc = [1]
    for _ in range(dy):
        powc.append(powc[-1] * c % p)
    fresh = []
    for m in range(dy + 1):
        acc = rows[m][:]
        for l in range(1, dy - m + 1):
            off = k * l
            if off >= n:
                break
            w = (math.comb(m + l, m) % p) * powc[l] % p
            if not w:
                continue
            src = rows[m + l]
            for idx in range(n - off):
                if src[idx]:
                    acc[idx + off] = (acc[idx + off] + w * src[idx]) % p
        fresh.append(acc)
    rows[:] = fresh


def _expand_baseline(q: BivariatePolynomial, seed, n: int) -> TruncatedSeries:
    """Candidate-testing expansion: at step k, a residue c survives iff
    Q(x, partial + c*x^k) = 0 mod x^(k+1).  The Hasse rows make each test
    a lookup: the condition is H0[k] + c*H1[0] = 0."""
    p = q.p
    a0 = _start_coefficient(q, seed)
    coeffs = [a0]
    if n == 1:
        return TruncatedSeries(p, coeffs)
    rows = _hasse_rows(q, a0, n)
    qy0 = rows[1][0]
    inv_qy0 = pow(qy0, p - 2, p) if qy0 else 0
    for k in range(1, n):
        v = rows[0][k]
        if k < len(seed):
            c = seed[k]
            if (v + c * qy0) % p:
                raise NoBranch(k)
        elif qy0:
            c = (-v * inv_qy0) % p
        elif v == 0:
            raise AmbiguousBranch(k)  # every residue extends mod x^(k+1)
        else:
            raise NoBranch(k)
        coeffs.append(c)
        if c:
            _hasse_update(rows, c, k, p, n)
    return TruncatedSeries(p, coeffs)


def _series_inverse(f: TruncatedSeries, n: int) -> TruncatedSeries:
    """Multiplicative inverse mod x^n of a unit series, by Newton doubling."""
    p = f.p
    g = TruncatedSeries(p, (pow(f.coeffs[0], p - 2, p),))
    t = 1
    while t < n:
        t = min(2 * t, n)
        fg = f.truncate(t) * g.pad_to(t)
        # g <- g * (2 - f*g)
        corr = [(-v) % p for v in fg.coeffs]
        corr[0] = (corr[0] + 2) % p
        g = g.pad_to(t) * TruncatedSeries(p, corr)
    return g


def _expand_newton(q: BivariatePolynomial, seed, n: int) -> TruncatedSeries:
    """Newton iteration f <- f - Q(x,f)/Qy(x,f) with precision doubling.

    Requires Qy(0, a0) != 0, which keeps the divisor a unit throughout.
    The seed beyond a0 is not consumed, only checked: the branch through
    a0 is already unique, so a disagreeing seed means no branch at all.
    """
    p = q.p
    a0 = _start_coefficient(q, seed)
    f = TruncatedSeries(p, (a0,))
    t = 1
    while t < n:
        t = min(2 * t, n)
        fpad = f.pad_to(t)
        value = q.evaluate(fpad)
        slope = q.evaluate_dy(fpad)
        f = fpad - value * _series_inverse(slope, t)
    f = f.truncate(n)
    for k in range(1, min(len(seed), n)):
        if f.coeffs[k] != seed[k]:
            raise NoBranch(k)
    return f


def expand_branch(spec: BranchSpec, n: int, method: str = "auto") -> TruncatedSeries:
    """First n coefficients of the series root of spec.q extending spec.seed.

    method selects the engine: "auto" uses Newton when dQ/dy(0, a0) is a
    unit and candidate testing otherwise; "newton" and "baseline" force
    one engine (forcing Newton where it does not apply is a ValueError).
    Both engines produce identical output where both apply.
    """
    if method not in ("auto", "newton", "baseline"):
        raise ValueError(f"unknown method {method!r}")
    if n < 0:
        raise ValueError(f"term count must be nonnegative, got {n}")
    if n == 0:
        return TruncatedSeries(spec.p)
    if method == "baseline":
        return _expand_baseline(spec.q, spec.seed, n)
    a0 = _start_coefficient(spec.q, spec.seed)
    newton_ok = spec.q.dy_at_origin(a0) != 0
    if method == "newton":
        if not newton_ok:
            raise ValueError("Newton requires dQ/dy(0, a0) to be a unit")
        return _expand_newton(spec.q, spec.seed, n)
    if newton_ok:
        return _expand_newton(spec.q, spec.seed, n)
    return _expand_baseline(spec.q, spec.seed, n)


def expand_rational(p: int, numer, denom, n: int) -> TruncatedSeries:
    """First n coefficients of numer/denom over F_p.

    Coefficient lists are low-order first.  The denominator needs a
    nonzero constant term; the expansion is the standard long-division
    recurrence, exact at every index."""
    ensure_prime(p)
    if n < 0:
        raise ValueError(f"term count must be nonnegative, got {n}")
    a = [int(c) % p for c in numer]
    b = [int(c) % p for c in denom]
    if not b or b[0] == 0:
        raise NonUnitDenominator("denominator must have a nonzero constant term")
    inv_b0 = pow(b[0], p - 2, p)
    out = []
    for k in range(n):
        acc = a[k] if k < len(a) else 0
        for t in range(1, min(k, len(b) - 1) + 1):
            acc -= b[t] * out[k - t]
        out.append(acc * inv_b0 % p)
    return TruncatedSeries(p, out)


def verify_annihilation(q: BivariatePolynomial, f: TruncatedSeries) -> bool:
    """Does Q(x, f) vanish to f's precision?  Vacuously true at precision 0."""
    if q.p != f.p:
        raise ModulusMismatch(f"mixed moduli {q.p} and {f.p}")
    return q.evaluate(f).is_zero()
