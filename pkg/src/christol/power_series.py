"""Truncated formal power series over F_p.

A TruncatedSeries holds the first N coefficients of a series and nothing
else.  Every operation propagates precision pessimistically: the result
claims only the coefficients that are fully determined by the inputs.
Equality compares modulus and the full coefficient vector, so two
truncations of the same series at different precisions are *not* equal;
use truncate() to bring operands to a common precision first.

Instances are immutable and safe to share.
"""

import numpy as np

from .errors import ModulusMismatch, NotAPthPower
from .finite_field import FpElement, ensure_prime


def cauchy_product(a, b, p: int, n: int) -> tuple:
    """First n coefficients of the product of coefficient vectors a and b.

    Residues are < 2**16 and lengths stay far below 2**20, so every
    partial sum of the int64 convolution stays well under 2**63.
    """
    if n <= 0:
        return ()
    if not a or not b:
        return (0,) * n
    fa = np.asarray(a[:n], dtype=np.int64)
    fb = np.asarray(b[:n], dtype=np.int64)
    conv = np.convolve(fa, fb)[:n] % p
    return tuple(int(v) for v in conv)


class TruncatedSeries:
    """The first len(coeffs) coefficients of a power series over F_p."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        ensure_prime(p)
        self.p = p
        self.coeffs = tuple(int(c) % p for c in coeffs)

    @classmethod
    def zero(cls, p: int, precision: int) -> "TruncatedSeries":
        return cls(p, (0,) * precision)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def coefficient(self, j: int) -> FpElement:
        return FpElement(self.coeffs[j], self.p)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _match(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.p != self.p:
            raise ModulusMismatch(f"mixed moduli {self.p} and {other.p}")

    def _scalar(self, c) -> int:
        if isinstance(c, FpElement):
            if c.p != self.p:
                raise ModulusMismatch(f"mixed moduli {self.p} and {c.p}")
            return c.value
        return int(c) % self.p

    # -- arithmetic ---------------------------------------------------

    def add(self, other: "TruncatedSeries", scalar=None) -> "TruncatedSeries":
        """scalar*self + other, at the smaller of the two precisions."""
        self._match(other)
        s = 1 if scalar is None else self._scalar(scalar)
        n = min(self.precision, other.precision)
        return TruncatedSeries(
            self.p,
            ((s * self.coeffs[j] + other.coeffs[j]) % self.p for j in range(n)),
        )

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        self._match(other)
        n = min(self.precision, other.precision)
        return TruncatedSeries(
            self.p, ((self.coeffs[j] - other.coeffs[j]) % self.p for j in range(n))
        )

    def __neg__(self):
        return TruncatedSeries(self.p, ((-c) % self.p for c in self.coeffs))

    def scale(self, c) -> "TruncatedSeries":
        s = self._scalar(c)
        return TruncatedSeries(self.p, ((s * a) % self.p for a in self.coeffs))

    def __mul__(self, other):
        """Cauchy product, truncated at the smaller input precision."""
        self._match(other)
        n = min(self.precision, other.precision)
        return TruncatedSeries(self.p, cauchy_product(self.coeffs, other.coeffs, self.p, n))

    def shift(self, k: int) -> "TruncatedSeries":
        """x**k * self.  Gains precision: the low k coefficients are exact."""
        if k < 0:
            raise ValueError(f"shift must be nonnegative, got {k}")
        return TruncatedSeries(self.p, (0,) * k + self.coeffs)

    def derivative(self, times: int = 1) -> "TruncatedSeries":
        """times-fold formal derivative; each application costs one
        coefficient of precision."""
        if times < 0:
            raise ValueError(f"derivative order must be nonnegative, got {times}")
        coeffs = self.coeffs
        for _ in range(times):
            if not coeffs:
                break
            coeffs = tuple((j * c) % self.p for j, c in enumerate(coeffs))[1:]
        return TruncatedSeries(self.p, coeffs)

    def pth_root(self) -> "TruncatedSeries":
        """Termwise p-th root of a series supported on multiples of p.

        Over F_p the root of each coefficient is the coefficient itself,
        so this just decimates: result[m] = self[p*m].  Raises
        NotAPthPower if some known nonzero coefficient sits at an index
        not divisible by p.
        """
        for idx, c in enumerate(self.coeffs):
            if c and idx % self.p:
                raise NotAPthPower(
                    f"nonzero coefficient at index {idx}, not a multiple of {self.p}"
                )
        return TruncatedSeries(self.p, self.coeffs[:: self.p])

    def substitute_x_pow_p(self) -> "TruncatedSeries":
        """The series self(x**p).

        Every index below p*N is determined: multiples of p carry the
        original coefficients, everything else is known to be zero.
        """
        if not self.coeffs:
            return TruncatedSeries(self.p)
        out = [0] * (self.p * self.precision)
        for i, c in enumerate(self.coeffs):
            out[self.p * i] = c
        return TruncatedSeries(self.p, out)

    # -- reshaping ----------------------------------------------------

    def truncate(self, n: int) -> "TruncatedSeries":
        if n < 0 or n > self.precision:
            raise ValueError(f"cannot truncate precision {self.precision} to {n}")
        return TruncatedSeries(self.p, self.coeffs[:n])

    def pad_to(self, n: int) -> "TruncatedSeries":
        """Extend with explicit zeros.  Only meaningful when the caller
        knows the series is an exact polynomial, since this raises the
        claimed precision."""
        if n <= self.precision:
            return self
        return TruncatedSeries(self.p, self.coeffs + (0,) * (n - self.precision))

    # -- plumbing -----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        body = ",".join(str(c) for c in self.coeffs[:16])
        if self.precision > 16:
            body += ",..."
        return f"TruncatedSeries(p={self.p}, N={self.precision}, [{body}])"


def parse_series(text: str, p: int) -> TruncatedSeries:
    """Parse a comma-separated coefficient literal like "0,1,1,0,1,0,0,1".

    Entries must be base-10 naturals; they are reduced mod p.  The empty
    literal is rejected: zero-precision series only ever arise as
    degenerate results of precision loss, never as inputs.
    """
    ensure_prime(p)
    parts = [s.strip() for s in text.split(",")]
    if parts == [""]:
        raise ValueError("empty series literal")
    values = []
    for part in parts:
        if not part or not all(ch in "0123456789" for ch in part):
            raise ValueError(f"bad series entry {part!r}")
        values.append(int(part) % p)
    return TruncatedSeries(p, values)
