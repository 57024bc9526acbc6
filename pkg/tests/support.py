"""Shared helpers for the test suite.

The oracles here deliberately avoid the library's own code paths: digit
parity comes from Python's bin(), base conversion from int divmod, and
binomials from math.comb, so a library bug cannot vouch for itself.
"""

import math
import random

from christol import TruncatedSeries


def parity(n: int) -> int:
    """Thue-Morse: parity of the binary digit sum of n."""
    return bin(n).count("1") & 1


def base_digits(n: int, p: int) -> list:
    """Base-p digits of n, least significant first, via int arithmetic."""
    out = []
    while n:
        n, r = divmod(n, p)
        out.append(r)
    return out


def lucas_central_binomial_mod3(n: int) -> int:
    """C(2n, n) mod 3: zero when some base-3 digit of n is 2 (the addition
    n + n carries there), else 2 to the number of 1 digits."""
    digits = base_digits(n, 3)
    if 2 in digits:
        return 0
    return pow(2, digits.count(1), 3)


def central_binomial_direct(n: int) -> int:
    """C(2n, n) mod 3 the slow, undeniable way."""
    return math.comb(2 * n, n) % 3


def random_series(rng: random.Random, p: int, max_len: int = 48, min_len: int = 0) -> TruncatedSeries:
    length = rng.randint(min_len, max_len)
    return TruncatedSeries(p, [rng.randrange(p) for _ in range(length)])


def random_decimal(rng: random.Random, num_digits: int) -> str:
    first = rng.choice("123456789")
    rest = "".join(rng.choice("0123456789") for _ in range(num_digits - 1))
    return first + rest
