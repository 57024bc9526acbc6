"""Worked sequences shipped with the package.

Three algebraic series with independently checkable coefficients; the
self test and much of the test suite run against them.

  * Thue-Morse over F_2: t_n is the parity of the binary digit sum of n.
    Generating series satisfies (1+x)^3 y^2 + (1+x)^2 y + x = 0; both
    y = t and y = 1 + t are roots, so one seed coefficient is required.
  * Central binomial coefficients C(2n, n) mod 3: series 1/sqrt(1-4x)
    reduces to (1+2x) y^2 + 2 = 0 over F_3.  By Lucas' theorem the value
    is 0 when some base-3 digit of n is 2, else 2^(number of 1 digits).
  * The all-ones sequence 1/(1+x) over F_2, the smallest nontrivial case.
"""

from .algebraic_series import BranchSpec, parse_bivariate


def thue_morse_spec() -> BranchSpec:
    return BranchSpec(parse_bivariate("(1+x)^3*y^2 + (1+x)^2*y + x", 2), seed=(0,))


def central_binomial_spec() -> BranchSpec:
    return BranchSpec(parse_bivariate("(1+2*x)*y^2 + 2", 3), seed=(1,))


def all_ones_spec() -> BranchSpec:
    # Q(0, y) = y + 1 has a single root, so no seed is needed.
    return BranchSpec(parse_bivariate("(1+x)*y + 1", 2))


def shipped_specs():
    """(name, spec) pairs for everything above."""
    return [
        ("thue-morse", thue_morse_spec()),
        ("central-binomial-mod-3", central_binomial_spec()),
        ("all-ones", all_ones_spec()),
    ]


def thue_morse_oracle(digits) -> int:
    """Parity of the digit sum; digits in any order, any base-2 digits."""
    return sum(digits) & 1


def central_binomial_mod3_oracle(digits) -> int:
    """C(2n, n) mod 3 from the base-3 digits of n: adding n + n in base 3
    carries exactly at digits equal to 2 (killing the binomial mod 3 by
    Kummer), and each digit 1 contributes a factor C(2, 1) = 2 by Lucas."""
    if any(d == 2 for d in digits):
        return 0
    return pow(2, sum(1 for d in digits if d == 1), 3)
