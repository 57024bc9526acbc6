import math
import random

import pytest

from christol import (
    AmbiguousBranch,
    BivariatePolynomial,
    BranchSpec,
    ChristolError,
    DegreeOverflow,
    NoBranch,
    NonUnitDenominator,
    PolynomialSyntaxError,
    TruncatedSeries,
    expand_branch,
    expand_rational,
    parse_bivariate,
    verify_annihilation,
)
from christol.examples import central_binomial_spec, shipped_specs, thue_morse_spec
from support import lucas_central_binomial_mod3, parity


# -- parsing ----------------------------------------------------------


def test_parse_worked_example():
    q = parse_bivariate("(1+x)^3*y^2 + (1+x)^2*y + x", 2)
    assert q.coeffs == ((0, 1, 1), (1, 0, 1), (0, 1, 1), (0, 0, 1))
    assert (q.dx, q.dy) == (3, 2)


def test_parse_reduces_mod_p():
    q = parse_bivariate("(1+2*x)*y^2 + 2", 3)
    assert q.coeffs == ((2, 0, 1), (0, 0, 2))
    assert parse_bivariate("5*y", 3) == parse_bivariate("2*y", 3)
    assert parse_bivariate("y + 3*x*y", 3) == parse_bivariate("y", 3)


def test_parse_precedence_and_whitespace():
    assert parse_bivariate("x*y^2", 5) == parse_bivariate("x*(y^2)", 5)
    assert parse_bivariate("x*y^2", 5) != parse_bivariate("(x*y)^2", 5)
    assert parse_bivariate("  ( 1 + x ) * y  ", 2) == parse_bivariate("(1+x)*y", 2)
    assert parse_bivariate("y-y+y", 5) == parse_bivariate("y", 5)
    assert parse_bivariate("y^1", 7) == parse_bivariate("y", 7)
    assert parse_bivariate("y + 0*x^60", 2) == parse_bivariate("y", 2)


def test_parse_syntax_errors_carry_position():
    cases = [
        ("y++x", 2),
        ("(x*y", 4),
        ("", 0),
        ("y^", 2),
        ("x*y)", 3),
    ]
    for text, pos in cases:
        with pytest.raises(PolynomialSyntaxError) as info:
            parse_bivariate(text, 2)
        assert info.value.pos == pos
        assert f"position {pos}" in str(info.value)


def test_parse_rejects_implicit_multiplication():
    with pytest.raises(PolynomialSyntaxError):
        parse_bivariate("2x + y", 5)
    with pytest.raises(PolynomialSyntaxError):
        parse_bivariate("x y", 5)


def test_parse_requires_y():
    for text in ("x+1", "x^3", "0*y", "y-y", "7*y"):
        with pytest.raises(ValueError):
            parse_bivariate(text, 7)


def test_degree_caps():
    with pytest.raises(DegreeOverflow):
        parse_bivariate("x^100*y", 2)
    with pytest.raises(DegreeOverflow):
        parse_bivariate("y^65", 2)
    q = parse_bivariate("x^100*y", 2, max_dx=128)
    assert q.dx == 100
    # cap applies to intermediates too: (x^60)^2 overflows even though
    # the final polynomial would, hypothetically, simplify
    with pytest.raises(DegreeOverflow):
        parse_bivariate("x^60*x^60*y", 2)


def test_to_text_round_trip():
    texts = [
        "(1+x)^3*y^2 + (1+x)^2*y + x",
        "(1+2*x)*y^2 + 2",
        "(1+x)*y + 1",
        "y^4 + x^2*y + x",
    ]
    for text in texts:
        for p in (2, 3, 5):
            q = parse_bivariate(text, p)
            assert parse_bivariate(q.to_text(), p) == q
    assert parse_bivariate("y+x*y+1", 2).to_text() == "1 + y + x*y"


def test_grid_constructor_normalizes():
    q = BivariatePolynomial(2, [[0, 1], [1, 0], [0, 0]])  # trailing zero row
    assert q.coeffs == ((0, 1), (1, 0))
    assert q.coefficient(5, 5) == 0
    assert q.y_row(1) == (1, 0)
    with pytest.raises(ValueError):
        BivariatePolynomial(2, [[1], [1]])  # no y anywhere
    with pytest.raises(ValueError):
        BivariatePolynomial(2, [])


# -- branch expansion -------------------------------------------------


def test_expand_parity_series():
    f = expand_branch(thue_morse_spec(), 8)
    assert f.coeffs == (0, 1, 1, 0, 1, 0, 0, 1)


def test_expand_central_binomial_series():
    f = expand_branch(central_binomial_spec(), 6)
    assert f.coeffs == (1, 2, 0, 2, 1, 0)
    direct = tuple(math.comb(2 * j, j) % 3 for j in range(6))
    assert f.coeffs == direct


def test_expand_against_oracles():
    f = expand_branch(thue_morse_spec(), 256)
    assert f.coeffs == tuple(parity(j) for j in range(256))
    g = expand_branch(central_binomial_spec(), 243)
    assert g.coeffs == tuple(lucas_central_binomial_mod3(j) for j in range(243))
    assert g.coeffs[:32] == tuple(math.comb(2 * j, j) % 3 for j in range(32))


def test_expand_unique_root_needs_no_seed():
    spec = BranchSpec(parse_bivariate("(1+x)*y + 1", 2))
    f = expand_branch(spec, 16)
    assert f.coeffs == (1,) * 16


def test_seed_disambiguation_errors():
    q2 = thue_morse_spec().q
    # Q(0, y) = y^2 + y has both roots at the origin
    with pytest.raises(AmbiguousBranch) as info:
        expand_branch(BranchSpec(q2), 4)
    assert info.value.index == 0
    # seed value that is not a root at all
    with pytest.raises(NoBranch) as info:
        expand_branch(BranchSpec(central_binomial_spec().q, (0,)), 4)
    assert info.value.index == 0
    # a0 = 0 is a root, but no branch through it has a_1 = 0
    with pytest.raises(NoBranch) as info:
        expand_branch(BranchSpec(q2, (0, 0)), 4)
    assert info.value.index == 1


def test_over_long_consistent_seed_is_accepted():
    f = expand_branch(thue_morse_spec(), 8)
    spec = BranchSpec(thue_morse_spec().q, f.coeffs)
    assert expand_branch(spec, 8) == f
    assert expand_branch(spec, 4).coeffs == f.coeffs[:4]


def test_engines_agree_on_shipped_specs():
    for _, spec in shipped_specs():
        a = expand_branch(spec, 512, method="newton")
        b = expand_branch(spec, 512, method="baseline")
        assert a == b
        assert expand_branch(spec, 512, method="auto") == a


def test_forced_newton_needs_unit_slope():
    # y^2 + x over F_2: dQ/dy = 0 identically
    spec = BranchSpec(parse_bivariate("y^2 + x", 2), (0,))
    with pytest.raises(ValueError):
        expand_branch(spec, 4, method="newton")


def test_baseline_handles_degenerate_slope():
    # y^2 + x^3 over F_2: the slope dQ/dy vanishes identically, so every
    # residue c extends the zero prefix at index 1 (Q(x, c*x) has nothing
    # below x^2)
    spec = BranchSpec(parse_bivariate("y^2 + x^3", 2), (0,))
    with pytest.raises(AmbiguousBranch) as info:
        expand_branch(spec, 4)
    assert info.value.index == 1
    # same at index 2 once a_1 is pinned
    spec2 = BranchSpec(parse_bivariate("y^2 + x^3", 2), (0, 0))
    with pytest.raises(AmbiguousBranch) as info:
        expand_branch(spec2, 4)
    assert info.value.index == 2
    # with three coefficients pinned the x^3 term stands alone and no
    # residue works: y^2 is stuck on even powers
    spec3 = BranchSpec(parse_bivariate("y^2 + x^3", 2), (0, 0, 0))
    with pytest.raises(NoBranch) as info:
        expand_branch(spec3, 5)
    assert info.value.index == 3


def test_small_term_counts():
    spec = thue_morse_spec()
    assert expand_branch(spec, 0).precision == 0
    assert expand_branch(spec, 1).coeffs == (0,)
    with pytest.raises(ValueError):
        expand_branch(spec, -1)
    with pytest.raises(ValueError):
        expand_branch(spec, 4, method="gauss")


def test_expansion_annihilates_random_polynomials():
    # whatever branch comes out must actually be a root of its polynomial
    rng = random.Random(20260819)
    successes = 0
    for _ in range(400):
        p = rng.choice((2, 3, 5))
        terms = {}
        for _ in range(rng.randrange(2, 7)):
            terms[(rng.randrange(4), rng.randrange(3))] = rng.randrange(1, p)
        terms[(0, rng.randrange(1, 3))] = rng.randrange(1, p)
        q = BivariatePolynomial.from_dict(p, terms)
        try:
            f = expand_branch(BranchSpec(q), 128)
        except ChristolError:
            continue
        assert verify_annihilation(q, f)
        successes += 1
    assert successes >= 50


def test_expand_rational():
    # 1/(1-x) over F_2
    assert expand_rational(2, [1], [1, 1], 6).coeffs == (1,) * 6
    # 1/(1-x-x^2) mod 5: Fibonacci numbers
    fib = expand_rational(5, [1], [1, 4, 4], 10)
    assert fib.coeffs == (1, 1, 2, 3, 5 % 5, 8 % 5, 13 % 5, 21 % 5, 34 % 5, 55 % 5)
    # numerator shorter/longer than n
    assert expand_rational(3, [0, 1, 0, 0, 2], [1], 3).coeffs == (0, 1, 0)
    with pytest.raises(NonUnitDenominator):
        expand_rational(3, [1], [0, 1], 4)
    with pytest.raises(NonUnitDenominator):
        expand_rational(3, [1], [], 4)
    with pytest.raises(ValueError):
        expand_rational(3, [1], [1], -1)


def test_rational_expansion_satisfies_recurrence():
    rng = random.Random(7)
    for _ in range(100):
        p = rng.choice((2, 3, 7))
        numer = [rng.randrange(p) for _ in range(rng.randrange(1, 5))]
        denom = [rng.randrange(1, p)] + [rng.randrange(p) for _ in range(rng.randrange(4))]
        n = 30
        f = expand_rational(p, numer, denom, n)
        d = TruncatedSeries(p, denom).pad_to(n)
        a = TruncatedSeries(p, numer[:n]).pad_to(n)
        assert d * f == a


def test_verify_annihilation():
    spec = thue_morse_spec()
    f = expand_branch(spec, 64)
    assert verify_annihilation(spec.q, f)
    wrong = TruncatedSeries(2, (1,) + f.coeffs[1:])
    assert not verify_annihilation(spec.q, wrong)
    assert verify_annihilation(spec.q, TruncatedSeries(2))  # vacuous
