"""From automatic sequences back to algebraic equations.

automatic_to_series() tabulates a machine's outputs as a truncated
series.  guess_polynomial() then searches for a nonzero Q(x, y) of
bounded degree with Q(x, f) = 0 mod x^N: each product x^i * f^j is one
column of an evaluation matrix, and any kernel vector is a candidate
relation.  The answer is certified exactly as far as the input reaches
(the returned Q annihilates the given truncation; more coefficients give
a stronger certificate, never a different normalized Q).
"""

from .algebraic_series import BivariatePolynomial, verify_annihilation
from .automaton import query
from .errors import NoRelationFound
from .linalg import nullspace_basis
from .power_series import TruncatedSeries


def automatic_to_series(machine, n: int) -> TruncatedSeries:
    """First n outputs of the machine as a truncated series:
    coefficient j is query(machine, str(j))."""
    if n < 0:
        raise ValueError(f"term count must be nonnegative, got {n}")
    return TruncatedSeries(machine.p, (query(machine, str(j)).value for j in range(n)))


def guess_polynomial(f: TruncatedSeries, dx: int, dy: int) -> BivariatePolynomial:
    """A nonzero Q with deg_x <= dx, deg_y <= dy and Q(x, f) = 0 to f's
    precision, normalized so its first nonzero coefficient in
    lexicographic (j, i) order is 1.

    Needs f to carry at least (dx+1)*(dy+1) + dx + dy coefficients:
    enough rows that the kernel is cut out by a comfortable margin of
    equations beyond the unknown count.  Raises NoRelationFound when the
    evaluation matrix has full column rank.
    """
    if dx < 0 or dy < 1:
        raise ValueError(f"degree bounds must have dx >= 0 and dy >= 1, got ({dx}, {dy})")
    needed = (dx + 1) * (dy + 1) + dx + dy
    n = f.precision
    if n < needed:
        raise ValueError(
            f"series precision {n} too small for bounds ({dx}, {dy}); need {needed}"
        )
    p = f.p

    # column (j, i) holds the coefficients of x^i * f^j
    powers = [TruncatedSeries(p, (1,) + (0,) * (n - 1))]
    for _ in range(dy):
        powers.append(powers[-1] * f)
    columns = []
    for j in range(dy + 1):
        base = powers[j].coeffs
        for i in range(dx + 1):
            columns.append((0,) * i + base[: n - i])
    rows = [[col[r] for col in columns] for r in range(n)]

    kernel = nullspace_basis(rows, p, len(columns))
    if not kernel:
        raise NoRelationFound(f"no relation within degree bounds ({dx}, {dy})")
    vec = kernel[0]
    lead = next(v for v in vec if v)
    inv = pow(lead, p - 2, p)
    terms = {}
    for idx, v in enumerate(vec):
        if v:
            j, i = divmod(idx, dx + 1)
            terms[(i, j)] = v * inv % p
    q = BivariatePolynomial.from_dict(p, terms)
    if not verify_annihilation(q, f):  # pragma: no cover - kernel vectors annihilate
        raise RuntimeError("kernel vector failed verification; linear algebra is broken")
    return q
