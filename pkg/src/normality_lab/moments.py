"""Fourth-moment machinery for digit-frequency deviations.

Everything here is about one random quantity: the count X of a fixed
digit among n independent uniform base-r digits.  The generating
polynomial sum_p C(n,p) x^(s*p) y^(n-p) (which is just (x**s + y)**n)
turns into moment sums under the Euler-type operator x*d/dx - y*d/dy,
because each application multiplies the p-th coefficient by (s*p - q).
With s = r-1 and the specialization x**s = 1/r, y = (r-1)/r, k
applications evaluate to E[(r*X - n)**k]; k=1 vanishes (the mean is
killed by construction) and k=4 has a closed quadratic form in n whose
coefficient bound C turns the fourth moment into the D/n**2 tail bound
that drives all the measure estimates.

All coefficients and values are exact; the only floats anywhere are the
display columns of the CSV rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import binomial_row, decimal_approx, format_rational
from .radix import validate_base


@dataclass(frozen=True)
class MomentPolynomial:
    """Sparse polynomial sum of c[p,q] * (x**s)**p * y**q.

    Keys are (p, q) pairs; the x-exponent of a term is s*p, so p counts
    powers of U = x**s.  Zero coefficients are never stored.  For the
    polynomials this package builds, every key satisfies 0 <= p <= n and
    q = n - p, and coefficients stay integers.
    """

    n: int
    s: int
    coeffs: dict[tuple[int, int], int]

    def coefficient(self, p: int, q: int) -> int:
        return self.coeffs.get((p, q), 0)

    def evaluate(self, u: Fraction, y: Fraction) -> Fraction:
        """Exact value at U = u, y = y."""
        if not self.coeffs:
            return Fraction(0)
        u = Fraction(u)
        y = Fraction(y)
        max_p = max(p for p, _ in self.coeffs)
        max_q = max(q for _, q in self.coeffs)
        u_pows = _power_table(u, max_p)
        y_pows = _power_table(y, max_q)
        total = Fraction(0)
        for (p, q), c in self.coeffs.items():
            total += c * u_pows[p] * y_pows[q]
        return total


def _power_table(x: Fraction, top: int) -> list[Fraction]:
    pows = [Fraction(1)]
    for _ in range(top):
        pows.append(pows[-1] * x)
    return pows


def binomial_power_polynomial(n: int, s: int) -> MomentPolynomial:
    """The expansion of (x**s + y)**n: coefficient C(n,p) at (p, n-p)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    row = binomial_row(n)
    return MomentPolynomial(n, s, {(p, n - p): row[p] for p in range(n + 1)})


def apply_euler_operator(poly: MomentPolynomial) -> MomentPolynomial:
    """One application of x*d/dx - y*d/dy.

    A term c * x**(s*p) * y**q becomes c * (s*p - q) * the same monomial:
    the operator is diagonal on monomials, which is the whole point.
    Terms whose factor vanishes are dropped; the zero polynomial maps to
    itself.
    """
    coeffs = {}
    s = poly.s
    for (p, q), c in poly.coeffs.items():
        factor = s * p - q
        if factor and c:
            coeffs[(p, q)] = c * factor
    return MomentPolynomial(poly.n, poly.s, coeffs)


def operator_power_coefficients(n: int, s: int, k: int) -> dict[tuple[int, int], int]:
    """Closed form for k operator applications to the binomial expansion.

    The (p, n-p) coefficient is C(n,p) * ((s+1)*p - n)**k, since
    s*p - (n-p) = (s+1)*p - n.  Zero entries are omitted to match the
    iterated representation.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    row = binomial_row(n)
    out = {}
    for p in range(n + 1):
        c = row[p] * ((s + 1) * p - n) ** k
        if c:
            out[(p, n - p)] = c
    return out


def verify_operator_closed_form(n: int, s: int, k: int) -> bool:
    """Iterate the operator k times and compare with the closed form."""
    poly = binomial_power_polynomial(n, s)
    for _ in range(k):
        poly = apply_euler_operator(poly)
    return poly.coeffs == operator_power_coefficients(n, s, k)


def scaled_moment_via_operator(n: int, r: int, k: int) -> Fraction:
    """E[(r*X - n)**k] for X = count of one digit among n uniform base-r
    digits, computed by k operator applications and specialization.

    Sets s = r - 1, U = x**s = 1/r, y = (r-1)/r; the k = 1 case is
    identically zero because s*x**s - y vanishes at that point.
    """
    validate_base(r)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    poly = binomial_power_polynomial(n, r - 1)
    for _ in range(k):
        poly = apply_euler_operator(poly)
    return poly.evaluate(Fraction(1, r), Fraction(r - 1, r))


def fourth_moment_via_operator(n: int, r: int) -> Fraction:
    """E[(r*X - n)**4] by four operator applications (the slow, honest route)."""
    return scaled_moment_via_operator(n, r, 4)


def fourth_moment_closed_form(n: int, r: int) -> Fraction:
    """E[(r*X - n)**4] = 3(r-1)^2 n^2 + (r^3 - 7r^2 + 12r - 6) n."""
    validate_base(r)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Fraction(3 * (r - 1) ** 2 * n * n + (r**3 - 7 * r**2 + 12 * r - 6) * n)


@dataclass(frozen=True)
class MomentBoundConstants:
    """The pair (C, D = C / r**4) with E[(r*X-n)**4] <= C*n**2 for n >= 1."""

    base: int
    c: Fraction
    d: Fraction


def derive_constants(r: int) -> MomentBoundConstants:
    """C = 3(r-1)^2 + max(0, r^3 - 7r^2 + 12r - 6), D = C / r**4.

    When the linear coefficient of the closed form is negative, dropping
    it only helps; when positive, n <= n**2 absorbs it.  Either way the
    fourth moment is at most C*n**2.
    """
    validate_base(r)
    c = Fraction(3 * (r - 1) ** 2 + max(0, r**3 - 7 * r**2 + 12 * r - 6))
    return MomentBoundConstants(base=r, c=c, d=c / r**4)


def frequency_fourth_moment(n: int, r: int) -> Fraction:
    """E[(X/n - 1/r)**4]: the binomially weighted fourth power of the
    frequency deviation, as one exact fraction.

    Computed directly from the probability weights C(n,p)(r-1)^(n-p)/r^n
    with integer accumulation, independent of the operator route.
    """
    validate_base(r)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 0
    binom = 1
    pw = (r - 1) ** n
    for p in range(n + 1):
        total += binom * pw * (r * p - n) ** 4
        binom = binom * (n - p) // (p + 1)
        if r > 2:
            pw //= r - 1
    return Fraction(total, r**n * (r * n) ** 4)


@dataclass(frozen=True)
class MomentBoundRow:
    """One line of the bound sweep: the moment sum against D/n**2."""

    n: int
    moment_sum: Fraction
    bound: Fraction
    ratio: Fraction
    holds: bool

    def to_csv_row(self) -> str:
        return ",".join(
            (
                str(self.n),
                format_rational(self.moment_sum),
                format_rational(self.bound),
                decimal_approx(self.ratio),
                "true" if self.holds else "false",
            )
        )


MOMENT_SWEEP_CSV_HEADER = "n,sum,bound,ratio_decimal,holds"


def check_moment_bound(r: int, n_max: int) -> list[MomentBoundRow]:
    """Sweep n = 1..n_max: frequency fourth moment vs its D/n**2 bound."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    d = derive_constants(r).d
    rows = []
    for n in range(1, n_max + 1):
        total = frequency_fourth_moment(n, r)
        bound = d / n**2
        rows.append(
            MomentBoundRow(
                n=n,
                moment_sum=total,
                bound=bound,
                ratio=total / bound,
                holds=total <= bound,
            )
        )
    return rows
