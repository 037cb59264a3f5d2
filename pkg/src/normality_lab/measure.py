"""Exact Lebesgue measures of digit-deviation sets, and the bounds on them.

The sets live in [0, 1).  Fixing a base r, a digit b, and a prefix
length n, the strings of n digits partition [0,1) into r**n intervals of
equal measure; the measure of "digit b appears exactly p times in the
first n digits" is therefore C(n,p)(r-1)**(n-p) / r**n, and the measure
of the deviation set

    M(n, eps) = { x : |count_b(n, x)/n - 1/r| >= eps }

is the sum of those weights over the admissible counts p.  Membership
uses the exact >= comparison, so boundary cases land inside the set.

The chain of bounds: exact measure <= D / (eps**4 n**2) pointwise (via
the fourth moment), tails sum to (D/eps**4) * T(m) with T(1) = 2 and
T(m) = 1/(m-1), and a prefix of a geometric series of intervals covers
any enumerated set of points with total length eps * (1 - 2**-k).
Everything is an exact Fraction.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EnumerationBudgetError
from .exact import binomial_row, decimal_approx, format_rational
from .moments import derive_constants
from .radix import validate_base
from .sources import random_stream

#: ceiling on r**n for honest string-by-string enumeration
DEFAULT_ENUMERATION_BUDGET = 20_000_000


@dataclass(frozen=True)
class DeviationSetSpec:
    """Parameters of one deviation set M(n, epsilon) for digit b in base r."""

    base: int
    digit: int
    n: int
    epsilon: Fraction

    def __post_init__(self):
        validate_base(self.base)
        if not 0 <= self.digit < self.base:
            raise ValueError(
                f"digit {self.digit} out of range for base {self.base}"
            )
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        eps = Fraction(self.epsilon)
        if not 0 < eps <= 1:
            raise ValueError(f"epsilon must be in (0, 1], got {eps}")
        object.__setattr__(self, "epsilon", eps)


def admissible_counts(spec: DeviationSetSpec) -> list[int]:
    """The counts p with |p/n - 1/base| >= epsilon (inclusive)."""
    target = Fraction(1, spec.base)
    return [
        p
        for p in range(spec.n + 1)
        if abs(Fraction(p, spec.n) - target) >= spec.epsilon
    ]


def prefix_interval_measure(base: int, length: int) -> Fraction:
    """Measure of the set of x sharing a fixed digit prefix: 1 / base**length."""
    validate_base(base)
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    return Fraction(1, base**length)


def digit_count_measure(base: int, n: int, p: int) -> Fraction:
    """Measure of {x : some fixed digit occurs exactly p times in n digits}.

    C(n,p) choices of positions, (base-1)**(n-p) fillings of the rest,
    each string an interval of measure base**-n.  Independent of which
    digit, by symmetry.
    """
    validate_base(base)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= p <= n:
        raise ValueError(f"count p must be in 0..{n}, got {p}")
    return Fraction(math.comb(n, p) * (base - 1) ** (n - p), base**n)


@dataclass(frozen=True)
class MeasureReport:
    """Exact measure of a deviation set next to its moment bound."""

    spec: DeviationSetSpec
    exact_measure: Fraction
    bound: Fraction
    admissible_p: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "r": self.spec.base,
            "b": self.spec.digit,
            "n": self.spec.n,
            "epsilon": format_rational(self.spec.epsilon),
            "exact_measure": format_rational(self.exact_measure),
            "bound": format_rational(self.bound),
            "admissible_p": list(self.admissible_p),
        }


def deviation_set_measure(spec: DeviationSetSpec) -> MeasureReport:
    """Exact measure of M(n, epsilon), summed over admissible counts."""
    admissible = admissible_counts(spec)
    row = binomial_row(spec.n)
    rm1 = spec.base - 1
    numerator = sum(row[p] * rm1 ** (spec.n - p) for p in admissible)
    return MeasureReport(
        spec=spec,
        exact_measure=Fraction(numerator, spec.base**spec.n),
        bound=deviation_bound(spec.base, spec.epsilon, spec.n),
        admissible_p=tuple(admissible),
    )


def deviation_set_measure_bruteforce(
    spec: DeviationSetSpec, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> Fraction:
    """The same measure by enumerating all base**n digit strings.

    Exists purely as an independent oracle for deviation_set_measure; it
    tests every string's own digit count against the threshold.  Strings
    beyond `budget` raise EnumerationBudgetError instead of running
    forever.
    """
    total = spec.base**spec.n
    if total > budget:
        raise EnumerationBudgetError(required=total, budget=budget)
    admissible = set(admissible_counts(spec))
    hits = sum(
        1
        for digits in itertools.product(range(spec.base), repeat=spec.n)
        if digits.count(spec.digit) in admissible
    )
    return Fraction(hits, total)


def deviation_bound(base: int, epsilon: Fraction, n: int) -> Fraction:
    """The moment bound D / (epsilon**4 n**2) on the deviation-set measure."""
    validate_base(base)
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError(f"epsilon must be > 0, got {epsilon}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    d = derive_constants(base).d
    return d / (epsilon**4 * n**2)


def tail_sum_bound(m: int) -> Fraction:
    """T(m) >= sum of 1/n**2 over n >= m: 2 for m = 1, else 1/(m-1).

    The m = 1 case is 1 + the telescoping tail; for m >= 2 compare
    1/n**2 with 1/(n(n-1)) term by term and telescope.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return Fraction(2) if m == 1 else Fraction(1, m - 1)


def tail_measure_bound(base: int, epsilon: Fraction, m: int) -> Fraction:
    """Bound on the measure of the union of M(n, epsilon) over n >= m.

    Summing deviation_bound over n >= m gives (D / epsilon**4) * T(m),
    which tends to 0 as m grows: the heart of the almost-everywhere
    argument.
    """
    validate_base(base)
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError(f"epsilon must be > 0, got {epsilon}")
    d = derive_constants(base).d
    return d / epsilon**4 * tail_sum_bound(m)


def null_witness_index(base: int, epsilon: Fraction, target: Fraction) -> int:
    """Smallest m with tail_measure_bound(base, epsilon, m) <= target.

    Exists for every positive target since the tail bound decays like
    1/(m-1); computed by exact ceiling, no search.
    """
    target = Fraction(target)
    if target <= 0:
        raise ValueError(f"target must be > 0, got {target}")
    b = tail_measure_bound(base, epsilon, 2)  # = D / epsilon**4
    if 2 * b <= target:
        return 1
    return 1 + math.ceil(b / target)


def geometric_interval_cover(
    points: list[Fraction], epsilon: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Center the k-th of a geometric run of intervals on the k-th point.

    Interval k (0-based) is (center = points[k], halfwidth =
    epsilon / 2**(k+2)), so its length is epsilon / 2**(k+1) and the
    total length of any prefix stays below epsilon: len(points) = K
    gives exactly epsilon * (1 - 2**-K).  This is the standard trick for
    covering a countable set by arbitrarily little measure.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError(f"epsilon must be > 0, got {epsilon}")
    return [
        (Fraction(point), epsilon / 2 ** (k + 2))
        for k, point in enumerate(points)
    ]


def cover_total_length(cover: list[tuple[Fraction, Fraction]]) -> Fraction:
    return sum((2 * hw for _, hw in cover), Fraction(0))


def monte_carlo_deviation(
    spec: DeviationSetSpec, samples: int, seed: int
) -> Fraction:
    """Fraction of pseudo-random digit strings landing in the deviation set.

    Draws `samples` independent n-digit strings from the seeded xorshift
    source and tests each against the exact membership rule.  Same seed,
    same result, on any machine.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    admissible = set(admissible_counts(spec))
    stream = random_stream(spec.base, seed)
    hits = 0
    for _ in range(samples):
        digits = stream.take(spec.n)
        if digits.count(spec.digit) in admissible:
            hits += 1
    return Fraction(hits, samples)
