"""Measuring the sets where digit frequencies go wrong.

Fixing base r, digit b, prefix length n and a threshold eps, the set of
x in [0,1) whose digit-b frequency deviates from 1/r by at least eps is
a finite union of digit-prefix intervals, so its Lebesgue measure is an
exact rational.  This script computes a few of those measures three
ways (binomial formula, brute-force enumeration, Monte-Carlo sampling),
chains them against the D/(eps^4 n^2) bound, and finishes with the two
constructions behind "almost every number is simply normal": the tail
bound that can be made arbitrarily small, and the geometric interval
cover of a countable set.
"""
from fractions import Fraction

from normality_lab import (
    DeviationSetSpec,
    cover_total_length,
    deviation_set_measure,
    deviation_set_measure_bruteforce,
    geometric_interval_cover,
    monte_carlo_deviation,
    null_witness_index,
    tail_measure_bound,
)

eps = Fraction(1, 2)
print(f"measure of {{x : |freq of digit 0 in n base-2 digits - 1/2| >= {eps}}}")
print("  n    exact      enumerated   sampled (10^5, seed 42)   bound")
for n in (1, 2, 4, 8, 12):
    spec = DeviationSetSpec(base=2, digit=0, n=n, epsilon=eps)
    report = deviation_set_measure(spec)
    oracle = deviation_set_measure_bruteforce(spec)
    sampled = monte_carlo_deviation(spec, samples=100_000, seed=42)
    print(
        f"  {n:>2}  {str(report.exact_measure):>8}  {str(oracle):>10}"
        f"  {float(sampled):>12.5f}             {str(report.bound):>7}"
    )

# the bound is crude for small n (it can exceed 1) but it decays like
# 1/n^2, and that is all the argument needs
print()
eps = Fraction(1, 10)
print(f"decay of measure and bound, base 10, digit 7, eps = {eps}")
print("  n     measure (approx)   bound (approx)")
for n in (10, 40, 160, 640):
    spec = DeviationSetSpec(base=10, digit=7, n=n, epsilon=eps)
    report = deviation_set_measure(spec)
    print(
        f"  {n:>3}   {float(report.exact_measure):>12.3e}"
        f"      {float(report.bound):>12.3e}"
    )

print()
print("summing the bounds over n >= m gives a tail that shrinks to zero")
eps = Fraction(1, 2)
for m in (1, 2, 4, 10, 100):
    bound = tail_measure_bound(2, eps, m)
    print(f"  m = {m:>3}: union of all deviation sets beyond m has measure"
          f" <= {bound}")
target = Fraction(1, 1000)
m = null_witness_index(2, eps, target)
print(f"  first m with tail bound <= {target}: m = {m}")

print()
print("covering a countable set by arbitrarily little total length")
points = [Fraction(k, 7) for k in range(7)]
for eps in (Fraction(1, 10), Fraction(1, 1000)):
    cover = geometric_interval_cover(points, eps)
    total = cover_total_length(cover)
    print(f"  7 points, eps = {str(eps):>6}: total length {total} < {eps}")
print("  lengths halve down the list, so the total never reaches eps,")
print("  no matter how many points the enumeration goes on to add")
