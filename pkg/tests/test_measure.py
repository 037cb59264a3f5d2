"""Deviation-set measures: exact values, bounds, tails, covers."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normality_lab.errors import EnumerationBudgetError
from normality_lab.measure import (
    DeviationSetSpec,
    admissible_counts,
    cover_total_length,
    deviation_bound,
    deviation_set_measure,
    deviation_set_measure_bruteforce,
    digit_count_measure,
    geometric_interval_cover,
    monte_carlo_deviation,
    null_witness_index,
    prefix_interval_measure,
    tail_measure_bound,
    tail_sum_bound,
)

small_eps = st.fractions(min_value=Fraction(1, 100), max_value=1)


def spec(base, digit, n, eps):
    return DeviationSetSpec(base=base, digit=digit, n=n, epsilon=Fraction(eps))


class TestSpecValidation:
    def test_digit_range(self):
        with pytest.raises(ValueError):
            spec(2, 2, 4, "1/2")

    def test_epsilon_range(self):
        with pytest.raises(ValueError):
            spec(2, 0, 4, 0)
        with pytest.raises(ValueError):
            spec(2, 0, 4, "3/2")

    def test_n_positive(self):
        with pytest.raises(ValueError):
            spec(2, 0, 0, "1/2")

    def test_epsilon_coerced_to_fraction(self):
        s = DeviationSetSpec(base=2, digit=0, n=4, epsilon="1/2")
        assert s.epsilon == Fraction(1, 2)


class TestCountMeasure:
    def test_uniform_prefix_measure(self):
        assert prefix_interval_measure(10, 3) == Fraction(1, 1000)
        assert prefix_interval_measure(2, 0) == 1

    def test_binomial_weights(self):
        assert digit_count_measure(2, 2, 1) == Fraction(1, 2)
        assert digit_count_measure(10, 1, 1) == Fraction(1, 10)
        assert digit_count_measure(10, 2, 0) == Fraction(81, 100)

    @given(st.integers(2, 10), st.integers(1, 40))
    @settings(max_examples=40)
    def test_normalization(self, base, n):
        assert sum(digit_count_measure(base, n, p) for p in range(n + 1)) == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            digit_count_measure(2, 3, 4)
        with pytest.raises(ValueError):
            digit_count_measure(2, 0, 0)


class TestDeviationSetMeasure:
    def test_worked_example(self):
        # base 2, n = 2, eps = 1/2: only counts 0 and 2 deviate by >= 1/2
        report = deviation_set_measure(spec(2, 0, 2, "1/2"))
        assert report.admissible_p == (0, 2)
        assert report.exact_measure == Fraction(1, 2)
        assert report.bound == Fraction(3, 4)

    def test_empty_set(self):
        report = deviation_set_measure(spec(2, 0, 2, "3/4"))
        assert report.admissible_p == ()
        assert report.exact_measure == 0

    def test_threshold_is_inclusive(self):
        # p = 3, n = 4: |3/4 - 1/2| = 1/4 exactly; eps = 1/4 keeps it
        assert 3 in admissible_counts(spec(2, 1, 4, "1/4"))
        assert 3 not in admissible_counts(spec(2, 1, 4, "26/100"))

    def test_json_shape(self):
        payload = deviation_set_measure(spec(2, 0, 2, "1/2")).to_json_dict()
        assert payload == {
            "r": 2,
            "b": 0,
            "n": 2,
            "epsilon": "1/2",
            "exact_measure": "1/2",
            "bound": "3/4",
            "admissible_p": [0, 2],
        }

    def test_digit_symmetry(self):
        for digit in range(3):
            report = deviation_set_measure(spec(3, digit, 7, "1/4"))
            assert report.exact_measure == deviation_set_measure(
                spec(3, 0, 7, "1/4")
            ).exact_measure

    @given(
        st.integers(2, 4),
        st.integers(1, 9),
        st.fractions(min_value=Fraction(1, 20), max_value=1),
    )
    @settings(max_examples=60, deadline=None)
    def test_bruteforce_oracle_agrees(self, base, n, eps):
        s = spec(base, 0, n, eps)
        assert deviation_set_measure(s).exact_measure == deviation_set_measure_bruteforce(s)

    def test_budget_error_reports_requirement(self):
        s = spec(10, 0, 9, "1/10")
        with pytest.raises(EnumerationBudgetError) as exc:
            deviation_set_measure_bruteforce(s, budget=2)
        assert exc.value.required == 10**9
        assert exc.value.budget == 2


class TestDeviationBound:
    def test_spot_values(self):
        assert deviation_bound(2, Fraction(1, 2), 4) == Fraction(3, 16) / (
            Fraction(1, 16) * 16
        )
        assert deviation_bound(2, Fraction(1, 2), 10) == Fraction(3, 100)
        assert deviation_bound(10, Fraction(1, 10), 1) == Fraction(657, 1)

    def test_measure_below_bound_examples(self):
        for n in (1, 2, 5, 20, 100):
            report = deviation_set_measure(spec(2, 0, n, "1/10"))
            assert report.exact_measure <= report.bound

    @given(st.integers(2, 6), st.integers(1, 80), small_eps)
    @settings(max_examples=80, deadline=None)
    def test_measure_below_bound_property(self, base, n, eps):
        report = deviation_set_measure(spec(base, 0, n, eps))
        assert report.exact_measure <= report.bound

    def test_validation(self):
        with pytest.raises(ValueError):
            deviation_bound(2, Fraction(0), 4)
        with pytest.raises(ValueError):
            deviation_bound(2, Fraction(1, 2), 0)


class TestTails:
    def test_values(self):
        assert tail_sum_bound(1) == 2
        assert tail_sum_bound(2) == 1
        assert tail_sum_bound(5) == Fraction(1, 4)

    def test_dominates_partial_sums(self):
        for m in (1, 2, 3, 10):
            partial = sum(Fraction(1, n * n) for n in range(m, m + 400))
            assert partial < tail_sum_bound(m)

    def test_tail_measure_bound(self):
        # D = 3/16, eps = 1/2: D/eps^4 = 3, so the m-tail is 3/(m-1)
        assert tail_measure_bound(2, Fraction(1, 2), 4) == 1
        assert tail_measure_bound(2, Fraction(1, 2), 1) == 6

    def test_witness_spot_value(self):
        assert null_witness_index(2, Fraction(1, 2), Fraction(1)) == 4

    def test_witness_is_minimal(self):
        m = null_witness_index(2, Fraction(1, 2), Fraction(1))
        assert tail_measure_bound(2, Fraction(1, 2), m) <= 1
        assert tail_measure_bound(2, Fraction(1, 2), m - 1) > 1

    def test_witness_one_when_target_generous(self):
        assert null_witness_index(2, Fraction(1, 2), Fraction(6)) == 1

    @given(
        st.integers(2, 10),
        small_eps,
        st.fractions(min_value=Fraction(1, 1000), max_value=10),
    )
    @settings(max_examples=80)
    def test_witness_property(self, base, eps, target):
        m = null_witness_index(base, eps, target)
        assert tail_measure_bound(base, eps, m) <= target
        if m > 1:
            assert tail_measure_bound(base, eps, m - 1) > target

    def test_validation(self):
        with pytest.raises(ValueError):
            tail_sum_bound(0)
        with pytest.raises(ValueError):
            null_witness_index(2, Fraction(1, 2), Fraction(0))


class TestCover:
    def test_lengths_halve(self):
        points = [Fraction(k, 10) for k in range(4)]
        cover = geometric_interval_cover(points, Fraction(1, 2))
        assert [hw for _, hw in cover] == [
            Fraction(1, 8), Fraction(1, 16), Fraction(1, 32), Fraction(1, 64),
        ]
        assert [c for c, _ in cover] == points

    def test_total_length_formula(self):
        points = [Fraction(k) for k in range(10)]
        eps = Fraction(3, 7)
        total = cover_total_length(geometric_interval_cover(points, eps))
        assert total == eps * (1 - Fraction(1, 2**10))
        assert total < eps

    def test_empty_cover(self):
        assert cover_total_length([]) == 0

    @given(st.integers(1, 50), small_eps)
    @settings(max_examples=40)
    def test_any_prefix_stays_below_epsilon(self, k, eps):
        points = [Fraction(i, k + 1) for i in range(k)]
        total = cover_total_length(geometric_interval_cover(points, eps))
        assert total == eps * (1 - Fraction(1, 2**k))

    def test_validation(self):
        with pytest.raises(ValueError):
            geometric_interval_cover([Fraction(0)], Fraction(0))


class TestMonteCarlo:
    def test_deterministic(self):
        s = spec(2, 0, 2, "1/2")
        a = monte_carlo_deviation(s, 500, seed=42)
        b = monte_carlo_deviation(s, 500, seed=42)
        assert a == b

    def test_frozen_value(self):
        # exact measure is 1/2; one thousand samples land close
        s = spec(2, 0, 2, "1/2")
        assert monte_carlo_deviation(s, 1000, seed=42) == Fraction(13, 25)

    def test_seed_changes_result(self):
        s = spec(2, 0, 2, "1/2")
        assert monte_carlo_deviation(s, 1000, seed=43) == Fraction(1, 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            monte_carlo_deviation(spec(2, 0, 2, "1/2"), 0, seed=1)
