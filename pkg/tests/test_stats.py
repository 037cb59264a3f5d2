"""Digit statistics: tallies, block counts, the shift/power battery."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normality_lab.sources import champernowne_stream, parse_source_spec, random_stream
from normality_lab.stats import (
    Word,
    count_block,
    count_block_via_power_base,
    count_digit,
    normality_battery,
    power_base_shift_counts,
    simple_normality_report,
    tally_digits,
)


def prefix_spec(text, base):
    return parse_source_spec(f"rational:{text}-prefix", base)


class TestWord:
    def test_parse_and_value(self):
        w = Word.parse("011", 2)
        assert w.digits == (0, 1, 1)
        assert w.value() == 3
        assert len(w) == 3
        assert str(w) == "011"

    def test_letters(self):
        assert Word.parse("a0", 16).digits == (10, 0)

    def test_big_base_str(self):
        assert str(Word(100, (14, 15))) == "[14][15]"

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Word.parse("102", 2)
        with pytest.raises(ValueError):
            Word(2, (0, 2))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Word(2, ())

    def test_parse_big_base_unsupported(self):
        with pytest.raises(ValueError):
            Word.parse("14", 100)


class TestTally:
    def test_counts_sum_to_n(self):
        table = tally_digits(champernowne_stream(10), 100)
        assert sum(table.counts.values()) == 100

    def test_frequency_and_deviation(self):
        table = tally_digits(prefix_spec("0110", 2).stream(), 4)
        assert table.frequency(1) == Fraction(1, 2)
        assert table.deviation(1) == 0
        assert table.deviation(0) == 0

    def test_missing_digit_has_zero_count(self):
        table = tally_digits(prefix_spec("1111", 2).stream(), 4)
        assert table.frequency(0) == 0
        assert table.deviation(0) == Fraction(1, 2)

    def test_count_digit(self):
        assert count_digit(prefix_spec("0110", 2).stream(), 1, 4) == 2

    def test_validation(self):
        with pytest.raises(ValueError):
            count_digit(champernowne_stream(10), 10, 5)
        with pytest.raises(ValueError):
            tally_digits(champernowne_stream(10), 0)


class TestCountBlock:
    def test_alternating(self):
        spec = prefix_spec("0101010101", 2)
        assert count_block(spec.stream(), Word.parse("01", 2), 10) == 5
        assert count_block(spec.stream(), Word.parse("10", 2), 10) == 4

    def test_overlaps_count(self):
        spec = prefix_spec("111111", 2)
        assert count_block(spec.stream(), Word.parse("11", 2), 6) == 5

    def test_word_longer_than_prefix(self):
        spec = prefix_spec("0101", 2)
        assert count_block(spec.stream(), Word.parse("0101", 2), 3) == 0

    def test_base_mismatch(self):
        with pytest.raises(ValueError):
            count_block(champernowne_stream(10), Word.parse("01", 2), 5)

    @given(st.integers(0, 1), st.integers(1, 300), st.integers(1, 2**32))
    @settings(max_examples=40)
    def test_single_digit_word_matches_count_digit(self, d, n, seed):
        word = Word(2, (d,))
        blocks = count_block(random_stream(2, seed), word, n)
        digits = count_digit(random_stream(2, seed), d, n)
        assert blocks == digits


class TestSimpleNormalityReport:
    def test_uniform_prefix(self):
        report = simple_normality_report(prefix_spec("0123456789", 10).stream(), 10)
        assert report.max_deviation == 0
        assert report.counts == {d: 1 for d in range(10)}

    def test_json_shape(self):
        report = simple_normality_report(prefix_spec("01", 2).stream(), 2)
        payload = report.to_json_dict()
        assert payload["base"] == 2
        assert payload["n"] == 2
        assert payload["deviations"] == {"0": "0", "1": "0"}
        assert payload["max_deviation"] == "0"
        assert payload["max_deviation_decimal"] == "0"


class TestBattery:
    def test_one_third_base_two(self):
        # 1/3 = 0.010101.. so pairs are constant: views (0,2) and (1,2)
        # each see a single repeated base-4 digit
        spec = parse_source_spec("rational:1/3", 2)
        cells = normality_battery(spec, 2, 30)
        views = {(c.shift, c.power): c.report.max_deviation for c in cells}
        assert set(views) == {(0, 1), (0, 2), (1, 2)}
        assert views[(0, 1)] == 0
        assert views[(0, 2)] == Fraction(3, 4)
        assert views[(1, 2)] == Fraction(3, 4)

    def test_cell_order(self):
        spec = parse_source_spec("random:3", 2)
        cells = normality_battery(spec, 3, 12)
        assert [(c.shift, c.power) for c in cells] == [
            (0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3),
        ]

    def test_view_base_is_power(self):
        spec = parse_source_spec("random:3", 2)
        cells = normality_battery(spec, 3, 12)
        assert [c.report.base for c in cells] == [2, 4, 4, 8, 8, 8]

    def test_explicit_base_regroups_first(self, tmp_path):
        path = tmp_path / "f.digits"
        path.write_text("base=10\n" + "1415926535" * 10 + "\n", encoding="ascii")
        spec = parse_source_spec(f"file:{path}")
        cells = normality_battery(spec, 1, 20, base=100)
        assert cells[0].report.base == 100

    def test_validation(self):
        with pytest.raises(ValueError):
            normality_battery(parse_source_spec("random:1", 2), 0, 10)


class TestPowerBaseDecomposition:
    def test_worked_example(self):
        text = "001001000011101101111110000100000110101100011110001"
        assert len(text) == 51
        spec = prefix_spec(text, 2)
        word = Word.parse("11", 2)
        contributions = power_base_shift_counts(spec, word, 25)
        assert contributions == [6, 7]
        assert count_block_via_power_base(spec, word, 25) == 13
        # same thing counted directly over len(w)*(k+1) - 1 = 51 digits
        assert count_block(spec.stream(), word, 51) == 13

    @given(
        st.integers(1, 3).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.lists(st.integers(0, 1), min_size=n, max_size=n),
                st.integers(1, 12),
                st.integers(1, 2**32),
            )
        )
    )
    @settings(max_examples=40)
    def test_matches_direct_count(self, args):
        n, digits, k, seed = args
        word = Word(2, tuple(digits))
        spec = parse_source_spec(f"random:{seed}", 2)
        via_views = count_block_via_power_base(spec, word, k)
        direct = count_block(spec.stream(), word, n * (k + 1) - 1)
        assert via_views == direct

    def test_validation(self):
        spec = parse_source_spec("random:1", 2)
        with pytest.raises(ValueError):
            power_base_shift_counts(spec, Word.parse("1", 2), 0)
        with pytest.raises(ValueError):
            power_base_shift_counts(spec, Word.parse("7", 10), 5)
