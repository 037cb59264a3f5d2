"""Digit sources: rationals, champernowne, files, seeded randomness."""
import os
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normality_lab.errors import (
    InsufficientDigitsError,
    InvalidDigitError,
    MalformedHeaderError,
)
from normality_lab.sources import (
    ASSETS_ENV,
    SourceSpec,
    champernowne_stream,
    file_digit_stream,
    load_digit_file,
    parse_prefix_digits,
    parse_source_spec,
    power_exponent,
    random_stream,
    rational_stream,
    resolve_digit_path,
    stream_in_base,
    xorshift64_step,
)


class TestRationalStream:
    def test_half(self):
        assert rational_stream(Fraction(1, 2), 2).take(4) == [1, 0, 0, 0]

    def test_zero(self):
        assert rational_stream(Fraction(0), 5).take(3) == [0, 0, 0]

    def test_domain_is_unit_interval(self):
        with pytest.raises(ValueError):
            rational_stream(Fraction(3, 2), 2)
        with pytest.raises(ValueError):
            rational_stream(Fraction(-1, 2), 2)
        with pytest.raises(ValueError):
            rational_stream(Fraction(1), 2)


class TestChampernowne:
    def test_base_ten_prefix(self):
        s = champernowne_stream(10)
        assert s.take(13) == [1, 2, 3, 4, 5, 6, 7, 8, 9, 1, 0, 1, 1]

    def test_base_two_prefix(self):
        # 1, 10, 11, 100, 101 concatenated
        assert champernowne_stream(2).take(11) == [1, 1, 0, 1, 1, 1, 0, 0, 1, 0, 1]

    def test_first_digits_enumerate_single_digit_numbers(self):
        s = champernowne_stream(7)
        assert s.take(6) == [1, 2, 3, 4, 5, 6]

    @given(st.integers(2, 16))
    def test_all_digits_in_range(self, base):
        assert all(d < base for d in champernowne_stream(base).take(500))


class TestRandomStream:
    def test_frozen_seed_42_base_10(self):
        assert random_stream(10, 42).take(20) == [
            4, 1, 4, 6, 2, 7, 5, 4, 6, 7, 7, 8, 3, 3, 5, 1, 2, 7, 1, 2,
        ]

    def test_frozen_seed_42_base_2(self):
        assert random_stream(2, 42).take(20) == [
            0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 0,
        ]

    def test_frozen_seed_7_base_100(self):
        assert random_stream(100, 7).take(8) == [27, 52, 43, 7, 50, 25, 65, 48]

    def test_same_seed_same_stream(self):
        assert random_stream(10, 123).take(100) == random_stream(10, 123).take(100)

    def test_different_seeds_differ(self):
        assert random_stream(10, 1).take(50) != random_stream(10, 2).take(50)

    def test_zero_seed_uses_documented_substitute(self):
        substitute = 0x9E3779B97F4A7C15
        assert random_stream(10, 0).take(30) == random_stream(10, substitute).take(30)

    def test_seed_masked_to_64_bits(self):
        assert random_stream(10, 5 + 2**64).take(20) == random_stream(10, 5).take(20)

    def test_step_is_64_bit(self):
        state = 42
        for _ in range(100):
            state = xorshift64_step(state)
            assert 0 < state < 2**64

    @given(st.integers(2, 37), st.integers(1, 2**64 - 1))
    @settings(max_examples=50)
    def test_digits_in_range(self, base, seed):
        assert all(d < base for d in random_stream(base, seed).take(200))


def write_digit_file(path, text):
    path.write_text(text, encoding="ascii")
    return path


class TestDigitFiles:
    def test_round_trip(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=10\n14 15\n92\n")
        s = file_digit_stream(p)
        assert s.base == 10
        assert s.take(6) == [1, 4, 1, 5, 9, 2]

    def test_letters_for_larger_bases(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=16\n0f a\n")
        assert file_digit_stream(p).take(3) == [0, 15, 10]

    def test_bracketed_digits_above_36(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=100\n[14] [15]\n[92][0]\n")
        s = file_digit_stream(p)
        assert s.base == 100
        assert s.take(4) == [14, 15, 92, 0]

    def test_int_header(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=10\nint=3\n1415\n")
        meta = load_digit_file(p)
        assert meta.base == 10
        assert meta.integer_value == 3
        assert meta.stream().take(4) == [1, 4, 1, 5]

    def test_int_header_optional(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=10\n1415\n")
        assert load_digit_file(p).integer_value == 0

    def test_each_stream_is_fresh(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=10\n123\n")
        meta = load_digit_file(p)
        assert meta.stream().take(3) == meta.stream().take(3)

    def test_exhaustion_reports_file_size(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=2\n" + "01" * 25 + "\n")
        s = file_digit_stream(p)
        with pytest.raises(InsufficientDigitsError) as exc:
            s.take(51)
        assert exc.value.available == 50
        assert exc.value.requested == 51

    def test_missing_base_header(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "1415\n")
        with pytest.raises(MalformedHeaderError) as exc:
            load_digit_file(p)
        assert exc.value.line == 1

    def test_empty_file(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "")
        with pytest.raises(MalformedHeaderError):
            load_digit_file(p)

    def test_base_below_two(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=1\n000\n")
        with pytest.raises(MalformedHeaderError):
            load_digit_file(p)

    def test_malformed_int_header(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=10\nint=3.5\n14\n")
        with pytest.raises(MalformedHeaderError) as exc:
            load_digit_file(p)
        assert exc.value.line == 2

    def test_digit_out_of_range_with_position(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=2\n0101\n0121\n")
        with pytest.raises(InvalidDigitError) as exc:
            file_digit_stream(p).take(8)
        assert exc.value.line == 3
        assert exc.value.column == 3

    def test_invalid_character(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=10\n12x4\n")
        with pytest.raises(InvalidDigitError):
            file_digit_stream(p).take(4)

    def test_uppercase_rejected(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=16\n0F\n")
        with pytest.raises(InvalidDigitError):
            file_digit_stream(p).take(2)

    def test_unterminated_bracket(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=100\n[14] [15\n")
        with pytest.raises(InvalidDigitError):
            file_digit_stream(p).take(3)

    def test_bracket_value_out_of_range(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=40\n[39][40]\n")
        with pytest.raises(InvalidDigitError):
            file_digit_stream(p).take(2)

    def test_empty_bracket(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=100\n[]\n")
        with pytest.raises(InvalidDigitError):
            file_digit_stream(p).take(1)

    def test_stray_character_in_bracket_mode(self, tmp_path):
        p = write_digit_file(tmp_path / "t.digits", "base=100\n[14] 15\n")
        with pytest.raises(InvalidDigitError):
            file_digit_stream(p).take(2)

    def test_missing_file_is_os_error(self, tmp_path):
        with pytest.raises(OSError):
            load_digit_file(tmp_path / "nope.digits")


class TestAssetResolution:
    def test_env_var_takes_over(self, tmp_path, monkeypatch):
        write_digit_file(tmp_path / "x.digits", "base=10\n7\n")
        monkeypatch.setenv(ASSETS_ENV, str(tmp_path))
        assert resolve_digit_path("x.digits") == tmp_path / "x.digits"

    def test_env_var_is_exclusive(self, tmp_path, monkeypatch):
        # packaged pi file exists, but a set env var is the only place searched
        monkeypatch.setenv(ASSETS_ENV, str(tmp_path))
        resolved = resolve_digit_path("pi_base10.digits")
        assert resolved == tmp_path / "pi_base10.digits"
        assert not resolved.exists()

    def test_packaged_asset_found_without_env(self, monkeypatch):
        monkeypatch.delenv(ASSETS_ENV, raising=False)
        resolved = resolve_digit_path("pi_base10.digits")
        assert resolved.exists()
        assert load_digit_file(resolved).base == 10

    def test_explicit_paths_used_as_given(self, tmp_path, monkeypatch):
        monkeypatch.setenv(ASSETS_ENV, str(tmp_path / "elsewhere"))
        p = write_digit_file(tmp_path / "y.digits", "base=10\n7\n")
        assert resolve_digit_path(str(p)) == p


class TestSourceSpecs:
    def test_rational_spelling(self):
        spec = parse_source_spec("rational:1/3", 2)
        assert spec.kind == "rational"
        assert spec.value == Fraction(1, 3)
        assert spec.stream().take(4) == [0, 1, 0, 1]

    def test_decimal_spelling_is_exact(self):
        assert parse_source_spec("rational:0.25", 10).value == Fraction(1, 4)

    def test_prefix_spelling(self):
        spec = parse_source_spec("rational:11010111011-prefix", 2)
        assert spec.value == Fraction(0b11010111011, 2**11)
        assert spec.stream().take(11) == [1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 1]
        assert spec.stream().take(13)[-2:] == [0, 0]  # zero-extended

    def test_prefix_digits_validated(self):
        with pytest.raises(ValueError):
            parse_prefix_digits("0121", 2)
        with pytest.raises(ValueError):
            parse_prefix_digits("", 2)

    def test_champernowne_spelling(self):
        spec = parse_source_spec("champernowne", 10)
        assert spec.stream().take(3) == [1, 2, 3]

    def test_random_spelling(self):
        spec = parse_source_spec("random:42", 10)
        assert spec.seed == 42
        assert spec.stream().take(5) == [4, 1, 4, 6, 2]

    def test_file_spelling_reads_header_base(self, tmp_path):
        p = write_digit_file(tmp_path / "f.digits", "base=7\n123\n")
        spec = parse_source_spec(f"file:{p}")
        assert spec.base == 7
        assert spec.stream().take(3) == [1, 2, 3]

    def test_rational_needs_unit_interval(self):
        with pytest.raises(ValueError):
            parse_source_spec("rational:5/3", 10)

    def test_base_required_for_non_file(self):
        with pytest.raises(ValueError):
            parse_source_spec("rational:1/3")
        with pytest.raises(ValueError):
            parse_source_spec("champernowne")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            parse_source_spec("pi", 10)

    def test_bad_seed(self):
        with pytest.raises(ValueError):
            parse_source_spec("random:abc", 10)

    def test_streams_restart(self):
        spec = parse_source_spec("random:9", 10)
        assert spec.stream().take(10) == spec.stream().take(10)


class TestStreamInBase:
    def test_power_exponent(self):
        assert power_exponent(2, 8) == 3
        assert power_exponent(10, 10) == 1
        assert power_exponent(10, 1000) == 3
        assert power_exponent(2, 6) is None
        assert power_exponent(10, 5) is None

    def test_same_base_passthrough(self):
        spec = parse_source_spec("rational:1/3", 2)
        assert stream_in_base(spec, 2).take(4) == [0, 1, 0, 1]

    def test_regroups_file_to_power_base(self, tmp_path):
        p = write_digit_file(tmp_path / "f.digits", "base=10\n141592\n")
        spec = parse_source_spec(f"file:{p}")
        s = stream_in_base(spec, 100)
        assert s.base == 100
        assert s.take(3) == [14, 15, 92]

    def test_rejects_non_power(self, tmp_path):
        p = write_digit_file(tmp_path / "f.digits", "base=10\n141592\n")
        spec = parse_source_spec(f"file:{p}")
        with pytest.raises(ValueError):
            stream_in_base(spec, 7)
