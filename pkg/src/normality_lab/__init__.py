"""Exact-arithmetic toolkit for digit expansions and normality statistics.

The package computes, with no floating point anywhere, the objects behind
the classical "almost all numbers are normal" measure argument: radix
expansions as lazy digit streams, digit/block frequency statistics,
the Euler-operator route to the fourth moment of digit counts, and the
exact Lebesgue measures and bounds of digit-deviation sets.
"""
from .errors import (
    DigitFileError,
    EnumerationBudgetError,
    InsufficientDigitsError,
    InvalidDigitError,
    MalformedHeaderError,
    NormalityLabError,
)
from .exact import (
    ExactRational,
    binomial,
    binomial_row,
    decimal_approx,
    format_rational,
    parse_rational,
    rational_pow,
)
from .measure import (
    DeviationSetSpec,
    MeasureReport,
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
)
from .moments import (
    MomentBoundConstants,
    MomentPolynomial,
    apply_euler_operator,
    binomial_power_polynomial,
    check_moment_bound,
    derive_constants,
    fourth_moment_closed_form,
    fourth_moment_via_operator,
    frequency_fourth_moment,
    scaled_moment_via_operator,
    verify_operator_closed_form,
)
from .radix import (
    DigitExpansion,
    DigitStream,
    expand_rational,
    format_bracket,
    regroup_to_power_base,
    shift_fractional,
)
from .sources import (
    SourceSpec,
    champernowne_stream,
    file_digit_stream,
    load_digit_file,
    parse_source_spec,
    random_stream,
    rational_stream,
    stream_in_base,
)
from .stats import (
    BatteryCell,
    FrequencyTable,
    NormalityReport,
    Word,
    count_block,
    count_block_via_power_base,
    count_digit,
    normality_battery,
    power_base_shift_counts,
    simple_normality_report,
    tally_digits,
)
from .verify import CheckResult, check_ids, run_checks

__version__ = "0.1.0"

__all__ = [
    "BatteryCell",
    "CheckResult",
    "DeviationSetSpec",
    "DigitExpansion",
    "DigitFileError",
    "DigitStream",
    "EnumerationBudgetError",
    "ExactRational",
    "FrequencyTable",
    "InsufficientDigitsError",
    "InvalidDigitError",
    "MalformedHeaderError",
    "MeasureReport",
    "MomentBoundConstants",
    "MomentPolynomial",
    "NormalityLabError",
    "NormalityReport",
    "SourceSpec",
    "Word",
    "admissible_counts",
    "apply_euler_operator",
    "binomial",
    "binomial_power_polynomial",
    "binomial_row",
    "champernowne_stream",
    "check_ids",
    "check_moment_bound",
    "count_block",
    "count_block_via_power_base",
    "count_digit",
    "cover_total_length",
    "decimal_approx",
    "derive_constants",
    "deviation_bound",
    "deviation_set_measure",
    "deviation_set_measure_bruteforce",
    "digit_count_measure",
    "expand_rational",
    "file_digit_stream",
    "format_bracket",
    "format_rational",
    "fourth_moment_closed_form",
    "fourth_moment_via_operator",
    "frequency_fourth_moment",
    "geometric_interval_cover",
    "load_digit_file",
    "monte_carlo_deviation",
    "normality_battery",
    "null_witness_index",
    "parse_rational",
    "parse_source_spec",
    "power_base_shift_counts",
    "prefix_interval_measure",
    "random_stream",
    "rational_pow",
    "rational_stream",
    "regroup_to_power_base",
    "run_checks",
    "scaled_moment_via_operator",
    "shift_fractional",
    "simple_normality_report",
    "stream_in_base",
    "tail_measure_bound",
    "tally_digits",
    "verify_operator_closed_form",
]
