"""Digit sources: where streams come from.

Four kinds, all deterministic:

* ``rational``: the long-division expansion of a rational in [0, 1),
  written either as a value ("rational:1/3") or as an explicit digit
  prefix ("rational:11010111011-prefix", the digits read in the stream's
  base and extended by zeros);
* ``champernowne``: the base-r constant 0.1 2 3 ... built by
  concatenating the digits of 1, 2, 3, ... in base r;
* ``file``: digits read from a small header-plus-digits text format;
* ``random``: a seeded 64-bit xorshift generator reduced to digits by
  rejection sampling, so equal seeds give equal streams everywhere.

A :class:`SourceSpec` is the parsed, reusable description; every call to
:meth:`SourceSpec.stream` starts a fresh stream from digit one.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterator

from .errors import InvalidDigitError, MalformedHeaderError
from .exact import parse_rational
from .radix import DigitStream, expand_rational, int_to_digits, validate_base

_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
_CHAR_VALUE = {c: i for i, c in enumerate(_ALPHABET)}

_MASK64 = (1 << 64) - 1
# substitute for the forbidden all-zero xorshift state; any fixed nonzero
# constant works, this one is 2**64 / golden ratio
_SEED_SUBSTITUTE = 0x9E3779B97F4A7C15


def rational_stream(value: Fraction, base: int) -> DigitStream:
    """Fractional digits of a rational in [0, 1)."""
    value = Fraction(value)
    if not 0 <= value < 1:
        raise ValueError(f"rational source must be in [0, 1), got {value}")
    return expand_rational(value, base, 1).fractional


def champernowne_stream(base: int) -> DigitStream:
    """Concatenated digits of 1, 2, 3, ... in the given base."""
    validate_base(base)

    def digits() -> Iterator[int]:
        k = 1
        while True:
            yield from int_to_digits(k, base)
            k += 1

    return DigitStream(base, digits(), description=f"champernowne base {base}")


def xorshift64_step(state: int) -> int:
    """One step of the classic 64-bit xorshift (shifts 13, 7, 17)."""
    state ^= (state << 13) & _MASK64
    state ^= state >> 7
    state ^= (state << 17) & _MASK64
    return state


def random_stream(base: int, seed: int) -> DigitStream:
    """Deterministic pseudo-random digits from a 64-bit xorshift.

    The seed is masked to 64 bits; a zero state (invalid for xorshift) is
    replaced by a fixed documented constant.  Each digit is state mod
    base, with states at or above the largest multiple of base rejected,
    so every digit value is exactly equally likely per accepted state.
    """
    validate_base(base)
    state = seed & _MASK64
    if state == 0:
        state = _SEED_SUBSTITUTE
    threshold = (1 << 64) - ((1 << 64) % base)

    def digits() -> Iterator[int]:
        s = state
        while True:
            s = xorshift64_step(s)
            if s < threshold:
                yield s % base

    return DigitStream(base, digits(), description=f"xorshift64 seed {seed}")


# --- digit files -----------------------------------------------------------
#
# Format: first line "base=<r>"; optionally a second line "int=<decimal>"
# giving a display-only integer part; everything after that is fractional
# digits.  For r <= 36 digits are the characters 0-9a-z; for r > 36 each
# digit is a bracketed decimal like [17].  Whitespace is ignored anywhere
# in the digit section.


@dataclass(frozen=True)
class DigitFile:
    path: Path
    base: int
    integer_value: int
    header_lines: int

    def stream(self) -> DigitStream:
        return DigitStream(
            self.base,
            _scan_digits(self.path, self.base, self.header_lines),
            description=str(self.path.name),
        )


def load_digit_file(path) -> DigitFile:
    path = Path(path)
    with open(path, "r", encoding="ascii") as fh:
        first = fh.readline()
        if not first:
            raise MalformedHeaderError(path, 1, "empty file, expected base=<r>")
        m = re.fullmatch(r"base=(\d+)", first.strip())
        if not m:
            raise MalformedHeaderError(
                path, 1, f"expected base=<r>, got {first.strip()!r}"
            )
        base = int(m.group(1))
        if base < 2:
            raise MalformedHeaderError(path, 1, f"base must be >= 2, got {base}")
        header_lines = 1
        integer_value = 0
        pos = fh.tell()
        second = fh.readline()
        if second.strip().startswith("int="):
            m2 = re.fullmatch(r"int=(\d+)", second.strip())
            if not m2:
                raise MalformedHeaderError(
                    path, 2, f"expected int=<decimal>, got {second.strip()!r}"
                )
            integer_value = int(m2.group(1))
            header_lines = 2
        else:
            fh.seek(pos)
    return DigitFile(path, base, integer_value, header_lines)


def _scan_digits(path: Path, base: int, header_lines: int) -> Iterator[int]:
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            if lineno <= header_lines:
                continue
            if base <= 36:
                for col, ch in enumerate(line, start=1):
                    if ch.isspace():
                        continue
                    value = _CHAR_VALUE.get(ch)
                    if value is None:
                        raise InvalidDigitError(
                            path, lineno, col, f"invalid digit character {ch!r}"
                        )
                    if value >= base:
                        raise InvalidDigitError(
                            path, lineno, col,
                            f"digit {ch!r} (= {value}) out of range for base {base}",
                        )
                    yield value
            else:
                yield from _scan_bracketed_line(path, base, lineno, line)


def _scan_bracketed_line(path: Path, base: int, lineno: int, line: str) -> Iterator[int]:
    col = 0
    length = len(line)
    while col < length:
        ch = line[col]
        col += 1
        if ch.isspace():
            continue
        if ch != "[":
            raise InvalidDigitError(
                path, lineno, col, f"expected '[', got {ch!r}"
            )
        start = col
        end = line.find("]", col)
        if end == -1:
            raise InvalidDigitError(path, lineno, start, "unterminated '[' token")
        token = line[col:end]
        col = end + 1
        if not token.isdigit():
            raise InvalidDigitError(
                path, lineno, start + 1, f"expected decimal digits inside [], got {token!r}"
            )
        value = int(token)
        if value >= base:
            raise InvalidDigitError(
                path, lineno, start + 1,
                f"digit [{value}] out of range for base {base}",
            )
        yield value


def file_digit_stream(path) -> DigitStream:
    """Stream a digit file; the base comes from its header."""
    return load_digit_file(path).stream()


# --- asset resolution ------------------------------------------------------

ASSETS_ENV = "NORMALITY_LAB_ASSETS"


def resolve_digit_path(name: str) -> Path:
    """Locate a digit file by name.

    Absolute paths and paths with directory components are used as given.
    Bare names are looked up in $NORMALITY_LAB_ASSETS when that is set
    (and only there); otherwise in the working directory, then among the
    packaged assets.
    """
    p = Path(name)
    if p.is_absolute() or len(p.parts) > 1:
        return p
    env = os.environ.get(ASSETS_ENV)
    if env:
        return Path(env) / name
    if p.exists():
        return p
    packaged = resources.files("normality_lab") / "assets" / name
    if packaged.is_file():
        return Path(str(packaged))
    return p


# --- source specs ----------------------------------------------------------


@dataclass(frozen=True)
class SourceSpec:
    """Parsed description of a digit source; stream() restarts it."""

    kind: str
    base: int
    value: Fraction | None = None
    path: Path | None = None
    seed: int | None = None
    spelled: str = ""

    def stream(self) -> DigitStream:
        if self.kind == "rational":
            s = rational_stream(self.value, self.base)
        elif self.kind == "champernowne":
            s = champernowne_stream(self.base)
        elif self.kind == "file":
            s = file_digit_stream(self.path)
        elif self.kind == "random":
            s = random_stream(self.base, self.seed)
        else:
            raise ValueError(f"unknown source kind {self.kind!r}")
        if self.spelled:
            s.description = self.spelled
        return s


def power_exponent(root: int, power: int) -> int | None:
    """The n >= 1 with root**n == power, or None if there is none."""
    if root < 2 or power < 2:
        return None
    n, value = 1, root
    while value < power:
        value *= root
        n += 1
    return n if value == power else None


def stream_in_base(spec: SourceSpec, base: int) -> DigitStream:
    """A fresh stream of this source in `base`.

    File sources carry their own base; requesting a power of it regroups
    the stream, anything else is an error.
    """
    from .radix import regroup_to_power_base

    validate_base(base)
    if base == spec.base:
        return spec.stream()
    n = power_exponent(spec.base, base)
    if n is None:
        raise ValueError(
            f"source is base {spec.base}; {base} is neither equal to it"
            " nor a power of it"
        )
    return regroup_to_power_base(spec.stream(), n)


def parse_prefix_digits(text: str, base: int) -> Fraction:
    """Value of an explicit digit prefix: sum of d_j * base**-j."""
    validate_base(base)
    if base > 36:
        raise ValueError("digit-prefix sources need base <= 36")
    if not text:
        raise ValueError("empty digit prefix")
    num = 0
    for ch in text:
        value = _CHAR_VALUE.get(ch)
        if value is None or value >= base:
            raise ValueError(f"invalid digit {ch!r} for base {base}")
        num = num * base + value
    return Fraction(num, base ** len(text))


def parse_source_spec(text: str, base: int | None = None) -> SourceSpec:
    """Parse CLI source spellings.

    "rational:1/3", "rational:0.25", "rational:11010111011-prefix",
    "champernowne", "file:pi_base10.digits", "random:42".  All kinds but
    "file" need an explicit base; a file's base comes from its header.
    """
    text = text.strip()
    kind, _, arg = text.partition(":")

    if kind == "file":
        if not arg:
            raise ValueError("file source needs a path: file:<name>")
        path = resolve_digit_path(arg)
        meta = load_digit_file(path)
        # the file's header base wins; stream_in_base regroups if a
        # caller wants a power of it
        return SourceSpec(kind="file", base=meta.base, path=path, spelled=text)

    if base is None:
        raise ValueError(f"source {text!r} needs an explicit base")
    validate_base(base)

    if kind == "champernowne" and not arg:
        return SourceSpec(kind="champernowne", base=base, spelled=text)
    if kind == "rational":
        if arg.endswith("-prefix"):
            value = parse_prefix_digits(arg[: -len("-prefix")], base)
        else:
            value = parse_rational(arg)
        if not 0 <= value < 1:
            raise ValueError(f"rational source must be in [0, 1), got {value}")
        return SourceSpec(kind="rational", base=base, value=value, spelled=text)
    if kind == "random":
        try:
            seed = int(arg, 0)
        except ValueError:
            raise ValueError(f"random source needs an integer seed, got {arg!r}") from None
        return SourceSpec(kind="random", base=base, seed=seed, spelled=text)

    raise ValueError(
        f"unknown source {text!r}; expected rational:, champernowne,"
        " file:, or random:"
    )
