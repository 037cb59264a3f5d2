"""Radix expansions as lazy digit streams.

The central object is :class:`DigitStream`: a pull-based, single-consumer
source of base-r digits after the radix point.  Streams compose (a
rational expansion, a regrouping into base r**n, and a fractional shift
are all streams) and every consumer states up front how many digits it
needs, so exhaustion is always reported with exact positions.

Digits are plain ints in range(base).  The expansion produced for a
rational is the standard long-division one: it never ends in an infinite
tail of (base-1), and a leading-digit index records where the expansion
starts.  Bases are arbitrary ints >= 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import InsufficientDigitsError


def validate_base(base: int) -> int:
    if not isinstance(base, int) or isinstance(base, bool):
        raise TypeError(f"base must be an int, got {type(base).__name__}")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    return base


def int_to_digits(value: int, base: int) -> list[int]:
    """Digits of a nonnegative integer, most significant first; [] for 0."""
    validate_base(base)
    if value < 0:
        raise ValueError(f"value must be >= 0, got {value}")
    digits: list[int] = []
    while value:
        value, d = divmod(value, base)
        digits.append(d)
    digits.reverse()
    return digits


def digits_to_int(digits, base: int) -> int:
    """Inverse of int_to_digits; accepts any iterable of digits, MSD first."""
    validate_base(base)
    value = 0
    for d in digits:
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range for base {base}")
        value = value * base + d
    return value


class _Tape:
    """Shared buffer that lets forked streams replay one underlying iterator."""

    __slots__ = ("_it", "buffer", "exhausted")

    def __init__(self, it: Iterator[int]):
        self._it = it
        self.buffer: list[int] = []
        self.exhausted = False

    def get(self, index: int) -> int | None:
        """Digit at tape offset `index`, or None once the source is dry."""
        while len(self.buffer) <= index:
            if self.exhausted:
                return None
            try:
                self.buffer.append(next(self._it))
            except StopIteration:
                self.exhausted = True
                return None
        return self.buffer[index]


class DigitStream:
    """Single-consumer stream of base-r digits after the radix point.

    `position` counts digits consumed from the underlying expansion since
    this stream's origin; a fork shares the origin, so both copies report
    positions in the same coordinate system.  Forking switches the stream
    onto a shared tape whose memory grows with the furthest read; fine
    for the bounded reads this package performs, so the tape is never
    trimmed.
    """

    __slots__ = ("base", "position", "description", "_it", "_tape", "_cursor")

    def __init__(self, base: int, digits, description: str = ""):
        self.base = validate_base(base)
        self.position = 0
        self.description = description
        self._it: Iterator[int] | None = iter(digits)
        self._tape: _Tape | None = None
        self._cursor = 0

    def next_digit(self) -> int:
        if self._tape is None:
            try:
                d = next(self._it)  # type: ignore[arg-type]
            except StopIteration:
                raise InsufficientDigitsError(
                    self.position, self.position + 1, self.description
                ) from None
        else:
            got = self._tape.get(self._cursor)
            if got is None:
                raise InsufficientDigitsError(
                    self.position, self.position + 1, self.description
                )
            d = got
            self._cursor += 1
        self.position += 1
        return d

    def take(self, count: int) -> list[int]:
        """Exactly `count` digits, or InsufficientDigitsError telling how
        many were available in total."""
        if count < 0:
            raise ValueError(f"count must be >= 0, got {count}")
        goal = self.position + count
        out: list[int] = []
        for _ in range(count):
            try:
                out.append(self.next_digit())
            except InsufficientDigitsError as exc:
                raise InsufficientDigitsError(
                    exc.available, goal, self.description
                ) from None
        return out

    def skip(self, count: int) -> None:
        self.take(count)

    def fork(self) -> "DigitStream":
        """An independent stream continuing from the same next digit.

        Both copies may be consumed in any interleaving and see identical
        digits.
        """
        if self._tape is None:
            self._tape = _Tape(self._it)  # type: ignore[arg-type]
            self._it = None
            self._cursor = 0
        twin = DigitStream.__new__(DigitStream)
        twin.base = self.base
        twin.position = self.position
        twin.description = self.description
        twin._it = None
        twin._tape = self._tape
        twin._cursor = self._cursor
        return twin

    def __iter__(self) -> Iterator[int]:
        while True:
            try:
                yield self.next_digit()
            except InsufficientDigitsError:
                return

    def __repr__(self) -> str:
        src = f" {self.description}" if self.description else ""
        return f"<DigitStream base={self.base} position={self.position}{src}>"


@dataclass
class DigitExpansion:
    """A number's radix expansion: integer digits plus a fractional stream.

    leading_index locates the most significant nonzero digit: it is
    len(integer_digits) - 1 for values >= 1, -k when the first nonzero
    fractional digit is the k-th, and -1 for an exact zero.  None means
    the expansion was built around an opaque stream and the index was
    not scanned for.  period, when known, is (preperiod_length,
    period_length) of the fractional part.
    """

    base: int
    integer_digits: list[int]
    fractional: DigitStream
    leading_index: int | None = None
    period: tuple[int, int] | None = None

    @property
    def value_known_rational(self) -> bool:
        return self.period is not None


def expand_rational(q: Fraction, base: int, count: int) -> DigitExpansion:
    """Standard long-division expansion of a nonnegative rational.

    The fractional stream is infinite (the periodic part cycles forever);
    `count` declares how many fractional digits the caller intends to use
    and is validated, nothing more.  The expansion produced is the one
    whose truncations round down, so it never ends in an infinite tail of
    (base-1): 1/2 in base 2 is 0.1000..., not 0.0111... .  Memory is
    bounded by the denominator (one slot per distinct remainder).
    """
    validate_base(base)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"value must be >= 0, got {q}")
    int_part, rem = divmod(q.numerator, q.denominator)
    integer_digits = int_to_digits(int_part, base)
    den = q.denominator

    # long division on the fractional remainder, detecting the cycle by
    # the first repeated remainder
    digits: list[int] = []
    seen: dict[int, int] = {}
    r = rem
    while r not in seen:
        seen[r] = len(digits)
        d, r = divmod(r * base, den)
        digits.append(d)
    preperiod = seen[r]
    period = len(digits) - preperiod

    def cycle() -> Iterator[int]:
        yield from digits
        tail = digits[preperiod:]
        while True:
            yield from tail

    if q == 0:
        leading = -1
    elif int_part > 0:
        leading = len(integer_digits) - 1
    else:
        first_nonzero = next(i for i, d in enumerate(digits) if d)
        leading = -(first_nonzero + 1)

    stream = DigitStream(base, cycle(), description=f"{q} in base {base}")
    return DigitExpansion(
        base=base,
        integer_digits=integer_digits,
        fractional=stream,
        leading_index=leading,
        period=(preperiod, period),
    )


def regroup_to_power_base(stream: DigitStream, n: int) -> DigitStream:
    """View a base-r stream as a base-r**n stream.

    Output digit k is the n consecutive input digits k*n..k*n+n-1 read as
    a base-r integer; consuming k output digits consumes exactly k*n input
    digits.  n=1 returns the stream itself.  Exhaustion mid-group
    propagates the underlying error (its position identifies the short
    read in input coordinates).
    """
    if n < 1:
        raise ValueError(f"group size must be >= 1, got {n}")
    if n == 1:
        return stream
    r = stream.base

    def grouped() -> Iterator[int]:
        while True:
            value = 0
            for _ in range(n):
                value = value * r + stream.next_digit()
            yield value

    inner = stream.description or f"base {r} stream"
    return DigitStream(r**n, grouped(), description=f"{inner} grouped by {n}")


def shift_fractional(stream: DigitStream, m: int) -> tuple[list[int], DigitStream]:
    """Multiply by base**m positionally: split off the first m digits.

    Returns (those m digits, the same stream, now positioned after them):
    the digits are the integer part of base**m times the represented
    value, the stream is its fractional part.  m=0 is the identity.
    """
    if m < 0:
        raise ValueError(f"shift must be >= 0, got {m}")
    return stream.take(m), stream


def digit_token(d: int, base: int) -> str:
    """One digit as text: 0-9a-z for bases up to 36, bracketed beyond."""
    if not 0 <= d < base:
        raise ValueError(f"digit {d} out of range for base {base}")
    if base <= 36:
        return "0123456789abcdefghijklmnopqrstuvwxyz"[d]
    return f"[{d}]"


def format_bracket(expansion: DigitExpansion, count: int) -> str:
    """Render `count` digits of an expansion, radix point included.

    Integer digits come first and count toward `count`; for values < 1
    the conventional leading "0" before the point is a placeholder, not a
    counted digit.  Bases above 36 render every digit bracketed, e.g.
    "[3].[14][15][92]".  Consumes from the fractional stream.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    base = expansion.base
    ints = expansion.integer_digits
    int_text = "".join(digit_token(d, base) for d in ints) if ints else "0"
    frac_needed = max(0, count - len(ints))
    frac = expansion.fractional.take(frac_needed)
    frac_text = "".join(digit_token(d, base) for d in frac)
    return f"{int_text}.{frac_text}"
