"""Duration sequences over exact rationals and their transformations.

A rhythm is a nonempty ordered sequence of strictly positive
``fractions.Fraction`` durations, counted in an abstract base unit (a
sixteenth note, a thirty-second note, ...).  The unit is a free text
label carried along as metadata; arithmetic never touches it except to
refuse mixing two explicitly different units.

Everything here is exact: no duration or total is ever a float, and
equality tests (in particular the palindrome test behind
non-retrogradability) are exact rational comparisons.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import (
    BadRatio,
    DomainError,
    NoCenter,
    NonIntegerTotal,
    NoVoices,
    ParseError,
    TooShort,
    UnitMismatch,
)

RatioLike = Union[int, str, Fraction]

_TOKEN_RE = re.compile(r"^(\d+)(?:/(\d+))?$")


def as_fraction(value: RatioLike) -> Fraction:
    """Coerce an int, Fraction or ``n``/``n/d`` string to an exact Fraction.

    Floats are refused: they would smuggle rounding error into a library
    whose whole point is exact equality.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _TOKEN_RE.match(value.strip())
        if not m:
            raise ParseError(f"not a rational duration token: {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ParseError(f"zero denominator: {value!r}")
        return Fraction(num, den)
    raise TypeError(f"expected int, Fraction or 'n/d' string, got {type(value).__name__}")


@dataclass(frozen=True)
class Rhythm:
    """Immutable nonempty sequence of positive rational durations."""

    durations: tuple[Fraction, ...]
    unit: str = ""

    def __post_init__(self):
        coerced = tuple(as_fraction(d) for d in self.durations)
        if not coerced:
            raise ValueError("a rhythm needs at least one duration")
        for d in coerced:
            if d <= 0:
                raise ValueError(f"durations must be strictly positive, got {d}")
        object.__setattr__(self, "durations", coerced)

    def __len__(self) -> int:
        return len(self.durations)

    def __iter__(self):
        return iter(self.durations)

    def __str__(self) -> str:
        return format_rhythm(self)


def rhythm(values: Iterable[RatioLike], unit: str = "") -> Rhythm:
    """Convenience constructor accepting ints, Fractions or ``n/d`` strings.

    >>> rhythm([2, 1, 2]).durations
    (Fraction(2, 1), Fraction(1, 1), Fraction(2, 1))
    """
    return Rhythm(tuple(values), unit)


def _merge_units(a: Rhythm, b: Rhythm) -> str:
    """Common unit of two operands; an empty label is compatible with anything."""
    if a.unit and b.unit and a.unit != b.unit:
        raise UnitMismatch(f"units differ: {a.unit!r} vs {b.unit!r}")
    return a.unit or b.unit


def retrograde(r: Rhythm) -> Rhythm:
    """Read the durations from last to first.

    >>> retrograde(rhythm([2, 2, 1])).durations
    (Fraction(1, 1), Fraction(2, 1), Fraction(2, 1))
    """
    return Rhythm(r.durations[::-1], r.unit)


def is_non_retrogradable(r: Rhythm) -> bool:
    """True iff the sequence reads the same in both directions (exact equality)."""
    return r.durations == r.durations[::-1]


def augmentation_kind(ratio: Fraction) -> str:
    """'augmentation' for ratio > 1, 'diminution' for ratio < 1, 'identity' at 1."""
    if ratio > 1:
        return "augmentation"
    if ratio < 1:
        return "diminution"
    return "identity"


def augment(r: Rhythm, ratio: RatioLike) -> Rhythm:
    """Multiply every duration by a constant positive ratio.

    A ratio above 1 is an augmentation, below 1 a diminution.
    """
    q = as_fraction(ratio)
    if q <= 0:
        raise BadRatio(f"ratio must be strictly positive, got {q}")
    return Rhythm(tuple(d * q for d in r.durations), r.unit)


def symmetric_amplification(core: Rhythm, wing: Rhythm) -> Rhythm:
    """Wrap core with wing on the left and the wing's retrograde on the right.

    Preserves non-retrogradability of the core for any wing.

    >>> symmetric_amplification(rhythm([2, 1, 2]), rhythm([2, 2])).durations
    (Fraction(2, 1), Fraction(2, 1), Fraction(2, 1), Fraction(1, 1), Fraction(2, 1), Fraction(2, 1), Fraction(2, 1))
    """
    unit = _merge_units(core, wing)
    return Rhythm(wing.durations + core.durations + wing.durations[::-1], unit)


def eliminate_extremes(r: Rhythm, k: int) -> Rhythm:
    """Drop the first k and last k durations; inverse of amplification by a k-long wing."""
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if 2 * k >= len(r):
        raise TooShort(f"cannot strip {k} from each side of {len(r)} durations")
    if k == 0:
        return r
    return Rhythm(r.durations[k:-k], r.unit)


def scale_central(r: Rhythm, ratio: RatioLike) -> Rhythm:
    """Multiply the middle duration of an odd-length rhythm by a positive ratio."""
    q = as_fraction(ratio)
    if q <= 0:
        raise BadRatio(f"ratio must be strictly positive, got {q}")
    if len(r) % 2 == 0:
        raise NoCenter(f"no central value in an even-length rhythm ({len(r)} durations)")
    mid = len(r) // 2
    durations = list(r.durations)
    durations[mid] *= q
    return Rhythm(tuple(durations), r.unit)


def total_duration(r: Rhythm) -> Fraction:
    """Exact sum of the durations in base units."""
    return sum(r.durations, Fraction(0))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_prime_total(r: Rhythm) -> bool:
    """Primality of the total duration, which must be a whole number of units.

    >>> is_prime_total(rhythm([2, 1, 2]))
    True
    """
    total = total_duration(r)
    if total.denominator != 1:
        raise NonIntegerTotal(f"total duration {total} is not a whole number of units")
    return _is_prime(total.numerator)


class AugmentationChain(NamedTuple):
    """A decomposition r = prefix ++ ratios[0]*prefix ++ ratios[1]*prefix ++ ..."""

    prefix: Rhythm
    ratios: tuple[Fraction, ...]


def detect_augmentation_chain(r: Rhythm) -> Optional[AugmentationChain]:
    """Decompose r into a prefix followed by scaled copies of that prefix.

    Each later block must be the prefix multiplied by a single ratio, and
    that ratio must differ from 1 (a bare repetition of the prefix is not
    an augmentation).  Among valid decompositions the block count is
    maximised, i.e. the prefix is as short as possible.

    >>> chain = detect_augmentation_chain(rhythm([4, 4, 2, 2, 1, 1]))
    >>> chain.ratios
    (Fraction(1, 2), Fraction(1, 4))
    """
    n = len(r)
    for length in range(1, n // 2 + 1):
        if n % length:
            continue
        prefix = r.durations[:length]
        ratios = []
        for start in range(length, n, length):
            block = r.durations[start:start + length]
            q = block[0] / prefix[0]
            if q == 1 or any(block[i] != prefix[i] * q for i in range(length)):
                ratios = None
                break
            ratios.append(q)
        if ratios is not None:
            return AugmentationChain(Rhythm(prefix, r.unit), tuple(ratios))
    return None


@dataclass(frozen=True)
class SequenceShape:
    """Shape flags for one extracted subsequence of durations."""

    values: tuple[Fraction, ...]
    constant: bool
    increasing: bool
    decreasing: bool
    unimodal: bool


@dataclass(frozen=True)
class InterleaveProfile:
    """Shapes of the odd-position and even-position subsequences (1-based)."""

    odd: SequenceShape
    even: SequenceShape


def _shape(values: tuple[Fraction, ...]) -> SequenceShape:
    n = len(values)
    constant = all(v == values[0] for v in values)
    increasing = n >= 2 and all(a < b for a, b in zip(values, values[1:]))
    decreasing = n >= 2 and all(a > b for a, b in zip(values, values[1:]))
    unimodal = False
    if n >= 3:
        peak = max(range(n), key=lambda i: values[i])
        if 0 < peak < n - 1:
            up = all(a < b for a, b in zip(values[: peak + 1], values[1 : peak + 1]))
            down = all(a > b for a, b in zip(values[peak:], values[peak + 1 :]))
            unimodal = up and down
    return SequenceShape(values, constant, increasing, decreasing, unimodal)


def interleave_profile(r: Rhythm) -> InterleaveProfile:
    """Split into 1-based odd and even positions and describe each subsequence.

    >>> p = interleave_profile(rhythm([1, 3, 2, 3, 3, 3, 2, 3, 1, 3]))
    >>> p.odd.unimodal, p.even.constant
    (True, True)
    """
    if len(r) < 2:
        raise TooShort("interleave profile needs at least two durations")
    return InterleaveProfile(
        odd=_shape(r.durations[0::2]),
        even=_shape(r.durations[1::2]),
    )


@dataclass(frozen=True)
class Voice:
    """One canon voice: entry delay plus augmentation ratio for the subject."""

    delay: Fraction
    ratio: Fraction
    onsets: tuple[Fraction, ...]
    end: Fraction


@dataclass(frozen=True)
class CanonSchedule:
    """Onset schedule of a rhythmic canon.

    ``events`` merges every voice in time order as (onset, voice index,
    scaled duration) triples, ties broken by voice index.
    """

    subject: Rhythm
    voices: tuple[Voice, ...]
    events: tuple[tuple[Fraction, int, Fraction], ...] = field(compare=False)


def build_canon(
    subject: Rhythm, voices: Sequence[tuple[RatioLike, RatioLike]]
) -> CanonSchedule:
    """Schedule the subject in several voices, each delayed and scaled.

    Voice onsets are delay + ratio * (prefix sum of subject durations);
    pitch content is out of scope, the canon lives in the durations only.

    >>> sched = build_canon(rhythm([2, 1, 2]), [(0, 1), (1, "3/2")])
    >>> sched.voices[1].onsets
    (Fraction(1, 1), Fraction(4, 1), Fraction(11, 2))
    """
    if not voices:
        raise NoVoices("a canon needs at least one voice")
    prefix = [Fraction(0)]
    for d in subject.durations:
        prefix.append(prefix[-1] + d)
    built = []
    for delay_in, ratio_in in voices:
        delay = as_fraction(delay_in)
        ratio = as_fraction(ratio_in)
        if delay < 0:
            raise DomainError(f"voice delay must be nonnegative, got {delay}")
        if ratio <= 0:
            raise BadRatio(f"voice ratio must be strictly positive, got {ratio}")
        onsets = tuple(delay + ratio * p for p in prefix[:-1])
        built.append(Voice(delay, ratio, onsets, delay + ratio * prefix[-1]))
    events = sorted(
        (onset, v, voice.ratio * d)
        for v, voice in enumerate(built)
        for onset, d in zip(voice.onsets, subject.durations)
    )
    return CanonSchedule(subject, tuple(built), tuple(events))


def parse_rhythm(text: str) -> Rhythm:
    """Parse whitespace-separated ``n`` or ``n/d`` tokens, optional ``@unit=<label>``.

    The parse is strict: no decimals and no locale-specific separators.

    >>> parse_rhythm("1 1 1 3/2 @unit=double croche").unit
    'double croche'
    """
    unit = ""
    body = text
    if "@unit=" in text:
        body, _, unit = text.partition("@unit=")
        unit = unit.strip()
        if not unit:
            raise ParseError("empty unit label after @unit=")
    tokens = body.split()
    if not tokens:
        raise ParseError("empty rhythm text")
    durations = []
    for tok in tokens:
        if not _TOKEN_RE.match(tok):
            raise ParseError(f"not a rational duration token: {tok!r}")
        value = as_fraction(tok)
        if value <= 0:
            raise ParseError(f"durations must be strictly positive: {tok!r}")
        durations.append(value)
    return Rhythm(tuple(durations), unit)


def format_rhythm(r: Rhythm, with_unit: bool = True) -> str:
    """Canonical text form, re-read by :func:`parse_rhythm`.

    >>> format_rhythm(rhythm(["3/2", 2]))
    '3/2 2'
    """
    body = " ".join(str(d) for d in r.durations)
    if with_unit and r.unit:
        return f"{body} @unit={r.unit}"
    return body
