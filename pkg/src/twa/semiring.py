"""Exact scalar arithmetic for the tropical semirings.

Finite weights are exact rationals stored as plain ``int`` or
``fractions.Fraction``; the semiring zero carries no value and is represented
by ``None`` everywhere (an absent arc *is* the zero weight).  Weights of the
pair semiring are 2-tuples whose components are both finite, or ``None`` for
the pair zero; a half-infinite pair is not representable on purpose.

No floating point is used anywhere: comparisons against 0 made by the
decision procedures are boundary-exact and would be corrupted by rounding.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FormatError, TagMismatchError

Rational = int | Fraction
Weight = Rational | None
PairWeight = tuple[Rational, Rational] | None


def as_value(x: Rational) -> Rational:
    """Collapse whole fractions to int; keeps equality/hashing tidy."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def is_rational(x) -> bool:
    """True for the finite weight domain: int (but not bool) or Fraction."""
    return type(x) is int or isinstance(x, Fraction)


class Semiring:
    """Arithmetic for one semiring tag.

    Instances are stateless singletons; ``plus``/``times`` work on raw weight
    values with ``None`` as the zero.
    """

    tag: str = ""
    one: object = None

    def plus(self, x, y):
        raise NotImplementedError

    def times(self, x, y):
        raise NotImplementedError

    def is_weight(self, x) -> bool:
        raise NotImplementedError

    def __repr__(self):
        return f"<semiring {self.tag}>"


class _MaxPlus(Semiring):
    tag = "max-plus"
    one = 0

    def plus(self, x, y):
        if x is None:
            return y
        if y is None:
            return x
        return x if x >= y else y

    def times(self, x, y):
        if x is None or y is None:
            return None
        return x + y

    def is_weight(self, x):
        return x is None or is_rational(x)


class _MinPlus(_MaxPlus):
    tag = "min-plus"

    def plus(self, x, y):
        if x is None:
            return y
        if y is None:
            return x
        return x if x <= y else y


class _Boolean(_MaxPlus):
    # The Boolean semiring is the {zero, 0} subsemiring of max-plus.
    tag = "boolean"


class _MaxPlusPair(Semiring):
    tag = "max-plus-pair"
    one = (0, 0)

    def plus(self, x, y):
        if x is None:
            return y
        if y is None:
            return x
        return (
            x[0] if x[0] >= y[0] else y[0],
            x[1] if x[1] >= y[1] else y[1],
        )

    def times(self, x, y):
        if x is None or y is None:
            return None
        return (x[0] + y[0], x[1] + y[1])

    def is_weight(self, x):
        return x is None or (
            type(x) is tuple
            and len(x) == 2
            and is_rational(x[0])
            and is_rational(x[1])
        )


MAX_PLUS = _MaxPlus()
MIN_PLUS = _MinPlus()
BOOLEAN = _Boolean()
MAX_PLUS_PAIR = _MaxPlusPair()

SEMIRINGS = {s.tag: s for s in (MAX_PLUS, MIN_PLUS, BOOLEAN, MAX_PLUS_PAIR)}


def semiring_for(tag) -> Semiring:
    """Resolve a tag string (or pass a Semiring through); reject anything else."""
    if isinstance(tag, Semiring):
        return tag
    try:
        return SEMIRINGS[tag]
    except (KeyError, TypeError):
        raise TagMismatchError(f"unknown semiring tag {tag!r}") from None


_SCALAR_TAGS = ("max-plus", "min-plus", "boolean")


def oplus(x: Weight, y: Weight, tag) -> Weight:
    """Semiring addition (max, min, or logical-or) with zero as neutral element."""
    sr = semiring_for(tag)
    if sr.tag not in _SCALAR_TAGS:
        raise TagMismatchError(f"oplus is not defined for tag {sr.tag!r}")
    return sr.plus(x, y)


def otimes(x: Weight, y: Weight, tag) -> Weight:
    """Semiring multiplication (rational addition) with zero absorbing."""
    sr = semiring_for(tag)
    if sr.tag not in _SCALAR_TAGS:
        raise TagMismatchError(f"otimes is not defined for tag {sr.tag!r}")
    return sr.times(x, y)


def negate_weight(x: Weight) -> Weight:
    """The isomorphism between max-plus and min-plus: x -> -x, zero -> zero."""
    if x is None:
        return None
    if not is_rational(x):
        raise TagMismatchError(f"cannot negate non-scalar weight {x!r}")
    return -x


def boolean_projection(x) -> Weight:
    """Canonical morphism onto the Boolean semiring: zero -> zero, finite -> 0."""
    return None if x is None else 0


# ---------------------------------------------------------------------------
# Weight literals.
#
# Grammar (shared by the .twa file format and the command line): an optional
# sign followed by an integer, a fraction `p/q`, or a decimal with at most
# nine fractional digits.  Decimals are converted exactly.  There is no
# literal for the semiring zero; absence denotes zero.
# ---------------------------------------------------------------------------

_FINITE_RE = re.compile(r"[+-]?(?:\d+/\d+|\d+(?:\.\d{1,9})?)\Z")


def parse_finite(text: str) -> Rational:
    """Parse a finite scalar weight literal; raises FormatError on bad syntax."""
    if not _FINITE_RE.match(text):
        raise FormatError(f"bad weight literal {text!r}")
    if "/" in text:
        num_text, den_text = text.split("/")
        den = int(den_text)
        if den == 0:
            raise FormatError(f"zero denominator in weight literal {text!r}")
        return as_value(Fraction(int(num_text), den))
    if "." in text:
        return as_value(Fraction(text))
    return int(text)


def parse_weight(text: str, tag) -> Rational | tuple[Rational, Rational]:
    """Parse a (nonzero) weight literal for the given tag; pairs are `w1,w2`."""
    sr = semiring_for(tag)
    if sr.tag == "max-plus-pair":
        parts = text.split(",")
        if len(parts) != 2:
            raise FormatError(f"pair weight must be `w1,w2`, got {text!r}")
        return (parse_finite(parts[0]), parse_finite(parts[1]))
    return parse_finite(text)


def format_finite(value: Rational) -> str:
    """Canonical text for a finite scalar weight: integer or `p/q` in lowest terms."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def format_weight(value, tag) -> str:
    """Canonical text for a (nonzero) weight of the given tag."""
    sr = semiring_for(tag)
    if sr.tag == "max-plus-pair":
        return f"{format_finite(value[0])},{format_finite(value[1])}"
    return format_finite(value)
