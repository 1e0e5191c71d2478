"""Exact arithmetic on [0, inf]: nonnegative rationals extended with infinity.

Values are immutable and hashable.  Subtraction is truncated at zero and
made total by the conventions

    inf - q  = inf      (q finite)
    q - inf  = 0
    inf - inf = 0

which are exactly what the residuation formulas downstream need.  The key
algebraic law, tested by property tests, is  a + (b - a) = max(a, b).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

Rationalish = Union[int, str, Fraction, "ExtVal"]


class ExtVal:
    __slots__ = ("_v",)

    def __init__(self, value: Rationalish = 0):
        if isinstance(value, ExtVal):
            self._v = value._v
            return
        if isinstance(value, str):
            s = value.strip()
            if s in ("inf", "Inf", "INF", "oo"):
                self._v = None
                return
            value = Fraction(s)
        v = Fraction(value)
        if v < 0:
            raise ValueError(f"negative value not allowed: {value!r}")
        self._v = v

    # -- constructors ---------------------------------------------------
    @classmethod
    def infinity(cls) -> "ExtVal":
        out = object.__new__(cls)
        out._v = None
        return out

    # -- predicates / accessors -----------------------------------------
    @property
    def is_inf(self) -> bool:
        return self._v is None

    @property
    def frac(self) -> Fraction:
        if self._v is None:
            raise ValueError("infinite value has no finite numerator")
        return self._v

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: "ExtVal") -> "ExtVal":
        other = ExtVal(other)
        if self._v is None or other._v is None:
            return INF
        return ExtVal(self._v + other._v)

    __radd__ = __add__

    def __sub__(self, other: "ExtVal") -> "ExtVal":
        """Truncated difference: max(self - other, 0), total on [0, inf]."""
        other = ExtVal(other)
        if self._v is None:
            return ZERO if other._v is None else INF
        if other._v is None:
            return ZERO
        return ExtVal(max(self._v - other._v, Fraction(0)))

    def __mul__(self, k: Rationalish) -> "ExtVal":
        k = ExtVal(k)
        if self._v is None or k._v is None:
            if self == ZERO or k == ZERO:
                return ZERO
            return INF
        return ExtVal(self._v * k._v)

    __rmul__ = __mul__

    # -- order -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, (ExtVal, int, str, Fraction)):
            return NotImplemented
        return self._v == ExtVal(other)._v

    def __hash__(self) -> int:
        return hash(self._v)

    def __le__(self, other: "ExtVal") -> bool:
        other = ExtVal(other)
        if other._v is None:
            return True
        if self._v is None:
            return False
        return self._v <= other._v

    def __lt__(self, other: "ExtVal") -> bool:
        other = ExtVal(other)
        return self <= other and self != other

    def __ge__(self, other: "ExtVal") -> bool:
        return ExtVal(other) <= self

    def __gt__(self, other: "ExtVal") -> bool:
        return ExtVal(other) < self

    # -- formatting --------------------------------------------------------
    def __repr__(self) -> str:
        return f"ExtVal({fmt_ext(self)!r})"

    def __str__(self) -> str:
        return fmt_ext(self)


INF = ExtVal.infinity()
ZERO = ExtVal(0)


def fmt_ext(v: ExtVal) -> str:
    """Canonical string form: "inf", "n", or "n/d"."""
    v = ExtVal(v)
    if v.is_inf:
        return "inf"
    f = v.frac
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_ext(s: str) -> ExtVal:
    try:
        return ExtVal(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an extended nonnegative rational: {s!r}") from exc


def tri(a: ExtVal, q: ExtVal, c: ExtVal) -> ExtVal:
    """The three-term combination a - q + c used by triangle-style laws.

    Infinity in an outer slot dominates; a finite pair with q = inf
    collapses to 0; otherwise exact a - q + c truncated at zero.
    """
    a, q, c = ExtVal(a), ExtVal(q), ExtVal(c)
    if a.is_inf or c.is_inf:
        return INF
    if q.is_inf:
        return ZERO
    return ExtVal(max(a.frac - q.frac + c.frac, Fraction(0)))
