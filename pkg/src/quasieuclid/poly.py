"""Exact elements of Q[x] in normalized fraction form, with the order that
makes x larger than every integer.

An element is an integer polynomial over a positive integer denominator,
kept in lowest terms (the gcd of the coefficients is coprime to the
denominator).  Coefficients are arbitrary-precision integers; nothing here
ever touches floating point.  Conventions: the zero polynomial has degree
-1 and leading coefficient 0.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from itertools import zip_longest
from typing import Iterable, Sequence


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _content(coeffs: Iterable[int]) -> int:
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    return g


@total_ordering
class RingElement:
    """A polynomial h/n with h integer and n a positive integer.

    Instances are immutable, hashable, and always in normal form; equality
    is equality of normal forms.  Ordering is the discrete order: an
    element is positive exactly when its leading coefficient is.  Mixed
    arithmetic and comparison with plain ints is supported.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable[int | Fraction] = (), den: int = 1):
        if not isinstance(den, int) or isinstance(den, bool):
            raise TypeError(f"denominator must be an int, got {type(den).__name__}")
        if den == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        raw = list(coeffs)
        scale = 1
        for c in raw:
            if isinstance(c, Fraction):
                scale = scale * c.denominator // math.gcd(scale, c.denominator)
            elif not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")
        if scale != 1:
            num = [int(c * scale) for c in raw]
            den *= scale
        else:
            num = [int(c) for c in raw]
        if den < 0:
            den = -den
            num = [-c for c in num]
        tup = _strip(num)
        if not tup:
            self._num: tuple[int, ...] = ()
            self._den = 1
            return
        g = math.gcd(_content(tup), den)
        if g > 1:
            tup = tuple(c // g for c in tup)
            den //= g
        self._num = tup
        self._den = den

    # -- structure ---------------------------------------------------------

    @property
    def num(self) -> tuple[int, ...]:
        """Integer coefficients, constant term first."""
        return self._num

    @property
    def den(self) -> int:
        return self._den

    @property
    def degree(self) -> int:
        return len(self._num) - 1

    @property
    def lc(self) -> Fraction:
        """Leading coefficient as an exact rational; 0 for the zero element."""
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[-1], self._den)

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def is_integer(self) -> bool:
        """True when the element lies in Z (a constant with denominator 1)."""
        return self._den == 1 and len(self._num) <= 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._num):
            return Fraction(self._num[i], self._den)
        return Fraction(0)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "RingElement | None":
        if isinstance(value, RingElement):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return RingElement((value,))
        if isinstance(value, Fraction):
            return RingElement((value,))
        return None

    def __add__(self, other) -> "RingElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        g = math.gcd(self._den, o._den)
        l = self._den // g * o._den
        fa, fb = l // self._den, l // o._den
        coeffs = [fa * x + fb * y for x, y in zip_longest(self._num, o._num, fillvalue=0)]
        return RingElement(coeffs, l)

    __radd__ = __add__

    def __sub__(self, other) -> "RingElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RingElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "RingElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return ZERO
        out = [0] * (len(self._num) + len(o._num) - 1)
        for i, a in enumerate(self._num):
            if a:
                for j, b in enumerate(o._num):
                    out[i + j] += a * b
        return RingElement(out, self._den * o._den)

    __rmul__ = __mul__

    def __neg__(self) -> "RingElement":
        e = RingElement.__new__(RingElement)
        e._num = tuple(-c for c in self._num)
        e._den = self._den
        return e

    def __pos__(self) -> "RingElement":
        return self

    def __abs__(self) -> "RingElement":
        return -self if self.lc < 0 else self

    def __pow__(self, exponent: int) -> "RingElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base, e = ONE, self, exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self._num)

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self._num[0] if self._num else 0

    # -- order and identity ---------------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).lc < 0

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    # -- presentation ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"RingElement({list(self._num)}, {self._den})"

    def __str__(self) -> str:
        return format_element(self)

    def to_json(self) -> dict:
        return {"num": list(self._num), "den": self._den}

    @classmethod
    def from_json(cls, data) -> "RingElement":
        return cls(tuple(data["num"]), data["den"])


ZERO = RingElement()
ONE = RingElement((1,))
X = RingElement((0, 1))


def as_element(value) -> RingElement:
    """Coerce an int, Fraction, or RingElement to a RingElement."""
    e = RingElement._coerce(value)
    if e is None:
        raise TypeError(f"cannot interpret {type(value).__name__} as a ring element")
    return e


def compare(a: RingElement, b: RingElement) -> int:
    """Sign of a - b in the discrete order: -1, 0, or +1."""
    t = (as_element(a) - as_element(b)).lc
    return (t > 0) - (t < 0)


def qdiv(q: RingElement, r: RingElement) -> tuple[RingElement, RingElement]:
    """Classical division in Q[x]: q = quot*r + rem with deg rem < deg r."""
    if r.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    dr = r.degree
    if q.degree < dr:
        return ZERO, q
    rem = [Fraction(c, q.den) for c in q.num]
    rfrac = [Fraction(c, r.den) for c in r.num]
    lead = rfrac[-1]
    quot = [Fraction(0)] * (q.degree - dr + 1)
    for i in range(q.degree - dr, -1, -1):
        c = rem[i + dr] / lead
        if c:
            quot[i] = c
            for j in range(dr + 1):
                rem[i + j] -= c * rfrac[j]
    return RingElement(quot), RingElement(rem[:dr])


# --------------------------------------------------------------------------
# Text form.  The parser lives in syntax.py; printing is defined here so
# elements know how to render themselves.


def _format_poly(num: Sequence[int]) -> str:
    if not num:
        return "0"
    parts: list[tuple[str, str]] = []
    for i in range(len(num) - 1, -1, -1):
        c = num[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "x" if i == 1 else f"x^{i}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_element(e: RingElement) -> str:
    """Render in the CLI syntax; parse_element inverts this exactly."""
    body = _format_poly(e.num)
    if e.den == 1:
        return body
    if " " in body:
        return f"({body})/{e.den}"
    return f"{body}/{e.den}"
