"""Scalar values shared across the package.

Two scalar modes are used everywhere: exact (Python ``int`` / ``Fraction``,
always in lowest terms) and inexact (``float`` / ``complex``).  Helpers here
parse scalars from wire/CLI strings, render them for JSON and tables, and
take exact square roots when they exist.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction

Scalar = int | Fraction | float | complex


def is_exact(value: Scalar) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def to_complex(value: Scalar) -> complex:
    if isinstance(value, Fraction):
        return complex(value.numerator / value.denominator)
    return complex(value)


def exact_sqrt(value: int | Fraction) -> Fraction | None:
    """Principal square root of a nonnegative rational, or None if irrational."""
    f = Fraction(value)
    if f < 0:
        return None
    rn = math.isqrt(f.numerator)
    rd = math.isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return Fraction(rn, rd)
    return None


def unit_root(n: int, k: int = 1) -> complex:
    """The point e^{2 pi i k / n} on the unit circle."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return cmath.exp(2j * math.pi * k / n)


def parse_scalar(raw) -> Scalar:
    """Parse a scalar from its wire form.

    Accepted forms: plain numbers, a ``[re, im]`` pair, and strings holding an
    integer ("4"), a rational ("9/2"), a float ("2.5"), a Python complex
    literal ("0.5+0.8j"), or ``unit:n`` meaning e^{2 pi i / n}.
    """
    if isinstance(raw, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(raw, (int, float, complex, Fraction)):
        return raw
    if isinstance(raw, (list, tuple)):
        if len(raw) != 2:
            raise ValueError(f"complex pair must have two entries, got {raw!r}")
        return complex(float(raw[0]), float(raw[1]))
    if isinstance(raw, str):
        text = raw.strip()
        if text.startswith("unit:"):
            return unit_root(int(text.split(":", 1)[1]))
        if "/" in text:
            return Fraction(text)
        try:
            return int(text)
        except ValueError:
            pass
        try:
            return float(text)
        except ValueError:
            pass
        try:
            return complex(text.replace(" ", ""))
        except ValueError:
            pass
        raise ValueError(f"cannot parse scalar from {text!r}")
    raise ValueError(f"cannot parse scalar from {raw!r}")


def scalar_to_json(value: Scalar):
    """JSON form: exact values as int or "p/q" string, complex as [re, im]."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return value
    if isinstance(value, complex):
        return [value.real, value.imag]
    raise TypeError(f"not a scalar: {value!r}")


def format_scalar(value: Scalar, digits: int = 9) -> str:
    """Human-readable rendering with the given number of significant digits."""
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, complex):
        if value.imag == 0:
            return f"{value.real:.{digits}g}"
        sign = "+" if value.imag >= 0 else "-"
        return f"{value.real:.{digits}g}{sign}{abs(value.imag):.{digits}g}i"
    return f"{value:.{digits}g}"


def approx_eq(a: Scalar, b: Scalar, tol: float) -> bool:
    """Relative comparison: |a - b| <= tol * max(1, |a|, |b|)."""
    ca, cb = to_complex(a), to_complex(b)
    return abs(ca - cb) <= tol * max(1.0, abs(ca), abs(cb))


def require_finite(value: complex) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError("non-finite value in result")
    return value
