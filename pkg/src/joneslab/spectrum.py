"""Admissible Jones index values.

Solves t^n + t^-n = 2 on the unit circle, maps each solution to the index
(1+t)^2/t, and assembles the discrete family 4cos^2(pi/n) together with the
continuous branch [4, oo).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .scalars import Scalar, format_scalar, scalar_to_json, to_complex

UNIT_CIRCLE_TOL = 1e-9
REALITY_TOL = 1e-12


class SingularTraceError(ZeroDivisionError):
    """The index map has a pole at t = -1: the normalisation 1/(1+t) blows up."""


def solve_chebyshev_unit(n: int) -> list[complex]:
    """All solutions of t^n + t^-n = 2: the n-th roots of unity.

    The equation rearranges to (t^n - 1)^2 = 0, so each root is a double
    root.  Returns e^{2 pi i k/n} for k = 0..n-1, each checked to leave a
    residual of at most 1e-12.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    roots = []
    for k in range(n):
        t = cmath.exp(2j * math.pi * k / n)
        power = t**n
        residual = abs(power + 1 / power - 2)
        if residual > 1e-12:
            raise ArithmeticError(
                f"root candidate e^(2*pi*i*{k}/{n}) leaves residual {residual:.3e}"
            )
        roots.append(t)
    return roots


Origin = Literal["discrete", "boundary", "continuous"]


@dataclass(frozen=True)
class IndexValue:
    """A single admissible index: the value (1+t)^2/t at a parameter t.

    ``origin`` records which branch produced it; discrete entries carry the
    order n of the unit root.
    """

    t: Scalar
    index: Scalar
    tau: Scalar
    origin: Origin
    n: int | None = None

    def __post_init__(self):
        product = self.index * self.tau
        if isinstance(product, (int, Fraction)):
            if product != 1:
                raise ArithmeticError(f"index * tau = {product}, expected 1")
        elif abs(to_complex(product) - 1) > REALITY_TOL:
            raise ArithmeticError(f"index * tau = {product}, expected 1")
        if self.origin in ("discrete", "boundary"):
            if self.n is None:
                raise ValueError("discrete index values need the order n")
            target = 4 * math.cos(math.pi / self.n) ** 2
            if abs(to_complex(self.index) - target) > REALITY_TOL:
                raise ArithmeticError(
                    f"index at n={self.n} is {self.index}, expected {target}"
                )

    def to_json(self) -> dict:
        return {
            "t": scalar_to_json(self.t),
            "index": scalar_to_json(self.index),
            "tau": scalar_to_json(self.tau),
            "origin": self.origin,
            "n": self.n,
        }


def index_of(t: Scalar, n: int | None = None) -> IndexValue:
    """Map a parameter to its index (1+t)^2/t and trace weight t/(1+t)^2.

    Rational t stays exact.  For t on the unit circle the index is checked to
    be real (within 1e-12) and realised as a float.  Passing ``n`` tags the
    value as the discrete entry of that order and enforces 4cos^2(pi/n).
    """
    if t == 0:
        raise ValueError("index undefined at t = 0")
    if t == -1:
        raise SingularTraceError(
            "t = -1 has no trace normalisation: 1/(1+t) divides by zero"
        )
    if isinstance(t, int):
        t = Fraction(t)
    if isinstance(t, Fraction):
        index: Scalar = (1 + t) ** 2 / t
        tau: Scalar = t / (1 + t) ** 2
    else:
        tc = complex(t)
        if abs(tc + 1) <= REALITY_TOL:
            raise SingularTraceError(
                "t = -1 has no trace normalisation: 1/(1+t) divides by zero"
            )
        index = (1 + tc) ** 2 / tc
        tau = tc / (1 + tc) ** 2
        on_circle = abs(abs(tc) - 1) <= UNIT_CIRCLE_TOL
        if on_circle and abs(index.imag) > REALITY_TOL:
            raise ArithmeticError(
                f"index at unit-circle t={t} has imaginary part {index.imag:.3e}"
            )
        if tc.imag == 0:
            index, tau = index.real, tau.real
        elif on_circle:
            index = index.real
    if n is not None:
        origin: Origin = "boundary" if n == 1 else "discrete"
    else:
        origin = "continuous"
    return IndexValue(t=t, index=index, tau=tau, origin=origin, n=n)


def discrete_index(n: int) -> IndexValue:
    """Index of the principal unit root of order n (the 4cos^2(pi/n) family)."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 2:
        raise SingularTraceError(
            "n = 2 gives t = -1, which has no trace normalisation"
        )
    if n == 1:
        return index_of(Fraction(1), n=1)
    return index_of(cmath.exp(2j * math.pi / n), n=n)


@dataclass(frozen=True)
class SpectrumReport:
    """Discrete indices 4cos^2(pi/n), the boundary value 4, and samples > 4."""

    n_max: int
    discrete: tuple[IndexValue, ...]
    boundary: IndexValue
    continuous: tuple[IndexValue, ...]

    @property
    def strictly_increasing(self) -> bool:
        values = [to_complex(v.index).real for v in self.discrete]
        return all(a < b for a, b in zip(values, values[1:]))

    @property
    def below_four(self) -> bool:
        return all(to_complex(v.index).real < 4 for v in self.discrete)

    @property
    def samples_above_four(self) -> bool:
        return all(to_complex(v.index).real > 4 for v in self.continuous)

    @property
    def passed(self) -> bool:
        return self.strictly_increasing and self.below_four and self.samples_above_four

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "discrete": [v.to_json() for v in self.discrete],
            "boundary": self.boundary.to_json(),
            "continuous_branch": "[4, oo)",
            "continuous_samples": [v.to_json() for v in self.continuous],
            "pass": self.passed,
        }

    def to_csv(self) -> str:
        lines = ["n,t_re,t_im,index"]
        for v in (*self.discrete, self.boundary, *self.continuous):
            tc = to_complex(v.t)
            n_field = "" if v.n is None else str(v.n)
            lines.append(
                f"{n_field},{tc.real!r},{tc.imag!r},{to_complex(v.index).real!r}"
            )
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        lines = [
            f"{'n':>4}  {'t':>24}  {'index':>14}  origin",
            "-" * 58,
        ]
        for v in (*self.discrete, self.boundary, *self.continuous):
            n_field = "" if v.n is None else str(v.n)
            lines.append(
                f"{n_field:>4}  {format_scalar(v.t):>24}  "
                f"{format_scalar(v.index):>14}  {v.origin}"
            )
        lines.append("continuous branch: [4, oo)")
        return "\n".join(lines)


def jones_spectrum(
    n_max: int, samples: tuple[float, ...] = (1.5, 2.0, 10.0)
) -> SpectrumReport:
    """The admissible index values up to order n_max.

    Discrete part: 4cos^2(pi/n) for 3 <= n <= n_max, strictly increasing and
    below 4.  The boundary value 4 (t = 1) joins the branches.  The
    continuous branch is represented by sample parameters t > 1.
    """
    if n_max < 3:
        raise ValueError(f"n_max must be at least 3, got {n_max}")
    discrete = tuple(discrete_index(n) for n in range(3, n_max + 1))
    boundary = discrete_index(1)
    continuous = tuple(index_of(float(s)) for s in samples)
    return SpectrumReport(
        n_max=n_max, discrete=discrete, boundary=boundary, continuous=continuous
    )
