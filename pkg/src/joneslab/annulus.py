"""The annulus cluster algebra and its modulus parameter.

The rank-2 seed with exchange matrix [[0,2],[-2,0]] encodes the annulus; the
casimir element x1*x4 - x2*x3 collapses to (x1^2 + 1 + x2^2)/(x1*x2), and the
modulus-t resolution of (x1, x2) makes the casimir equal (t + 1/t)/2.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .cluster import Seed
from .laurent import LaurentPoly, laurent_gens
from .scalars import Scalar, approx_eq, scalar_to_json, to_complex

ANNULUS_MATRIX = ((0, 2), (-2, 0))


@dataclass(frozen=True)
class TeichmullerParam:
    """The conformal modulus t of an annulus, t = R/r for radii r < R.

    Direct values may be any nonzero scalar other than -1; radii give the
    classical real range t > 1.
    """

    t: Scalar

    def __post_init__(self):
        if self.t == 0 or self.t == -1:
            raise ValueError(f"modulus must avoid 0 and -1, got {self.t}")

    @classmethod
    def from_radii(cls, r: Scalar, R: Scalar) -> TeichmullerParam:
        if not (0 < r < R):
            raise ValueError(f"radii need 0 < r < R, got r={r}, R={R}")
        if isinstance(r, (int, Fraction)) and isinstance(R, (int, Fraction)):
            return cls(Fraction(R) / Fraction(r))
        return cls(float(R) / float(r))

    @classmethod
    def from_value(cls, t: Scalar) -> TeichmullerParam:
        return cls(t)


def _modulus(t: TeichmullerParam | Scalar) -> Scalar:
    if isinstance(t, TeichmullerParam):
        return t.t
    return TeichmullerParam(t).t


def annulus_seed() -> Seed:
    """The initial seed (x1, x2) with exchange matrix [[0,2],[-2,0]]."""
    return Seed.initial([list(row) for row in ANNULUS_MATRIX])


def casimir(x1: LaurentPoly | None = None, x2: LaurentPoly | None = None) -> LaurentPoly:
    """The element x1*x4 - x2*x3, with x3, x4 from the exchange relations.

    x3 and x4 are produced by exact division: x3 = (1 + x2^2)/x1 and
    x4 = (1 + x3^2)/x2.  The default arguments are the generators themselves,
    giving the symbolic value (x1^2 + 1 + x2^2)/(x1*x2).
    """
    if (x1 is None) != (x2 is None):
        raise ValueError("provide both cluster variables or neither")
    if x1 is None:
        x1, x2 = laurent_gens(("x1", "x2"))
    one = LaurentPoly.one(x1.variables)
    x3 = (one + x2 * x2).exact_div(x1)
    x4 = (one + x3 * x3).exact_div(x2)
    return x1 * x4 - x2 * x3


@dataclass(frozen=True)
class PennerPoint:
    """Resolved coordinates (x1, x2) at modulus t.

    Construction enforces the defining identities x1*x2 = 2t and
    x1^2 + x2^2 = t^2 to 1e-10 relative.
    """

    t: Scalar
    x1: Scalar
    x2: Scalar

    def __post_init__(self):
        if not approx_eq(self.x1 * self.x2, 2 * self.t, 1e-10):
            raise ArithmeticError(
                f"x1*x2 = {self.x1 * self.x2} differs from 2t = {2 * self.t}"
            )
        if not approx_eq(self.x1**2 + self.x2**2, self.t**2, 1e-10):
            raise ArithmeticError(
                f"x1^2 + x2^2 = {self.x1**2 + self.x2**2} differs from t^2"
            )


def penner_resolution(t: TeichmullerParam | Scalar) -> PennerPoint:
    """Solve for (x1, x2) at modulus t.

    x1 = (sqrt(2)/2) sqrt(t^2 + t sqrt(t^2 - 16)) and x2 likewise with the
    inner sign flipped, using principal square roots.  The principal branches
    only promise (x1*x2)^2 = 4t^2, so x2's sign is normalised to make
    x1*x2 = 2t itself hold (x1^2 + x2^2 = t^2 is sign-blind).
    """
    tc = to_complex(_modulus(t))
    inner = cmath.sqrt(tc * tc - 16)
    half_sqrt2 = cmath.sqrt(2) / 2
    x1 = half_sqrt2 * cmath.sqrt(tc * tc + tc * inner)
    x2 = half_sqrt2 * cmath.sqrt(tc * tc - tc * inner)
    if not approx_eq(x1 * x2, 2 * tc, 1e-8):
        x2 = -x2
    if x1.imag == 0 and x2.imag == 0:
        return PennerPoint(t=_modulus(t), x1=x1.real, x2=x2.real)
    return PennerPoint(t=_modulus(t), x1=x1, x2=x2)


@dataclass(frozen=True)
class CasimirCheck:
    """Comparison of the casimir at a resolved point against (t + 1/t)/2."""

    point: PennerPoint
    casimir_value: Scalar
    halfsum: Scalar
    tol: float
    passed: bool

    def to_json(self) -> dict:
        return {
            "t": scalar_to_json(self.point.t),
            "x1": scalar_to_json(self.point.x1),
            "x2": scalar_to_json(self.point.x2),
            "casimir": scalar_to_json(self.casimir_value),
            "halfsum": scalar_to_json(self.halfsum),
            "pass": self.passed,
        }


def verify_casimir_halfsum(
    t: TeichmullerParam | Scalar, tol: float = 1e-10
) -> CasimirCheck:
    """Resolve (x1, x2) at t and compare the casimir with (t + 1/t)/2."""
    point = penner_resolution(t)
    value = casimir().evaluate({"x1": point.x1, "x2": point.x2})
    tc = to_complex(point.t)
    halfsum = (tc + 1 / tc) / 2
    if halfsum.imag == 0:
        halfsum = halfsum.real
    return CasimirCheck(
        point=point,
        casimir_value=value,
        halfsum=halfsum,
        tol=tol,
        passed=approx_eq(value, halfsum, tol),
    )
