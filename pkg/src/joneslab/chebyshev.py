"""Chebyshev polynomials of the first kind and canonical-basis elements.

T_n is built from the recurrence T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}
with exact integer coefficients.  The half-sum identity
T_n((t + 1/t)/2) = (t^n + t^-n)/2 is checked entirely inside Z[t^{+-1}] by
scaling away the powers of two.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cluster import rank2_sequence
from .laurent import LaurentPoly


@dataclass(frozen=True)
class ChebyshevPoly:
    degree: int
    coefficients: tuple[int, ...]  # constant term first

    def at(self, z):
        """Evaluate by Horner's rule; works over any ring value with +, *."""
        it = reversed(self.coefficients)
        result = next(it) * _one_like(z)
        for coef in it:
            result = result * z + coef * _one_like(z)
        return result

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1]

    def to_json(self) -> list[int]:
        return list(self.coefficients)


def _one_like(z):
    if isinstance(z, LaurentPoly):
        return LaurentPoly.one(z.variables)
    return type(z)(1)


@lru_cache(maxsize=None)
def chebyshev_T(n: int) -> ChebyshevPoly:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return ChebyshevPoly(0, (1,))
    if n == 1:
        return ChebyshevPoly(1, (0, 1))
    prev2 = chebyshev_T(n - 2).coefficients
    prev1 = chebyshev_T(n - 1).coefficients
    coefs = [0] * (n + 1)
    for i, c in enumerate(prev1):
        coefs[i + 1] += 2 * c
    for i, c in enumerate(prev2):
        coefs[i] -= c
    return ChebyshevPoly(n, tuple(coefs))


def verify_halfsum_identity(n: int) -> bool:
    """Exact check of T_n((t + 1/t)/2) = (t^n + t^-n)/2 for n >= 1.

    Both sides are multiplied by 2^n so all arithmetic stays in Z[t^{+-1}]:
    sum_k c_k 2^{n-k} (t + 1/t)^k must equal 2^{n-1} (t^n + t^-n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    t = LaurentPoly.variable(("t",), "t")
    halfsum_base = t + LaurentPoly.monomial(("t",), (-1,))
    lhs = LaurentPoly.zero(("t",))
    power = LaurentPoly.one(("t",))
    for k, coef in enumerate(chebyshev_T(n).coefficients):
        if coef:
            lhs = lhs + coef * 2 ** (n - k) * power
        power = power * halfsum_base
    rhs = 2 ** (n - 1) * (
        LaurentPoly.monomial(("t",), (n,)) + LaurentPoly.monomial(("t",), (-n,))
    )
    return lhs == rhs


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def verify_composition(m: int, n: int) -> bool:
    """Exact check of the semigroup law T_m(T_n(x)) = T_{mn}(x) over Z[x]."""
    if m < 0 or n < 0:
        raise ValueError("degrees must be nonnegative")
    inner = list(chebyshev_T(n).coefficients)
    composed = [0]
    for coef in reversed(chebyshev_T(m).coefficients):
        composed = _poly_mul(composed, inner)
        composed[0] += coef
    while len(composed) > 1 and composed[-1] == 0:
        composed.pop()
    return tuple(composed) == chebyshev_T(m * n).coefficients


@dataclass(frozen=True)
class MonomialPair:
    """Basis element x_i^p x_{i+1}^q with p, q >= 0."""

    i: int
    p: int
    q: int

    def __post_init__(self):
        if self.i < 1 or self.p < 0 or self.q < 0:
            raise ValueError("need i >= 1 and p, q >= 0")


@dataclass(frozen=True)
class ChebyshevOfCasimir:
    """Basis element T_n applied to the casimir x1 x4 - x2 x3, n >= 1."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need n >= 1")


BasisElement = MonomialPair | ChebyshevOfCasimir


def basis_expand(element: BasisElement, depth: int = 12) -> LaurentPoly:
    """Expand a basis element of the b = c = 2 algebra in (x1, x2).

    ``depth`` bounds the mutation steps available for reaching x_i; the
    variable x_j needs j - 2 steps, so MonomialPair(i, ...) requires
    i + 1 <= depth + 2.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    if isinstance(element, MonomialPair):
        needed = element.i + 1
        if needed > depth + 2:
            raise ValueError(
                f"x{needed} is not reachable within mutation depth {depth}"
            )
        seq = rank2_sequence((2, 2), max(needed, 2))
        return seq[element.i - 1] ** element.p * seq[element.i] ** element.q
    if isinstance(element, ChebyshevOfCasimir):
        x1, x2, x3, x4 = rank2_sequence((2, 2), 4)
        z = x1 * x4 - x2 * x3
        return chebyshev_T(element.n).at(z)
    raise TypeError(f"not a basis element: {element!r}")
