"""Exact multivariate Laurent polynomials over the integers.

The value type for all cluster variables.  Terms map integer exponent
vectors (entries may be negative) to nonzero arbitrary-precision integer
coefficients.  Everything is immutable; equality is structural.

Exact division is the one nontrivial operation: ``exact_div`` shifts both
operands by monomials into the ordinary polynomial ring, runs single-divisor
multivariate division under the graded-lexicographic order, and demands a
zero remainder.  Failure raises :class:`NotLaurentError`, which is itself a
meaningful signal (a would-be counterexample to Laurent-ness).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .scalars import Scalar, require_finite

Exponents = tuple[int, ...]


class NotLaurentError(ArithmeticError):
    """No exact Laurent-polynomial quotient exists."""


def _grlex(exponents: Exponents):
    return (sum(exponents), exponents)


class LaurentPoly:
    """An element of Z[x1^{+-1}, ..., xn^{+-1}].

    ``terms`` is kept canonically sorted (graded lex, descending) with no
    zero coefficients, so equality and hashing are plain tuple comparisons.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponents, int]):
        variables = tuple(variables)
        cleaned = {}
        for exps, coef in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError(
                    f"exponent vector {exps} does not match {len(variables)} variables"
                )
            coef = int(coef)
            if coef != 0:
                cleaned[exps] = cleaned.get(exps, 0) + coef
        object.__setattr__(self, "variables", variables)
        object.__setattr__(
            self,
            "terms",
            tuple(
                (e, c)
                for e, c in sorted(cleaned.items(), key=lambda t: _grlex(t[0]), reverse=True)
                if c != 0
            ),
        )

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> LaurentPoly:
        return cls(variables, {})

    @classmethod
    def one(cls, variables: Iterable[str]) -> LaurentPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): 1})

    @classmethod
    def constant(cls, variables: Iterable[str], value: int) -> LaurentPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: Iterable[str], name: str) -> LaurentPoly:
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): 1})

    @classmethod
    def monomial(cls, variables: Iterable[str], exponents: Exponents, coef: int = 1) -> LaurentPoly:
        return cls(variables, {tuple(exponents): coef})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def max_abs_exponent(self) -> int:
        """Largest |exponent| over all terms and variables; 0 for constants."""
        best = 0
        for exps, _ in self.terms:
            for e in exps:
                if abs(e) > best:
                    best = abs(e)
        return best

    def has_positive_coefficients(self) -> bool:
        return bool(self.terms) and all(c > 0 for _, c in self.terms)

    def constant_value(self) -> int:
        """Value of the constant term (0 if absent)."""
        zero = (0,) * len(self.variables)
        for exps, coef in self.terms:
            if exps == zero:
                return coef
        return 0

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.variables, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, self.terms))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly.constant(self.variables, other)
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise ValueError(
                    f"variable lists differ: {self.variables} vs {other.variables}"
                )
            return other
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        out = {e: c for e, c in self.terms}
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        out: dict[Exponents, int] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return LaurentPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if self.is_monomial and abs(self.terms[0][1]) == 1:
                exps, coef = self.terms[0]
                inv = LaurentPoly.monomial(self.variables, tuple(-e for e in exps), coef)
                return inv ** (-n)
            raise NotLaurentError("negative power of a non-unit Laurent polynomial")
        result = LaurentPoly.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact quotient q with q * divisor == self, else NotLaurentError."""
        divisor = self._coerce(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero(self.variables)
        nvars = len(self.variables)
        shift_a = tuple(min(e[i] for e, _ in self.terms) for i in range(nvars))
        shift_b = tuple(min(e[i] for e, _ in divisor.terms) for i in range(nvars))
        # shifted copies live in the ordinary polynomial ring
        rem = {tuple(x - s for x, s in zip(e, shift_a)): c for e, c in self.terms}
        div = {tuple(x - s for x, s in zip(e, shift_b)): c for e, c in divisor.terms}
        lead_e = max(div, key=_grlex)
        lead_c = div[lead_e]
        quot: dict[Exponents, int] = {}
        while rem:
            re = max(rem, key=_grlex)
            rc = rem[re]
            de = tuple(x - y for x, y in zip(re, lead_e))
            if any(x < 0 for x in de) or rc % lead_c != 0:
                raise NotLaurentError(
                    f"({self}) is not divisible by ({divisor})"
                )
            qc = rc // lead_c
            quot[de] = quot.get(de, 0) + qc
            for be, bc in div.items():
                key = tuple(x + y for x, y in zip(de, be))
                val = rem.get(key, 0) - qc * bc
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        offset = tuple(a - b for a, b in zip(shift_a, shift_b))
        return LaurentPoly(
            self.variables,
            {tuple(x + s for x, s in zip(e, offset)): c for e, c in quot.items()},
        )

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point: Mapping[str, Scalar]) -> Scalar:
        """Evaluate at the given point.

        Exact (int/Fraction) result when every assigned value is exact,
        otherwise a finite complex.  Negative exponents at zero raise
        ZeroDivisionError; a missing variable raises KeyError.
        """
        for v in self.variables:
            if v not in point:
                raise KeyError(f"no value assigned to {v}")
        values = [point[v] for v in self.variables]
        exact = all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in values)
        if exact:
            # int ** negative would fall back to float; Fraction powers stay exact
            values = [Fraction(v) for v in values]
        else:
            values = [complex(v) if not isinstance(v, Fraction)
                      else complex(v.numerator / v.denominator) for v in values]
        total: Scalar = Fraction(0) if exact else 0j
        for exps, coef in self.terms:
            term: Scalar = Fraction(coef) if exact else complex(coef)
            for val, e in zip(values, exps):
                if e == 0:
                    continue
                if val == 0 and e < 0:
                    raise ZeroDivisionError(
                        "negative exponent evaluated at zero"
                    )
                term = term * val ** e
            total = total + term
        if exact:
            frac = Fraction(total)
            return int(frac) if frac.denominator == 1 else frac
        return require_finite(complex(total))

    # -- text serialization ------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (exps, coef) in enumerate(self.terms):
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            mag = abs(coef)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if idx == 0:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coef > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    # -- JSON serialization ------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": list(self.variables),
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.terms],
        }

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls(
            tuple(data["vars"]),
            {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]},
        )


def laurent_gens(variables: Iterable[str]) -> tuple[LaurentPoly, ...]:
    """The generator polynomials x_i for the given variable list."""
    variables = tuple(variables)
    return tuple(LaurentPoly.variable(variables, v) for v in variables)


def default_variables(rank: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, rank + 1))


def parse_laurent(text: str, variables: Iterable[str]) -> LaurentPoly:
    """Parse the human-readable monomial syntax produced by ``str()``.

    Terms are joined by ``+``/``-``; a term is ``*``-separated factors, each
    an integer literal, a variable, or ``var^int``.
    """
    variables = tuple(variables)
    index = {v: i for i, v in enumerate(variables)}
    stripped = text.replace(" ", "")
    if not stripped:
        raise ValueError("empty polynomial text")
    if stripped == "0":
        return LaurentPoly.zero(variables)
    # split into signed chunks, keeping '^-' exponents intact
    chunks: list[tuple[int, str]] = []
    sign, start = 1, 0
    if stripped[0] in "+-":
        sign = -1 if stripped[0] == "-" else 1
        start = 1
    current = []
    i = start
    while i < len(stripped):
        ch = stripped[i]
        if ch in "+-" and stripped[i - 1] not in "^*+-eE":
            chunks.append((sign, "".join(current)))
            sign = -1 if ch == "-" else 1
            current = []
        else:
            current.append(ch)
        i += 1
    chunks.append((sign, "".join(current)))
    terms: dict[Exponents, int] = {}
    for sgn, chunk in chunks:
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        coef = sgn
        exps = [0] * len(variables)
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor[0].isdigit():
                coef *= int(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in index:
                raise ValueError(f"unknown variable {name!r} in {text!r}")
            exps[index[name]] += int(power) if power else 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coef
    return LaurentPoly(variables, terms)
