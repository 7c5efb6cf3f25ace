"""Jones projections and Temperley-Lieb towers in finite matrix algebras.

The canonical 4x4 projection is

    e_t = (e11 (x) e22 + t e22 (x) e11 + sqrt(t) (e12 (x) e21 + e21 (x) e12)) / (1 + t)

which is idempotent for every admissible t.  A variant that sometimes
appears in print replaces the first two terms with e11 (x) e11 + t e22 (x) e22;
``audit_printed_formula`` constructs that variant verbatim and reports its
idempotency defect instead of silently correcting it.

Towers place e_t on adjacent tensor slots: generator i of an m-generator
tower is 1^{(x)(i-1)} (x) e_t (x) 1^{(x)(m-i)} inside M_{2^{m+1}}.
"""
from __future__ import annotations

import cmath
import os
from dataclasses import dataclass
from fractions import Fraction

from .matrices import EchelonSpan, Matrix, UnitarySpan, kron_chain
from .scalars import Scalar, exact_sqrt, is_exact, scalar_to_json, to_complex

DEFAULT_DIM_CAP = 256
DIM_CAP_ENV = "JONESLAB_DIM_CAP"


def dimension_cap() -> int:
    raw = os.environ.get(DIM_CAP_ENV)
    return int(raw) if raw else DEFAULT_DIM_CAP


def _unit(i: int, j: int, exact: bool) -> Matrix:
    m = Matrix.zeros(2, exact)
    m.data[i - 1, j - 1] = Fraction(1) if exact else 1.0 + 0j
    return m


def _mode_of(t: Scalar) -> tuple[bool, Scalar, Scalar]:
    """Pick the scalar mode for t; returns (exact, t, sqrt_t)."""
    if t == 0:
        raise ValueError("t = 0 is not admissible")
    if t == -1:
        raise ZeroDivisionError("t = -1 makes 1/(1+t) singular")
    if is_exact(t) and t > 0:
        root = exact_sqrt(Fraction(t))
        if root is not None:
            return True, Fraction(t), root
    tc = to_complex(t)
    return False, tc, cmath.sqrt(tc)


def _assemble(t: Scalar, diag_units: tuple[tuple[int, int], tuple[int, int]]) -> Matrix:
    """(unit_a + t unit_b + sqrt(t)(e12(x)e21 + e21(x)e12)) / (1+t)."""
    exact, tv, root = _mode_of(t)
    (a1, a2), (b1, b2) = diag_units
    m = (
        _unit(a1, a1, exact).kron(_unit(a2, a2, exact))
        + _unit(b1, b1, exact).kron(_unit(b2, b2, exact)).scaled(tv)
        + (
            _unit(1, 2, exact).kron(_unit(2, 1, exact))
            + _unit(2, 1, exact).kron(_unit(1, 2, exact))
        ).scaled(root)
    )
    one = Fraction(1) if exact else 1.0 + 0j
    return m.scaled(one / (one + tv))


def jones_projection(t: Scalar) -> Matrix:
    """The canonical projection in M_2 (x) M_2; exact mode when sqrt(t) is rational."""
    return _assemble(t, ((1, 2), (2, 1)))


def printed_projection_variant(t: Scalar) -> Matrix:
    """The e11(x)e11 + t e22(x)e22 variant, built exactly as printed."""
    return _assemble(t, ((1, 1), (2, 2)))


def tau_of(t: Scalar, exact: bool):
    if exact:
        tv = Fraction(t)
        return tv / (1 + tv) ** 2
    tc = to_complex(t)
    return tc / (1 + tc) ** 2


@dataclass(frozen=True)
class TLTower:
    """m shifted copies of e_t acting on 2^{m+1} dimensions."""

    t: Scalar
    m: int
    generators: tuple[Matrix, ...]
    tau: Scalar
    exact: bool

    @property
    def dim(self) -> int:
        return self.generators[0].dim


def tl_generators(t: Scalar, m: int, tol: float = 1e-12) -> TLTower:
    """Build the tower; construction-time checks: idempotent, Hermitian for real t > 0."""
    if m < 1:
        raise ValueError("m must be >= 1")
    dim = 2 ** (m + 1)
    cap = dimension_cap()
    if dim > cap:
        raise ValueError(f"dimension {dim} exceeds cap {cap}")
    base = jones_projection(t)
    exact = base.exact
    identity2 = Matrix.identity(2, exact)
    gens = []
    for i in range(1, m + 1):
        factors = [identity2] * (i - 1) + [base] + [identity2] * (m - i)
        gens.append(kron_chain(factors))
    real_positive = is_exact(t) and t > 0 or (
        isinstance(t, float) and t > 0
    )
    for g in gens:
        dev = (g @ g).max_abs_diff(g)
        if (dev != 0) if exact else (dev > tol):
            raise ArithmeticError(f"generator not idempotent (dev {dev})")
        if real_positive and not g.is_hermitian(tol):
            raise ArithmeticError("generator not Hermitian for real t > 0")
    return TLTower(t, m, tuple(gens), tau_of(t, exact), exact)


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    max_dev: Fraction | float
    passed: bool

    def to_json(self) -> dict:
        dev = "0" if isinstance(self.max_dev, Fraction) and self.max_dev == 0 else (
            str(self.max_dev) if isinstance(self.max_dev, Fraction) else float(self.max_dev)
        )
        return {"relation": self.relation, "max_dev": dev, "pass": self.passed}


@dataclass
class RelationReport:
    t: Scalar
    m: int
    tau: Scalar
    exact: bool
    tol: float
    checks: list[RelationCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def max_deviation(self) -> float:
        return max((float(c.max_dev) for c in self.checks), default=0.0)

    def to_json(self) -> dict:
        return {
            "t": scalar_to_json(self.t),
            "m": self.m,
            "tau": scalar_to_json(self.tau),
            "exact": self.exact,
            "tol": self.tol,
            "pass": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def verify_tl_relations(tower: TLTower, tol: float = 1e-10) -> RelationReport:
    """Check idempotency, far commutation and e_i e_{i+-1} e_i = tau e_i."""

    def passes(dev) -> bool:
        return dev == 0 if tower.exact else float(dev) <= tol

    gens = tower.generators
    checks = []
    for i, g in enumerate(gens, start=1):
        dev = (g @ g).max_abs_diff(g)
        checks.append(RelationCheck(f"e{i}^2 = e{i}", dev, passes(dev)))
    for i in range(1, tower.m + 1):
        for j in range(i + 2, tower.m + 1):
            dev = (gens[i - 1] @ gens[j - 1]).max_abs_diff(gens[j - 1] @ gens[i - 1])
            checks.append(RelationCheck(f"e{i}e{j} = e{j}e{i}", dev, passes(dev)))
    for i in range(1, tower.m + 1):
        for j in (i - 1, i + 1):
            if 1 <= j <= tower.m:
                lhs = gens[i - 1] @ gens[j - 1] @ gens[i - 1]
                rhs = gens[i - 1].scaled(tower.tau)
                dev = lhs.max_abs_diff(rhs)
                checks.append(
                    RelationCheck(f"e{i}e{j}e{i} = tau*e{i}", dev, passes(dev))
                )
    return RelationReport(tower.t, tower.m, tower.tau, tower.exact, tol, checks)


def tl_algebra_dimension(t: Scalar = 3, m: int = 2, rank_tol: float = 1e-8) -> int:
    """Dimension of the span of all words in {1, e_1..e_m}.

    Breadth-first closure: only words that enlarged the span are multiplied
    further (a dependent word's products are already spanned).  Exact towers
    track the span over Q, floating towers via Gram-Schmidt.
    """
    if m > 5:
        raise ValueError("m capped at 5 for the word-span computation")
    tower = tl_generators(t, m)
    gens = tower.generators
    span = EchelonSpan() if tower.exact else UnitarySpan(tol=rank_tol)
    frontier = []
    for word in [Matrix.identity(tower.dim, tower.exact), *gens]:
        if span.add(word.flat()):
            frontier.append(word)
    while frontier:
        emerged = []
        for word in frontier:
            for gen in gens:
                product = word @ gen
                if span.add(product.flat()):
                    emerged.append(product)
        frontier = emerged
    return span.rank


@dataclass
class AuditReport:
    """Idempotency audit of the printed variant vs the canonical form.

    ``printed_corner_dev`` is the deviation at the |11><11| diagonal entry,
    the slot where the variant visibly differs; ``printed_max_dev`` is the
    full max-entry norm of e^2 - e.
    """

    t: Scalar
    exact: bool
    printed_max_dev: Fraction | float
    printed_corner_dev: Fraction | float
    corrected_max_dev: Fraction | float

    @property
    def printed_is_projection(self) -> bool:
        return self.printed_max_dev == 0

    @property
    def corrected_is_projection(self) -> bool:
        return (
            self.corrected_max_dev == 0
            if self.exact
            else float(self.corrected_max_dev) <= 1e-12
        )

    @property
    def discrepancy_found(self) -> bool:
        return not self.printed_is_projection and self.corrected_is_projection

    def to_json(self) -> dict:
        def dev(v):
            return str(v) if isinstance(v, Fraction) else float(v)

        return {
            "t": scalar_to_json(self.t),
            "exact": self.exact,
            "printed_max_dev": dev(self.printed_max_dev),
            "printed_corner_dev": dev(self.printed_corner_dev),
            "corrected_max_dev": dev(self.corrected_max_dev),
            "printed_is_projection": self.printed_is_projection,
            "corrected_is_projection": self.corrected_is_projection,
            "discrepancy_found": self.discrepancy_found,
        }


def audit_printed_formula(t: Scalar) -> AuditReport:
    """Construct the printed variant verbatim and measure ||e^2 - e||."""
    printed = printed_projection_variant(t)
    corrected = jones_projection(t)
    printed_dev = (printed @ printed) - printed
    corner = printed_dev.data[0, 0]
    return AuditReport(
        t=t,
        exact=printed.exact,
        printed_max_dev=printed_dev.max_abs(),
        printed_corner_dev=abs(corner),
        corrected_max_dev=(corrected @ corrected).max_abs_diff(corrected),
    )
