"""Composite verification runners behind the service and CLI.

Each runner bundles one family of checks into a uniform CheckList: named
rows with pass/fail and a detail string, plus a kind-specific payload.
Failures are rows, not exceptions; exceptions mean the parameters were
unusable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .annulus import annulus_seed, casimir, verify_casimir_halfsum
from .bratteli import (
    PowersSpec,
    car_diagram,
    embedding_dimension_check,
    gicar_diagram,
    powers_conjugation_check,
    push_dimension_vector,
)
from .chebyshev import (
    ChebyshevOfCasimir,
    basis_expand,
    verify_composition,
    verify_halfsum_identity,
)
from .cluster import check_laurent_phenomenon, mutate_seed, rank2_sequence
from .laurent import LaurentPoly, laurent_gens
from .scalars import Scalar, format_scalar, scalar_to_json, to_complex
from .temperley_lieb import audit_printed_formula, tl_generators, verify_tl_relations

FIBONACCI_ODD = (1, 1, 2, 5, 13, 34, 89, 233)


@dataclass(frozen=True)
class CheckRow:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class CheckList:
    kind: str
    rows: tuple[CheckRow, ...]
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "pass": self.passed,
            "checks": [row.to_json() for row in self.rows],
            **self.extra,
        }

    def to_table(self) -> str:
        lines = []
        for row in self.rows:
            mark = " ok " if row.passed else "FAIL"
            lines.append(f"[{mark}] {row.name:<36} {row.detail}")
        verdict = "all checks passed" if self.passed else "CHECKS FAILED"
        lines.append(f"{self.kind}: {verdict}")
        return "\n".join(lines)


def verify_tl(t: Scalar = 1, m: int = 3, tol: float = 1e-10) -> CheckList:
    """Projection-tower relations at parameter t with m generators."""
    tower = tl_generators(t, m)
    report = verify_tl_relations(tower, tol=tol)
    rows = tuple(
        CheckRow(
            name=check.relation,
            passed=check.passed,
            detail=f"max dev {format_scalar(check.max_dev)}",
        )
        for check in report.checks
    )
    return CheckList(
        kind="tl",
        rows=rows,
        extra={
            "t": scalar_to_json(report.t),
            "m": report.m,
            "tau": scalar_to_json(report.tau),
            "exact": report.exact,
            "tol": report.tol,
        },
    )


def verify_laurent(depth: int = 12) -> CheckList:
    """Alternating mutations of the annulus seed stay Laurent and positive."""
    if depth < 1:
        raise ValueError(f"depth must be positive, got {depth}")
    path = [1 + i % 2 for i in range(depth)]
    report = check_laurent_phenomenon(annulus_seed(), path)
    max_terms = max((s.term_count for s in report.steps), default=0)
    rows = [
        CheckRow(
            name=f"laurent at every step (depth {depth})",
            passed=report.passed,
            detail=f"{len(report.steps)} steps, largest has {max_terms} terms",
        )
    ]
    produced = []
    if report.passed:
        current = annulus_seed()
        for k in path:
            current = mutate_seed(current, k)
            produced.append(current.cluster[k - 1])
    positive = bool(produced) and all(
        p.has_positive_coefficients() for p in produced
    )
    rows.append(
        CheckRow(
            name="positive integer coefficients",
            passed=positive,
            detail="every produced variable",
        )
    )
    chain = rank2_sequence((2, 2), depth + 2)
    agree = len(produced) == depth and all(
        p == chain[i + 2] for i, p in enumerate(produced)
    )
    rows.append(
        CheckRow(
            name="recurrence engine agreement",
            passed=agree,
            detail=f"{len(produced)} variables compared exactly",
        )
    )
    specialised = tuple(
        value.evaluate({"x1": 1, "x2": 1}) for value in rank2_sequence((2, 2), 8)
    )
    rows.append(
        CheckRow(
            name="specialisation at (1,1)",
            passed=specialised == FIBONACCI_ODD,
            detail=", ".join(str(v) for v in specialised),
        )
    )
    return CheckList(
        kind="laurent",
        rows=tuple(rows),
        extra={"depth": depth, "steps": report.to_json()["steps"]},
    )


def verify_chebyshev(n_max: int = 20, compose_max: int = 6) -> CheckList:
    """Half-sum identity up to n_max and the composition law up to compose_max."""
    if n_max < 1 or compose_max < 0:
        raise ValueError("bounds must be positive")
    halfsum_ok = all(verify_halfsum_identity(n) for n in range(1, n_max + 1))
    compose_ok = all(
        verify_composition(m, n)
        for m in range(compose_max + 1)
        for n in range(compose_max + 1)
    )
    rows = (
        CheckRow(
            name=f"half-sum identity n <= {n_max}",
            passed=halfsum_ok,
            detail="exact in Z[t, 1/t]",
        ),
        CheckRow(
            name=f"composition law m, n <= {compose_max}",
            passed=compose_ok,
            detail="T_m(T_n(x)) = T_mn(x) exact over Z[x]",
        ),
    )
    return CheckList(
        kind="chebyshev",
        rows=rows,
        extra={"n_max": n_max, "compose_max": compose_max},
    )


def _casimir_symbolic_ok() -> bool:
    z = casimir()
    x1, x2 = laurent_gens(("x1", "x2"))
    numerator = x1 * x1 + LaurentPoly.one(("x1", "x2")) + x2 * x2
    if z != numerator.exact_div(x1 * x2):
        return False
    return z == basis_expand(ChebyshevOfCasimir(1))


def verify_casimir(tol: float = 1e-10, n_max: int = 24) -> CheckList:
    """Casimir identity: exact symbolically, (t + 1/t)/2 at resolved points."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    rows = [
        CheckRow(
            name="symbolic identity",
            passed=_casimir_symbolic_ok(),
            detail="x1x4 - x2x3 = (x1² + 1 + x2²)/(x1x2)",
        )
    ]
    real_points = (2, 3, 4, 5, 10, 100)
    worst = 0.0
    ok = True
    for t in real_points:
        check = verify_casimir_halfsum(t, tol=tol)
        ok = ok and check.passed
        worst = max(
            worst, abs(to_complex(check.casimir_value) - to_complex(check.halfsum))
        )
    rows.append(
        CheckRow(
            name="real moduli {2, 3, 4, 5, 10, 100}",
            passed=ok,
            detail=f"worst deviation {worst:.3e}",
        )
    )
    worst = 0.0
    ok = True
    for n in range(3, n_max + 1):
        check = verify_casimir_halfsum(cmath.exp(2j * math.pi / n), tol=tol)
        ok = ok and check.passed
        worst = max(
            worst, abs(to_complex(check.casimir_value) - to_complex(check.halfsum))
        )
    rows.append(
        CheckRow(
            name=f"unit-circle moduli n = 3..{n_max}",
            passed=ok,
            detail=f"worst deviation {worst:.3e}",
        )
    )
    return CheckList(
        kind="casimir", rows=tuple(rows), extra={"tol": tol, "n_max": n_max}
    )


def verify_bratteli(levels: int = 20, powers_m: int = 4, seed: int = 1729) -> CheckList:
    """Diagram combinatorics, dimension counts, and conjugation checks."""
    pascal = gicar_diagram(levels)
    doubling = car_diagram(levels)
    rows = [
        CheckRow(
            name=f"pascal diagram well-formed ({levels} levels)",
            passed=True,
            detail="dimensions match weighted parent sums",
        ),
        CheckRow(
            name=f"doubling diagram well-formed ({levels} levels)",
            passed=doubling.levels[-1] == (2**levels,),
            detail=f"top dimension {2**levels}",
        ),
    ]
    rows.append(
        CheckRow(
            name="row sums equal 2^n for n <= 64",
            passed=all(embedding_dimension_check(n) for n in range(65)),
            detail="exact big-integer sums",
        )
    )
    push_ok = all(
        push_dimension_vector(pascal, list(pascal.levels[n]), n)
        == list(pascal.levels[n + 1])
        for n in range(levels)
    )
    rows.append(
        CheckRow(
            name="push rule reproduces next level",
            passed=push_ok,
            detail=f"levels 0..{levels - 1}",
        )
    )
    worst = max(
        powers_conjugation_check(PowersSpec(lam=0.5, m=m), samples=3, seed=seed)
        for m in range(1, powers_m + 1)
    )
    rows.append(
        CheckRow(
            name=f"conjugation multiplicative (m <= {powers_m})",
            passed=worst <= 1e-12,
            detail=f"worst deviation {worst:.3e}",
        )
    )
    return CheckList(
        kind="bratteli",
        rows=tuple(rows),
        extra={"levels": levels, "powers_m": powers_m, "rng_seed": seed},
    )


def verify_audit(t: Scalar = 1) -> CheckList:
    """The printed 4x4 operator vs the canonical one: exactly one is a projection."""
    report = audit_printed_formula(t)
    corner = report.printed_corner_dev
    rows = (
        CheckRow(
            name="printed operator fails idempotency",
            passed=not report.printed_is_projection,
            detail=(
                f"max |e²-e| = {format_scalar(report.printed_max_dev)}, "
                f"corner entry {format_scalar(corner)}"
            ),
        ),
        CheckRow(
            name="canonical operator is idempotent",
            passed=report.corrected_is_projection,
            detail=f"max |e²-e| = {format_scalar(report.corrected_max_dev)}",
        ),
    )
    return CheckList(kind="audit", rows=rows, extra=report.to_json())


VERIFIERS = {
    "tl": verify_tl,
    "laurent": verify_laurent,
    "chebyshev": verify_chebyshev,
    "casimir": verify_casimir,
    "bratteli": verify_bratteli,
    "audit": verify_audit,
}
