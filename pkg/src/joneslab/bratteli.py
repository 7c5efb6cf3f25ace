"""Bratteli diagrams: Pascal-triangle and doubling towers.

The gauge-invariant tower has vertex (n, k) of dimension C(n, k) with unit
edges to (n+1, k) and (n+1, k+1); the full tower has one vertex per level of
dimension 2^n joined by a single edge of multiplicity 2.  Alongside: the
level-wise dimension-count check for embedding the first into the second, and
finite truncations of the diagonal product unitaries that generate modular
automorphisms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .matrices import Matrix, kron_chain

MAX_LEVELS = 64
Edge = tuple[int, int, int]


@dataclass(frozen=True)
class BratteliDiagram:
    """Graded multigraph with positive integer vertex dimensions.

    ``edges[g]`` joins level g to level g+1 as (source index, target index,
    multiplicity).  Every vertex dimension above level 0 must equal the
    multiplicity-weighted sum of its parents' dimensions, and level 0 is the
    single vertex of dimension 1.
    """

    levels: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[Edge, ...], ...]

    def __post_init__(self):
        if not self.levels or self.levels[0] != (1,):
            raise ValueError("level 0 must be the single vertex of dimension 1")
        if len(self.edges) != len(self.levels) - 1:
            raise ValueError("need exactly one edge set per consecutive level pair")
        for gap, gap_edges in enumerate(self.edges):
            parents = self.levels[gap]
            children = self.levels[gap + 1]
            weighted = [0] * len(children)
            for src, dst, mult in gap_edges:
                if not (0 <= src < len(parents) and 0 <= dst < len(children)):
                    raise ValueError(f"edge ({src},{dst}) out of range at gap {gap}")
                if mult < 1:
                    raise ValueError(f"edge multiplicity must be positive, got {mult}")
                weighted[dst] += mult * parents[src]
            if tuple(weighted) != children:
                raise ValueError(
                    f"level {gap + 1} dimensions {children} do not match "
                    f"weighted parent sums {tuple(weighted)}"
                )

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def level_dimensions(self, n: int) -> tuple[int, ...]:
        return self.levels[n]

    def to_json(self) -> dict:
        return {
            "levels": [list(level) for level in self.levels],
            "edges": [[list(e) for e in gap] for gap in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph bratteli {", "  rankdir=TB;"]
        for n, level in enumerate(self.levels):
            for k, dim in enumerate(level):
                lines.append(f'  v{n}_{k} [label="{dim}"];')
        for gap, gap_edges in enumerate(self.edges):
            for src, dst, mult in gap_edges:
                label = f' [label="{mult}"]' if mult > 1 else ""
                lines.append(f"  v{gap}_{src} -> v{gap + 1}_{dst}{label};")
        lines.append("}")
        return "\n".join(lines)


def _check_levels(levels: int):
    if levels < 0:
        raise ValueError(f"levels must be nonnegative, got {levels}")
    if levels > MAX_LEVELS:
        raise ValueError(f"levels capped at {MAX_LEVELS}, got {levels}")


def gicar_diagram(levels: int) -> BratteliDiagram:
    """Pascal triangle: vertex (n, k) has dimension C(n, k), unit edges."""
    _check_levels(levels)
    rows = tuple(
        tuple(math.comb(n, k) for k in range(n + 1)) for n in range(levels + 1)
    )
    gaps = []
    for n in range(levels):
        gap = []
        for k in range(n + 1):
            gap.append((k, k, 1))
            gap.append((k, k + 1, 1))
        gaps.append(tuple(gap))
    return BratteliDiagram(levels=rows, edges=tuple(gaps))


def car_diagram(levels: int) -> BratteliDiagram:
    """Doubling tower: dimension 2^n, one edge of multiplicity 2 per step."""
    _check_levels(levels)
    rows = tuple((2**n,) for n in range(levels + 1))
    gaps = tuple(((0, 0, 2),) for _ in range(levels))
    return BratteliDiagram(levels=rows, edges=gaps)


def embedding_dimension_check(n: int) -> bool:
    """Necessary dimension count for the unital level-n embedding.

    The Pascal row must fill the doubling row exactly with multiplicity one:
    sum_k C(n, k) = 2^n, in exact big-integer arithmetic.
    """
    _check_levels(n)
    row = gicar_diagram(n).level_dimensions(n)
    return sum(row) == 2**n


def push_dimension_vector(
    diagram: BratteliDiagram, vector: list[int], level: int
) -> list[int]:
    """Propagate a dimension vector one level down: w_j = sum_i mult(i,j) v_i."""
    if not (0 <= level < len(diagram.levels) - 1):
        raise ValueError(f"no edge set below level {level}")
    if len(vector) != len(diagram.levels[level]):
        raise ValueError(
            f"vector length {len(vector)} does not match level {level} "
            f"width {len(diagram.levels[level])}"
        )
    out = [0] * len(diagram.levels[level + 1])
    for src, dst, mult in diagram.edges[level]:
        out[dst] += mult * vector[src]
    return out


@dataclass(frozen=True)
class PowersSpec:
    """Truncation of the diagonal product unitary with weight lam in (0, 1)."""

    lam: float
    m: int

    def __post_init__(self):
        if not (0 < self.lam < 1):
            raise ValueError(f"weight must lie in (0, 1), got {self.lam}")
        if not (1 <= self.m <= 7):
            raise ValueError(f"truncation level must be 1..7, got {self.m}")


def powers_unitary(spec: PowersSpec) -> Matrix:
    """U = tensor^m of exp(i*diag(1, lam)), a diagonal unitary of dim 2^m."""
    factor = Matrix(
        np.array(
            [[cmath.exp(1j), 0], [0, cmath.exp(1j * spec.lam)]], dtype=complex
        ),
        exact=False,
    )
    u = kron_chain([factor] * spec.m)
    unitarity = (u @ u.dagger()).max_abs_diff(Matrix.identity(u.dim, False))
    if unitarity > 1e-12:
        raise ArithmeticError(f"constructed operator not unitary: {unitarity:.3e}")
    return u


def conjugate(u: Matrix, a: Matrix) -> Matrix:
    return u @ a @ u.dagger()


def powers_conjugation_check(
    spec: PowersSpec, samples: int = 4, seed: int = 1729
) -> float:
    """Max deviation of a -> UaU* from multiplicativity and unitality.

    Draws random complex matrices and compares U(ab)U* with (UaU*)(UbU*),
    plus U*1*U* against the identity.
    """
    u = powers_unitary(spec)
    rng = np.random.default_rng(seed)
    dim = u.dim
    worst = conjugate(u, Matrix.identity(dim, False)).max_abs_diff(
        Matrix.identity(dim, False)
    )
    for _ in range(samples):
        a = Matrix(
            rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)),
            exact=False,
        )
        b = Matrix(
            rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)),
            exact=False,
        )
        lhs = conjugate(u, a @ b)
        rhs = conjugate(u, a) @ conjugate(u, b)
        worst = max(worst, lhs.max_abs_diff(rhs))
    return float(worst)
