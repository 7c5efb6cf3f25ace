"""Dense square matrices in two scalar modes: exact rational and complex.

Exact matrices carry Fraction entries in object arrays and never degrade to
floating point; mixing modes raises.  The exact matrix product skips zero
entries, which matters because projection towers are extremely sparse.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


@dataclass(frozen=True)
class Matrix:
    data: np.ndarray
    exact: bool

    def __post_init__(self):
        if self.data.ndim != 2 or self.data.shape[0] != self.data.shape[1]:
            raise ValueError("matrix must be square")

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @classmethod
    def zeros(cls, n: int, exact: bool) -> Matrix:
        if exact:
            data = np.full((n, n), Fraction(0), dtype=object)
        else:
            data = np.zeros((n, n), dtype=complex)
        return cls(data, exact)

    @classmethod
    def identity(cls, n: int, exact: bool) -> Matrix:
        m = cls.zeros(n, exact)
        one = Fraction(1) if exact else 1.0 + 0j
        for i in range(n):
            m.data[i, i] = one
        return m

    def copy(self) -> Matrix:
        return Matrix(self.data.copy(), self.exact)

    def _check_mode(self, other: Matrix):
        if self.exact != other.exact:
            raise ValueError("cannot mix exact and floating matrices")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_mode(other)
        return Matrix(self.data + other.data, self.exact)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_mode(other)
        return Matrix(self.data - other.data, self.exact)

    def scaled(self, scalar) -> Matrix:
        if self.exact:
            s = Fraction(scalar)
            return Matrix(np.array([[v * s for v in row] for row in self.data.tolist()],
                                   dtype=object), True)
        return Matrix(self.data * complex(scalar), False)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check_mode(other)
        if not self.exact:
            return Matrix(self.data @ other.data, False)
        n = self.dim
        a = self.data.tolist()
        b = other.data.tolist()
        zero = Fraction(0)
        out = [[zero] * n for _ in range(n)]
        for i in range(n):
            row = a[i]
            acc = out[i]
            for k in range(n):
                c = row[k]
                if c:
                    brow = b[k]
                    for j in range(n):
                        if brow[j]:
                            acc[j] = acc[j] + c * brow[j]
        return Matrix(np.array(out, dtype=object), True)

    def kron(self, other: Matrix) -> Matrix:
        self._check_mode(other)
        return Matrix(np.kron(self.data, other.data), self.exact)

    def dagger(self) -> Matrix:
        if self.exact:
            return Matrix(self.data.T.copy(), True)
        return Matrix(self.data.conj().T.copy(), False)

    def trace(self):
        return sum(self.data[i, i] for i in range(self.dim))

    def max_abs(self):
        """Largest entry magnitude; exact Fraction in exact mode."""
        if self.exact:
            best = Fraction(0)
            for row in self.data.tolist():
                for v in row:
                    if abs(v) > best:
                        best = abs(v)
            return best
        return float(np.abs(self.data).max()) if self.dim else 0.0

    def max_abs_diff(self, other: Matrix):
        return (self - other).max_abs()

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        dev = self.max_abs_diff(self.dagger())
        return dev == 0 if self.exact else dev <= tol

    def flat(self) -> list:
        return [v for row in self.data.tolist() for v in row]

    def to_json(self) -> list:
        """Entries as [re, im] pairs (exact entries converted to float)."""
        out = []
        for row in self.data.tolist():
            json_row = []
            for v in row:
                c = complex(v)
                json_row.append([c.real, c.imag])
            out.append(json_row)
        return out


def kron_chain(factors: list[Matrix]) -> Matrix:
    result = factors[0]
    for f in factors[1:]:
        result = result.kron(f)
    return result


def exact_rank(rows: list[list[Fraction]]) -> int:
    """Rank over Q by fraction-free-enough Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    col = 0
    while rank < len(m) and col < ncols:
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col] != 0:
                factor = m[r][col] / pv
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def float_rank(rows: list[list[complex]], tol: float = 1e-8) -> int:
    if not rows:
        return 0
    return int(np.linalg.matrix_rank(np.array(rows, dtype=complex), tol=tol))


class EchelonSpan:
    """Incremental rank tracking over Q: insert vectors one at a time.

    Stored rows keep their first nonzero entry at a distinct pivot column,
    so reducing a candidate strictly advances its first-nonzero position.
    """

    def __init__(self):
        self.pivots: dict[int, list[Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, vector: list[Fraction]) -> bool:
        """True if the vector enlarged the span."""
        row = list(vector)
        while True:
            col = next((i for i, v in enumerate(row) if v != 0), None)
            if col is None:
                return False
            if col not in self.pivots:
                pv = row[col]
                self.pivots[col] = [v / pv for v in row]
                return True
            lead = row[col]
            row = [a - lead * b for a, b in zip(row, self.pivots[col])]


class UnitarySpan:
    """Incremental rank tracking over C via Gram-Schmidt."""

    def __init__(self, tol: float = 1e-8):
        self.tol = tol
        self.basis: list[np.ndarray] = []

    @property
    def rank(self) -> int:
        return len(self.basis)

    def add(self, vector) -> bool:
        v = np.asarray(vector, dtype=complex)
        scale = np.linalg.norm(v)
        if scale == 0:
            return False
        for q in self.basis:
            v = v - (q.conj() @ v) * q
        residual = np.linalg.norm(v)
        if residual <= self.tol * scale:
            return False
        self.basis.append(v / residual)
        return True
