"""Dual-mode matrix plumbing and incremental span tracking."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from joneslab.matrices import (
    EchelonSpan,
    Matrix,
    UnitarySpan,
    exact_rank,
    float_rank,
    kron_chain,
)


def frac_matrix(rows):
    return Matrix(
        np.array([[Fraction(v) for v in row] for row in rows], dtype=object),
        exact=True,
    )


def test_exact_product():
    a = frac_matrix([[1, 2], [3, 4]])
    b = frac_matrix([[0, 1], [1, 0]])
    assert (a @ b).data.tolist() == [[2, 1], [4, 3]]


def test_exact_product_matches_float():
    rng = np.random.default_rng(42)
    ints = rng.integers(-5, 6, size=(6, 6))
    a = frac_matrix(ints.tolist())
    b = frac_matrix(ints.T.tolist())
    exact = (a @ b).data.tolist()
    floating = ints.astype(float) @ ints.T.astype(float)
    assert np.allclose(np.array(exact, dtype=float), floating)


def test_mode_mixing_rejected():
    with pytest.raises(ValueError):
        frac_matrix([[1]]) @ Matrix.identity(1, False)
    with pytest.raises(ValueError):
        frac_matrix([[1]]) + Matrix.identity(1, False)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        Matrix(np.zeros((2, 3)), exact=False)


def test_kron_dimensions_and_entries():
    a = frac_matrix([[1, 0], [0, 2]])
    b = frac_matrix([[3, 1], [0, 1]])
    k = a.kron(b)
    assert k.dim == 4
    assert k.data[0, 0] == 3
    assert k.data[2, 2] == 6
    assert kron_chain([a, a, a]).dim == 8


def test_trace_and_max_abs():
    m = frac_matrix([[1, -7], [2, 3]])
    assert m.trace() == 4
    assert m.max_abs() == 7
    assert isinstance(m.max_abs(), Fraction)


def test_dagger_conjugates():
    m = Matrix(np.array([[1j, 2], [0, -1j]], dtype=complex), exact=False)
    d = m.dagger()
    assert d.data[0, 0] == -1j
    assert d.data[1, 0] == 2
    assert not m.is_hermitian()
    h = Matrix(np.array([[1, 2j], [-2j, 5]], dtype=complex), exact=False)
    assert h.is_hermitian()


def test_scaled_keeps_mode():
    m = frac_matrix([[1, 2], [3, 4]]).scaled(Fraction(1, 2))
    assert m.exact
    assert m.data[1, 0] == Fraction(3, 2)


def test_exact_rank():
    rows = [
        [Fraction(1), Fraction(2), Fraction(3)],
        [Fraction(2), Fraction(4), Fraction(6)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    assert exact_rank(rows) == 2
    assert float_rank([[1.0, 2.0], [2.0, 4.000001]]) == 2
    assert float_rank([[1.0, 2.0], [2.0, 4.0]]) == 1


class TestSpans:
    def test_echelon_basic(self):
        span = EchelonSpan()
        assert span.add([Fraction(1), Fraction(2)])
        assert not span.add([Fraction(2), Fraction(4)])
        assert span.add([Fraction(0), Fraction(1)])
        assert span.rank == 2
        assert not span.add([Fraction(5), Fraction(-3)])

    def test_echelon_zero_vector(self):
        span = EchelonSpan()
        assert not span.add([Fraction(0), Fraction(0)])
        assert span.rank == 0

    def test_unitary_basic(self):
        span = UnitarySpan()
        assert span.add([1.0, 1.0])
        assert not span.add([2.0, 2.0])
        assert span.add([1.0, -1.0])
        assert span.rank == 2
        assert not span.add([0.3, 0.7])

    def test_unitary_near_dependence(self):
        span = UnitarySpan(tol=1e-6)
        span.add([1.0, 0.0])
        assert not span.add([1.0, 1e-9])
        assert span.add([1.0, 1e-3])

    @given(
        st.lists(
            st.lists(st.integers(-4, 4), min_size=4, max_size=4),
            min_size=1,
            max_size=6,
        )
    )
    @settings(max_examples=50, deadline=None)
    def test_echelon_matches_batch_rank(self, rows):
        frac_rows = [[Fraction(v) for v in row] for row in rows]
        span = EchelonSpan()
        for row in frac_rows:
            span.add(row)
        assert span.rank == exact_rank(frac_rows)

    @given(
        st.lists(
            st.lists(st.integers(-4, 4), min_size=4, max_size=4),
            min_size=1,
            max_size=6,
        )
    )
    @settings(max_examples=50, deadline=None)
    def test_unitary_matches_batch_rank(self, rows):
        span = UnitarySpan()
        for row in rows:
            span.add([float(v) for v in row])
        assert span.rank == float_rank([[float(v) for v in row] for row in rows])


def test_flat_row_major():
    m = frac_matrix([[1, 2], [3, 4]])
    assert m.flat() == [1, 2, 3, 4]


def test_json_entries_are_pairs():
    m = Matrix(np.array([[1j]], dtype=complex), exact=False)
    assert m.to_json() == [[[0.0, 1.0]]]
    e = frac_matrix([[Fraction(1, 2)]])
    assert e.to_json() == [[[0.5, 0.0]]]
