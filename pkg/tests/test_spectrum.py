"""Root solving on the unit circle and the admissible index family."""

import cmath
import json
import math
import random
from fractions import Fraction

import pytest

from joneslab.spectrum import (
    IndexValue,
    SingularTraceError,
    discrete_index,
    index_of,
    jones_spectrum,
    solve_chebyshev_unit,
)


class TestRootSolving:
    def test_order_one(self):
        assert solve_chebyshev_unit(1) == [1]

    def test_order_four(self):
        roots = solve_chebyshev_unit(4)
        expected = [1, 1j, -1, -1j]
        assert len(roots) == 4
        for r, e in zip(roots, expected):
            assert abs(r - e) < 1e-12

    def test_order_three_contains_primitive_root(self):
        roots = solve_chebyshev_unit(3)
        primitive = cmath.exp(2j * math.pi / 3)
        assert any(abs(r - primitive) < 1e-12 for r in roots)

    @pytest.mark.parametrize("n", [1, 2, 5, 17, 64])
    def test_counts_and_residuals(self, n):
        roots = solve_chebyshev_unit(n)
        assert len(roots) == n
        for t in roots:
            assert abs(abs(t) - 1) < 1e-14
            assert abs(t**n + t**-n - 2) < 1e-12

    def test_rejects_nonpositive_order(self):
        with pytest.raises(ValueError):
            solve_chebyshev_unit(0)


class TestIndexMap:
    def test_boundary_value_is_exact(self):
        value = index_of(1)
        assert value.index == 4
        assert isinstance(value.index, Fraction)
        assert value.tau == Fraction(1, 4)

    def test_primitive_cube_root_gives_one(self):
        value = index_of(cmath.exp(2j * math.pi / 3), n=3)
        assert abs(value.index - 1) < 1e-12
        assert value.origin == "discrete"

    def test_index_times_tau(self):
        for t in (2, 3, Fraction(7, 2), 1.5, cmath.exp(0.4j)):
            value = index_of(t)
            assert abs(complex(value.index) * complex(value.tau) - 1) < 1e-12

    def test_inversion_symmetry(self):
        # (1+t)^2/t is invariant under t -> 1/t
        for t in (Fraction(3), Fraction(7, 2)):
            assert index_of(t).index == index_of(1 / t).index

    def test_conjugation_symmetry(self):
        t = cmath.exp(2j * math.pi / 7)
        assert abs(index_of(t).index - index_of(t.conjugate()).index) < 1e-14

    def test_singular_points(self):
        with pytest.raises(SingularTraceError):
            index_of(-1)
        with pytest.raises(ValueError):
            index_of(0)
        with pytest.raises(SingularTraceError):
            index_of(cmath.exp(1j * math.pi))  # numerically -1

    def test_singular_trace_is_a_zero_division(self):
        assert issubclass(SingularTraceError, ZeroDivisionError)

    def test_validation_rejects_inconsistent_fields(self):
        with pytest.raises(ArithmeticError):
            IndexValue(t=2, index=Fraction(9, 2), tau=Fraction(1, 4), origin="continuous")
        with pytest.raises(ArithmeticError):
            IndexValue(t=1, index=Fraction(5), tau=Fraction(1, 5), origin="boundary", n=1)
        with pytest.raises(ValueError):
            IndexValue(t=1, index=Fraction(4), tau=Fraction(1, 4), origin="boundary")

    def test_continuous_branch_values(self):
        rng = random.Random(1729)
        for _ in range(1000):
            t = math.exp(rng.uniform(math.log(1.0000001), math.log(1e6)))
            value = index_of(t)
            assert value.index > 4 or math.isclose(value.index, 4)
        assert index_of(1.0).index == 4  # equality exactly at t = 1


class TestDiscreteFamily:
    def test_first_values(self):
        golden = (3 + math.sqrt(5)) / 2
        expected = {3: 1.0, 4: 2.0, 5: golden, 6: 3.0, 7: 3.2469796037174672}
        for n, target in expected.items():
            assert abs(discrete_index(n).index - target) < 1e-12

    def test_order_two_is_excluded(self):
        with pytest.raises(SingularTraceError):
            discrete_index(2)

    def test_order_one_is_the_boundary(self):
        value = discrete_index(1)
        assert value.origin == "boundary"
        assert value.index == 4

    def test_closed_form(self):
        for n in range(3, 65):
            target = 4 * math.cos(math.pi / n) ** 2
            assert abs(discrete_index(n).index - target) < 1e-12

    def test_convergence_rate(self):
        # 4 - 4cos^2(pi/n) = 4 sin^2(pi/n) < 4 pi^2 / n^2
        for n in range(8, 65):
            gap = 4 - discrete_index(n).index
            assert 0 < gap < 4 * math.pi**2 / n**2


class TestSpectrumReport:
    def test_small_report(self):
        report = jones_spectrum(6)
        values = [v.index for v in report.discrete]
        assert len(values) == 4
        assert abs(values[0] - 1) < 1e-12
        assert abs(values[1] - 2) < 1e-12
        assert abs(values[2] - (3 + math.sqrt(5)) / 2) < 1e-12
        assert abs(values[3] - 3) < 1e-12
        assert report.passed

    def test_monotonicity_to_sixty_four(self):
        report = jones_spectrum(64)
        assert report.strictly_increasing
        assert report.below_four
        assert report.samples_above_four

    def test_continuous_samples(self):
        report = jones_spectrum(3, samples=(1.5, 2.0, 10.0))
        targets = [(2.5) ** 2 / 1.5, 4.5, 121 / 10]
        for v, target in zip(report.continuous, targets):
            assert abs(v.index - target) < 1e-12
            assert v.origin == "continuous"

    def test_n_max_validation(self):
        with pytest.raises(ValueError):
            jones_spectrum(2)

    def test_csv_shape(self):
        report = jones_spectrum(5)
        lines = report.to_csv().strip().split("\n")
        assert lines[0] == "n,t_re,t_im,index"
        assert len(lines) == 1 + 3 + 1 + 3  # header, discrete, boundary, samples
        first = lines[1].split(",")
        assert first[0] == "3"
        assert abs(float(first[3]) - 1) < 1e-12
        sample_row = lines[-1].split(",")
        assert sample_row[0] == ""  # continuous rows carry no order

    def test_json_round_trip(self):
        report = jones_spectrum(4)
        packed = json.loads(json.dumps(report.to_json()))
        assert packed["pass"] is True
        assert packed["continuous_branch"] == "[4, oo)"
        assert [d["n"] for d in packed["discrete"]] == [3, 4]
        assert packed["boundary"]["index"] == 4

    def test_table_mentions_branch(self):
        text = jones_spectrum(4).to_table()
        assert text.splitlines()[-1] == "continuous branch: [4, oo)"
        assert "boundary" in text
