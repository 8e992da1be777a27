import numpy as np
import pytest
from hypothesis import given, strategies as st

from oscspline.bb import BernsteinPiece, Interval, from_monomial
from oscspline.space import (RefinedPartition, Spline, alternating_phi, dimension, evaluate,
                             hermite_data_of, hermite_interpolate, restrict_global,
                             smoothness_report, uniform_refined_partition)

from conftest import constraint_rank_dimension, partitions, power_eval, random_partition

UNIT = Interval(0.0, 1.0)


def data_from_poly(part, coeffs):
    return [[power_eval(coeffs, v, j) for j in range(p)] for v, p in zip(part.vertices, part.phi)]


class TestPartition:
    def test_uniform_small(self):
        part = uniform_refined_partition(UNIT, 2, (3, 4, 3))
        assert part.vertices == (0.0, 0.5, 1.0)
        assert part.splits == (0.25, 0.75)

    def test_uniform_sixteen(self):
        part = uniform_refined_partition(UNIT, 16, alternating_phi(16))
        assert part.vertices[1] == 1 / 16
        assert part.splits[0] == 1 / 32

    def test_phi_length_mismatch(self):
        with pytest.raises(ValueError):
            uniform_refined_partition(UNIT, 4, (3, 4, 3))

    def test_n_zero(self):
        with pytest.raises(ValueError):
            uniform_refined_partition(UNIT, 0, (3,))

    def test_split_outside(self):
        with pytest.raises(ValueError):
            RefinedPartition((0.0, 1.0), (1.0,), (2, 2))

    def test_sentinels(self):
        part = uniform_refined_partition(UNIT, 2, (2, 2, 2))
        assert part.zeta(-1) == 0.0 and part.zeta(2) == 1.0

    def test_alternating_starts_with_three(self):
        assert alternating_phi(4) == (3, 4, 3, 4, 3)


class TestDimension:
    def test_three_four_three(self):
        part = uniform_refined_partition(UNIT, 2, (3, 4, 3))
        assert dimension(part) == 10 == constraint_rank_dimension(part)

    def test_value_only(self):
        part = uniform_refined_partition(UNIT, 1, (1, 1))
        assert dimension(part) == 2 == constraint_rank_dimension(part)

    def test_alternating_sixteen(self):
        part = uniform_refined_partition(UNIT, 16, alternating_phi(16))
        # 9 vertices with 3 data, 8 with 4
        assert dimension(part) == 59 == constraint_rank_dimension(part)

    @given(partitions(max_n=4, phis=(1, 2, 3, 4, 5)))
    def test_matches_constraint_count(self, part):
        assert dimension(part) == constraint_rank_dimension(part)


class TestHermiteInterpolation:
    def test_constant(self):
        part = uniform_refined_partition(UNIT, 3, (2, 3, 4, 2))
        s = hermite_interpolate(part, [[2.5] + [0.0] * (p - 1) for p in part.phi])
        for piece in s.pieces:
            assert piece.ordinates == pytest.approx((2.5,) * (piece.degree + 1), abs=1e-14)

    @given(partitions(max_n=4, phis=(2, 3, 4)), st.data())
    def test_reproduces_polynomials(self, part, data):
        m = data.draw(st.integers(0, min(part.phi)))
        coeffs = [0.0] * m + [1.0]
        s = hermite_interpolate(part, data_from_poly(part, coeffs))
        xs = np.linspace(part.vertices[0], part.vertices[-1], 200)
        scale = max(1.0, abs(part.vertices[-1]) ** m)
        assert max(abs(s(x) - power_eval(coeffs, x)) for x in xs) < 1e-11 * scale

    @given(partitions(max_n=4), st.data())
    def test_unisolvency(self, part, data):
        rows = [data.draw(st.lists(st.floats(-1, 1), min_size=p, max_size=p)) for p in part.phi]
        back = hermite_data_of(hermite_interpolate(part, rows))
        for r, b in zip(rows, back):
            assert b == pytest.approx(r, abs=1e-10)

    def test_locality(self, rng):
        part = random_partition(rng, 6)
        rows = [list(rng.uniform(-1, 1, p)) for p in part.phi]
        s0 = hermite_interpolate(part, rows)
        i = 3
        rows[i] = list(rng.uniform(-1, 1, part.phi[i]))
        s1 = hermite_interpolate(part, rows)
        touched = {2 * i - 2, 2 * i - 1, 2 * i, 2 * i + 1}
        for k, (a, b) in enumerate(zip(s0.pieces, s1.pieces)):
            if k not in touched:
                assert a.ordinates == b.ordinates

    def test_shape_mismatch(self):
        part = uniform_refined_partition(UNIT, 1, (2, 3))
        with pytest.raises(ValueError):
            hermite_interpolate(part, [[0.0, 1.0], [0.0, 1.0]])

    def test_value_only_vertices(self):
        part = uniform_refined_partition(UNIT, 2, (1, 1, 1))
        s = hermite_interpolate(part, [[0.0], [1.0], [0.0]])
        assert s(0.5) == pytest.approx(1.0)
        assert min(smoothness_report(s).split_orders) >= 1

    def test_f3_convergence_order(self):
        from oscspline.experiment import nco
        from oscspline.testfuncs import oracle
        f = oracle("f3")
        errs = []
        for n in (16, 32, 64):
            part = uniform_refined_partition(UNIT, n, alternating_phi(n))
            s = hermite_interpolate(part, [[f.deriv(v, j) for j in range(p)]
                                           for v, p in zip(part.vertices, part.phi)])
            for v, p in zip(part.vertices, part.phi):
                for j in range(p):
                    # rounding in the ordinates is amplified by h^-j
                    assert s(v, j) == pytest.approx(f.deriv(v, j), abs=1e-12 * (2 * n) ** j)
            errs.append(max(abs(s(x) - f.eval(x)) for x in np.linspace(0, 1, 201)))
        assert errs[0] == pytest.approx(1.78188e-6, rel=1e-5)
        for e1, e2, n in zip(errs, errs[1:], (16, 32)):
            assert abs(nco(e1, n, e2, 2 * n) - 4) < 0.3


class TestEvaluate:
    def test_vertex_data(self, rng):
        part = random_partition(rng, 4)
        rows = [list(rng.uniform(-1, 1, p)) for p in part.phi]
        s = hermite_interpolate(part, rows)
        for i, v in enumerate(part.vertices):
            piece = s.pieces[2 * i] if i < part.n else s.pieces[-1]
            for j in range(part.phi[i]):
                assert piece.eval_derivative(v, j) == pytest.approx(rows[i][j], abs=1e-12)

    def test_constant_spline(self):
        part = uniform_refined_partition(UNIT, 2, (3, 4, 3))
        s = hermite_interpolate(part, [[4.0] + [0.0] * (p - 1) for p in part.phi])
        for x in (0.0, 0.2, 0.5, 0.77, 1.0):
            assert s(x) == pytest.approx(4.0)
            assert abs(s(x, 1)) < 1e-12

    def test_split_one_sided_agree(self, rng):
        part = random_partition(rng, 5)
        s = hermite_interpolate(part, [list(rng.uniform(-1, 1, p)) for p in part.phi])
        for i, z in enumerate(part.splits):
            for j in (0, 1):
                left = s.pieces[2 * i].eval_derivative(z, j)
                right = s.pieces[2 * i + 1].eval_derivative(z, j)
                assert abs(left - right) < 1e-10 * max(1.0, abs(left))

    def test_left_piece_convention(self):
        part = uniform_refined_partition(UNIT, 2, (2, 2, 2))
        s = hermite_interpolate(part, [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]])
        assert s.piece_index(0.0) == 0
        assert s.piece_index(0.25) == 0
        assert s.piece_index(0.5) == 1
        assert s.piece_index(1.0) == 3

    def test_outside_domain(self):
        part = uniform_refined_partition(UNIT, 1, (2, 2))
        s = hermite_interpolate(part, [[0.0, 0.0], [1.0, 0.0]])
        with pytest.raises(ValueError):
            evaluate(s, 1.5)


class TestSmoothnessReport:
    def test_random_data(self, rng):
        part = uniform_refined_partition(UNIT, 2, (3, 4, 3))
        s = hermite_interpolate(part, [list(rng.uniform(-1, 1, p)) for p in part.phi])
        rep = smoothness_report(s)
        assert rep.vertex_orders[0] >= 3
        assert all(o >= 1 for o in rep.split_orders)

    @given(partitions(max_n=4), st.data())
    def test_guaranteed_orders(self, part, data):
        rows = [data.draw(st.lists(st.floats(-1, 1), min_size=p, max_size=p)) for p in part.phi]
        rep = smoothness_report(hermite_interpolate(part, rows))
        for i, o in enumerate(rep.vertex_orders, start=1):
            assert o >= part.phi[i] - 1
        assert all(o >= 1 for o in rep.split_orders)

    def test_global_polynomial(self):
        part = uniform_refined_partition(UNIT, 3, (3, 4, 3, 4))
        p = from_monomial([0.3, -1.0, 0.5, 2.0], UNIT)
        s = hermite_interpolate(part, [[p.eval_derivative(v, j) for j in range(q)]
                                       for v, q in zip(part.vertices, part.phi)])
        rep = smoothness_report(s)
        for i, o in enumerate(rep.vertex_orders, start=1):
            assert o >= part.phi[i]
        assert all(o >= min(part.piece_degree(2 * i), part.piece_degree(2 * i + 1))
                   for i, o in enumerate(rep.split_orders))
        g = restrict_global(p, part)
        for a, b in zip(s.pieces, g.pieces):
            assert a.ordinates == pytest.approx(b.ordinates, abs=1e-12)

    def test_perturbation_breaks_c1(self, rng):
        part = uniform_refined_partition(UNIT, 2, (3, 3, 3))
        s = hermite_interpolate(part, [list(rng.uniform(-1, 1, 3)) for _ in range(3)])
        pieces = list(s.pieces)
        c = list(pieces[0].ordinates)
        c[-2] += 0.1
        pieces[0] = BernsteinPiece(pieces[0].interval, tuple(c))
        rep = smoothness_report(Spline(part, tuple(pieces)))
        assert rep.split_orders[0] == 0
