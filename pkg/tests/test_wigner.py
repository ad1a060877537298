from fractions import Fraction
from math import comb

import numpy as np
import pytest

from finwigner.errors import CostGuardError, DomainError, DuplicateNodes
from finwigner.matrices import ExactMatrix
from finwigner.oscillator import OscillatorModel, gauge_operators, q_moment_matrix
from finwigner.scalars import GaussianRational
from finwigner.wigner import (
    check_marginals,
    pre_wigner,
    pre_wigner_ground,
    vandermonde_inverse,
    weyl_operator,
    wigner_matrix,
)


def bivariate_weyl(a, b, model):
    """Coefficient-extraction oracle: expand (l*p + m*q)^(a+b) as a
    polynomial in the scalars (l, m) with matrix coefficients and read off
    the l^a m^b term."""
    ops = gauge_operators(model)
    p = ops.momentum
    q = ops.position.map(GaussianRational.of)
    acc = {(0, 0): ExactMatrix.identity(model.dim, one=GaussianRational.of(1))}
    for _ in range(a + b):
        nxt = {}
        for (i, j), mat in acc.items():
            for key, factor in (((i + 1, j), p), ((i, j + 1), q)):
                term = mat * factor
                nxt[key] = nxt[key] + term if key in nxt else term
        acc = nxt
    return acc[(a, b)] * Fraction(1, comb(a + b, a))


class TestWeylOperator:
    def test_zero_powers_give_identity(self):
        m = OscillatorModel(2)
        assert weyl_operator(0, 0, m) == ExactMatrix.identity(3, one=GaussianRational.of(1))

    def test_two_orderings(self):
        m = OscillatorModel(2)
        ops = gauge_operators(m)
        p = ops.momentum
        q = ops.position.map(GaussianRational.of)
        expected = (p * q + q * p) * Fraction(1, 2)
        assert weyl_operator(1, 1, m) == expected

    def test_pure_position_power(self):
        m = OscillatorModel(3)
        g = weyl_operator(0, 4, m)
        for n in range(m.dim):
            assert g[n, n].imag == 0
            assert g[n, n].real == q_moment_matrix(n, 2, m)

    def test_matches_bivariate_expansion(self):
        # Ordering-average vs formal coefficient extraction, degree <= 4.
        m = OscillatorModel(2)
        for a in range(4):
            for b in range(4):
                if a + b == 0 or a + b > 4:
                    continue
                assert weyl_operator(a, b, m) == bivariate_weyl(a, b, m), (a, b)

    def test_cost_guard(self):
        m = OscillatorModel(2)
        with pytest.raises(CostGuardError):
            weyl_operator(6, 5, m)
        with pytest.raises(DomainError):
            weyl_operator(-1, 0, m)


class TestPreWigner:
    def test_corner_entry_is_one(self):
        for two_j in (1, 2, 3):
            m = OscillatorModel(two_j)
            for n in range(m.dim):
                for route in ("krawtchouk", "dyck", "oracle"):
                    assert pre_wigner(n, m, route).matrix[0, 0] == 1

    def test_golden_two_j_two(self):
        m = OscillatorModel(2)
        z = pre_wigner(0, m)
        assert z.matrix[2, 2] == Fraction(1, 6)
        assert z.matrix[0, 2] == Fraction(1, 2)
        assert z.matrix[2, 0] == Fraction(1, 2)

    def test_checkerboard_zeros(self):
        m = OscillatorModel(4)
        for n in range(5):
            z = pre_wigner(n, m).matrix
            for a in range(5):
                for b in range(5):
                    if a % 2 or b % 2:
                        assert z[a, b] == 0

    def test_oracle_route_odd_entries_vanish_exactly(self):
        m = OscillatorModel(2)
        z = pre_wigner(1, m, "oracle").matrix
        assert z[1, 1] == 0
        assert z[1, 2] == 0
        assert z[2, 1] == 0

    def test_route_equivalence(self):
        for two_j in range(1, 5):
            m = OscillatorModel(two_j)
            for n in range(m.dim):
                reference = pre_wigner(n, m, "krawtchouk").matrix
                assert pre_wigner(n, m, "dyck").matrix == reference
                assert pre_wigner(n, m, "oracle").matrix == reference

    def test_ground_state_closed_form(self):
        for two_j in range(1, 9):
            m = OscillatorModel(two_j)
            assert pre_wigner_ground(m).matrix == pre_wigner(0, m).matrix

    def test_ground_two_j_one(self):
        z = pre_wigner_ground(OscillatorModel(1))
        assert z.matrix.tolist() == [[1, 0], [0, 0]]

    def test_unknown_route(self):
        with pytest.raises(DomainError):
            pre_wigner(0, OscillatorModel(1), "florble")

    def test_bad_state(self):
        with pytest.raises(DomainError):
            pre_wigner(3, OscillatorModel(2))


class TestVandermonde:
    def test_nodes_zero_one(self):
        system = vandermonde_inverse([0, 1])
        assert system.matrix.tolist() == [[1, 0], [1, 1]]
        assert system.inverse.tolist() == [[1, 0], [-1, 1]]

    def test_three_nodes_product_is_identity(self):
        system = vandermonde_inverse([-1, 0, 1])
        assert system.matrix * system.inverse == ExactMatrix.identity(3)
        assert system.inverse * system.matrix == ExactMatrix.identity(3)

    def test_half_integer_nodes(self):
        system = vandermonde_inverse([Fraction(-1, 2), Fraction(1, 2)])
        assert system.inverse.tolist() == [
            [Fraction(1, 2), Fraction(1, 2)],
            [Fraction(-1), Fraction(1)],
        ]

    def test_duplicate_nodes(self):
        with pytest.raises(DuplicateNodes):
            vandermonde_inverse([1, 2, 1])


class TestWignerMatrix:
    def test_golden_two_j_one_ground(self):
        w = wigner_matrix(0, OscillatorModel(1))
        quarter = Fraction(1, 4)
        assert w.matrix.tolist() == [[quarter, quarter], [quarter, quarter]]

    def test_total_is_one(self):
        for two_j in (1, 2, 3, 4):
            m = OscillatorModel(two_j)
            for n in range(m.dim):
                assert wigner_matrix(n, m).total() == 1

    def test_defining_property(self):
        for two_j in range(1, 6):
            m = OscillatorModel(two_j)
            system = vandermonde_inverse(m.nodes)
            for n in range(m.dim):
                w = wigner_matrix(n, m)
                z = pre_wigner(n, m)
                assert system.matrix.transpose() * w.matrix * system.matrix == z.matrix

    def test_negative_values_pass_through(self):
        # Quasi-probabilities go negative for excited states.
        w = wigner_matrix(1, OscillatorModel(2))
        assert any(x < 0 for row in w.matrix.tolist() for x in row)

    def test_state_reflection(self):
        for two_j in (1, 2, 3, 4):
            m = OscillatorModel(two_j)
            N = two_j
            for n in range(m.dim):
                w_n = wigner_matrix(n, m).matrix
                w_ref = wigner_matrix(N - n, m).matrix
                for k in range(m.dim):
                    for l in range(m.dim):
                        assert w_ref[k, l] == w_n[N - k, N - l]


class TestMarginals:
    def test_two_j_one_ground(self):
        m = OscillatorModel(1)
        report = check_marginals(wigner_matrix(0, m), m)
        assert [e.total for e in report.position] == [Fraction(1, 2), Fraction(1, 2)]
        assert report.position_exact
        assert report.total == 1

    def test_position_marginal_exact(self):
        for two_j in range(1, 7):
            m = OscillatorModel(two_j)
            for n in range(m.dim):
                report = check_marginals(wigner_matrix(n, m), m)
                assert report.position_exact
                assert report.total == 1

    def test_momentum_row_sums_reported(self):
        m = OscillatorModel(3)
        report = check_marginals(wigner_matrix(1, m), m)
        assert len(report.momentum) == m.dim
        for e in report.momentum:
            assert e.equal == (e.total == e.reference)


def test_float_shadow_of_wigner_grid():
    # Recompute W(n) with numpy float64 linear algebra and compare.
    for two_j in (2, 5):
        model = OscillatorModel(two_j)
        nodes = [float(x) for x in model.nodes]
        v = np.vander(nodes, increasing=True)
        v_inv = np.linalg.inv(v)
        for n in range(model.dim):
            z = np.array([[float(x) for x in row]
                          for row in pre_wigner(n, model).matrix.tolist()])
            w_float = v_inv.T @ z @ v_inv
            w_exact = wigner_matrix(n, model).matrix.tolist()
            for k in range(model.dim):
                for l in range(model.dim):
                    assert w_float[k, l] == pytest.approx(
                        float(w_exact[k][l]), rel=1e-9, abs=1e-9)
