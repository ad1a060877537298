"""Acceptance suite: every criterion is exact equality, printed one
pass/fail line per criterion (visible with pytest -s)."""

import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb

from finwigner.dyck import (
    PathConstraint,
    catalan,
    dyck_poly_enum,
    dyck_poly_rec,
    gen_series,
    iter_paths,
    lemma_lhs_rhs,
    restrict_height,
    u_segment_poly,
)
from finwigner.oscillator import (
    OscillatorModel,
    path_transfer_matrix,
    q_moment_dyck,
    q_moment_krawtchouk,
    q_moment_matrix,
)
from finwigner.polynomials import Monomial, MultiPoly
from finwigner.wigner import (
    check_marginals,
    pre_wigner,
    pre_wigner_ground,
    vandermonde_inverse,
    wigner_matrix,
)


@contextmanager
def criterion(number, description):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {number}: {description}")
        raise
    elapsed = time.perf_counter() - start
    print(f"PASS criterion {number}: {description} ({elapsed:.2f}s)")


def poly(*terms):
    return MultiPoly({Monomial(exps): c for c, exps in terms})


# The printed small weight sums, frozen term by term.
P_LISTINGS = {
    0: poly((1, {})),
    1: poly((1, {1: 1})),
    2: poly((1, {1: 2}), (1, {1: 1, 2: 1})),
    3: poly((1, {1: 3}), (2, {1: 2, 2: 1}), (1, {1: 1, 2: 2}), (1, {1: 1, 2: 1, 3: 1})),
    4: poly(
        (1, {1: 4}), (3, {1: 3, 2: 1}), (3, {1: 2, 2: 2}), (2, {1: 2, 2: 1, 3: 1}),
        (1, {1: 1, 2: 3}), (2, {1: 1, 2: 2, 3: 1}), (1, {1: 1, 2: 1, 3: 2}),
        (1, {1: 1, 2: 1, 3: 1, 4: 1}),
    ),
    5: poly(
        (2, {1: 2, 2: 1, 3: 1, 4: 1}), (2, {1: 1, 2: 2, 3: 1, 4: 1}),
        (2, {1: 1, 2: 1, 3: 2, 4: 1}), (1, {1: 1, 2: 1, 3: 1, 4: 2}),
        (4, {1: 4, 2: 1}), (6, {1: 3, 2: 2}), (4, {1: 2, 2: 3}), (1, {1: 1, 2: 4}),
        (1, {1: 5}), (3, {1: 3, 2: 1, 3: 1}), (6, {1: 2, 2: 2, 3: 1}),
        (2, {1: 2, 2: 1, 3: 2}), (3, {1: 1, 2: 3, 3: 1}), (3, {1: 1, 2: 2, 3: 2}),
        (1, {1: 1, 2: 1, 3: 3}), (1, {1: 1, 2: 1, 3: 1, 4: 1, 5: 1}),
    ),
}


def test_criterion_1_printed_polynomials():
    with criterion(1, "printed weight-sum listings reproduced verbatim"):
        for r, expected in P_LISTINGS.items():
            assert dyck_poly_rec(r) == expected, f"P_{r}"
        assert restrict_height(dyck_poly_rec(3), 2) == \
            poly((1, {1: 3}), (2, {1: 2, 2: 1}), (1, {1: 1, 2: 2}))
        factored = poly((1, {1: 1, 2: 1, 3: 1})) * poly(
            (1, {4: 1, 5: 1}), (1, {4: 2}), (2, {3: 1, 4: 1}), (1, {2: 1, 4: 1}),
            (1, {3: 2}), (2, {2: 1, 3: 1}), (1, {2: 2}), (1, {1: 1, 2: 1}),
        )
        assert dyck_poly_rec(5, 3, 2) == factored
        assert u_segment_poly(3) == poly((1, {1: 3}), (3, {1: 1, 2: 1}), (1, {3: 1}))


def test_criterion_2_counting():
    with criterion(2, "family sizes: Catalan r <= 12 and restricted counts"):
        for r in range(13):
            assert sum(1 for _ in iter_paths(PathConstraint(r))) == catalan(r)
        assert len(list(iter_paths(PathConstraint(3, h=2)))) == 4
        assert len(list(iter_paths(PathConstraint(3, h=1)))) == 1
        assert len(list(iter_paths(PathConstraint(5, a=3, b=2)))) == 10


def test_criterion_3_lemma():
    with criterion(3, "peeling identity, full extended range r <= 8"):
        for r in range(9):
            for a in range(r + 2):
                for b in range(r + 2):
                    lhs, rhs = lemma_lhs_rhs(r, a, b)
                    assert lhs == rhs, (r, a, b)


def test_criterion_4_transfer_matrix_theorem():
    with criterion(4, "transfer-matrix powers vs enumerated weight sums, N <= 6, r <= 5"):
        for n_levels in range(1, 7):
            t = path_transfer_matrix(n_levels)
            dim = n_levels + 1
            ladders = [MultiPoly.one()]
            for b in range(1, dim):
                ladders.append(ladders[-1] * MultiPoly.var(b))
            power = t ** 0
            for m in range(1, 11):
                power = power * t
                for a in range(dim):
                    for b in range(dim):
                        entry = power[a, b]
                        if (m + a + b) % 2 == 1:
                            assert entry == MultiPoly.zero(), (n_levels, m, a, b)
                            continue
                        if m % 2 == 1:
                            continue
                        expected = dyck_poly_enum(PathConstraint(
                            m // 2 + (a + b) // 2, h=n_levels, a=a, b=b))
                        assert entry * ladders[b] == expected, (n_levels, m, a, b)


def test_criterion_5_three_route_moments():
    with criterion(5, "three moment routes identical, N <= 8, r <= 6"):
        for two_j in range(1, 9):
            model = OscillatorModel(two_j)
            for n in range(model.dim):
                for r in range(7):
                    reference = q_moment_krawtchouk(n, r, model)
                    assert q_moment_dyck(n, r, model) == reference, (two_j, n, r)
                    assert q_moment_matrix(n, r, model) == reference, (two_j, n, r)


def test_criterion_6_pre_wigner():
    with criterion(6, "pre-Wigner routes identical (2j <= 4), ground closed form (2j <= 8)"):
        for two_j in range(1, 5):
            model = OscillatorModel(two_j)
            for n in range(model.dim):
                reference = pre_wigner(n, model, "krawtchouk").matrix
                assert pre_wigner(n, model, "dyck").matrix == reference
                assert pre_wigner(n, model, "oracle").matrix == reference
                for a in range(model.dim):
                    for b in range(model.dim):
                        if a % 2 or b % 2:
                            assert reference[a, b] == 0
        for two_j in range(1, 9):
            model = OscillatorModel(two_j)
            assert pre_wigner_ground(model).matrix == \
                pre_wigner(0, model, "krawtchouk").matrix


def test_criterion_7_defining_property():
    with criterion(7, "V^T W V = Z and exact marginals"):
        for two_j in range(1, 9):
            model = OscillatorModel(two_j)
            system = vandermonde_inverse(model.nodes)
            for n in range(model.dim):
                w = wigner_matrix(n, model)
                z = pre_wigner(n, model)
                assert system.matrix.transpose() * w.matrix * system.matrix \
                    == z.matrix, (two_j, n)
                assert w.total() == 1
                if two_j <= 6:
                    assert check_marginals(w, model).position_exact, (two_j, n)


def test_criterion_8_golden_ground_grid():
    with criterion(8, "2j=1 ground state grid is constant 1/4"):
        # Independent elimination oracle: build everything by hand.
        nodes = [Fraction(-1, 2), Fraction(1, 2)]
        v = [[node ** a for a in range(2)] for node in nodes]
        det = v[0][0] * v[1][1] - v[0][1] * v[1][0]
        v_inv = [[v[1][1] / det, -v[0][1] / det], [-v[1][0] / det, v[0][0] / det]]
        # Only (a, b) = (0, 0) is even-even in range: prefactor
        # C(0,0)/C(0,0) = 1 and the binomially weighted node sum is 2.
        z = [[Fraction(1, 2 ** 1)
              * sum(comb(1, k) * nodes[k] ** 0 for k in range(2)), Fraction(0)],
             [Fraction(0), Fraction(0)]]
        hand = [[sum(v_inv[ki][k] * z[ki][li] * v_inv[li][l]
                     for ki in range(2) for li in range(2))
                 for l in range(2)] for k in range(2)]
        quarter = Fraction(1, 4)
        assert hand == [[quarter, quarter], [quarter, quarter]]
        w = wigner_matrix(0, OscillatorModel(1))
        assert w.matrix.tolist() == hand


def test_criterion_9_generating_series():
    with criterion(9, "continued-fraction coefficients through order 8"):
        for n_vars in range(1, 9):
            coeffs = gen_series(8, n_vars)
            for r in range(9):
                assert coeffs[r] == restrict_height(dyck_poly_rec(r), n_vars), \
                    (n_vars, r)


def test_criterion_10_reflection_symmetry():
    with criterion(10, "state reflection of moments and Wigner grids, 2j <= 6"):
        for two_j in range(1, 7):
            model = OscillatorModel(two_j)
            N = two_j
            for n in range(model.dim):
                for r in range(5):
                    assert q_moment_matrix(n, r, model) == \
                        q_moment_matrix(N - n, r, model)
                w_n = wigner_matrix(n, model).matrix
                w_ref = wigner_matrix(N - n, model).matrix
                for k in range(model.dim):
                    for l in range(model.dim):
                        assert w_ref[k, l] == w_n[N - k, N - l]
