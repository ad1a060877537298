"""Assembly of pre-Wigner and Wigner matrices on the discrete phase grid.

The pre-Wigner matrix Z(n) collects the state averages of symmetrized
momentum/position monomials: entry (a, b) is the average over all
orderings of a momentum factors and b position factors.  Only even (a, b)
survive, and the even entries reduce to scaled diagonal position moments,
so Z(n) comes out of any of the three moment routes; a brute-force
ordering-average oracle provides a fourth, fully independent computation.

The Wigner matrix itself is W(n) = V^-T Z(n) V^-1 with V the Vandermonde
matrix on the spectrum nodes, which is exactly the unique solution of the
defining property V^T W V = Z: discrete averages of p^a q^b against W
reproduce every symmetrized quantum average.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import CostGuardError, DomainError, DuplicateNodes
from .matrices import ExactMatrix
from .oscillator import (
    OscillatorModel,
    gauge_operators,
    phi_squared,
    q_moment,
)
from .scalars import GaussianRational

# Default cap on the symmetrization oracle: C(a+b, a) orderings, each a
# chain of a+b matrix products.
MAX_GUARDED_WEYL_DEGREE = 10

PRE_WIGNER_ROUTES = ("krawtchouk", "dyck", "oracle")


@dataclass(frozen=True)
class PreWignerMatrix:
    """Symmetrized-monomial averages Z(n); indices are powers (a, b) = 0..N."""

    n: int
    matrix: ExactMatrix


@dataclass(frozen=True)
class WignerMatrix:
    """Quasi-probability grid W(n); row = momentum node k, column = position node l."""

    n: int
    matrix: ExactMatrix

    def total(self) -> Fraction:
        return sum(x for row in self.matrix.tolist() for x in row)


@dataclass(frozen=True)
class VandermondeSystem:
    """V[k][a] = node_k^a together with its exact inverse."""

    nodes: tuple[Fraction, ...]
    matrix: ExactMatrix
    inverse: ExactMatrix


@dataclass(frozen=True)
class MarginalEntry:
    node: Fraction
    total: Fraction
    reference: Fraction
    equal: bool


@dataclass(frozen=True)
class MarginalReport:
    """Column/row sums of W(n) against the wavefunction squares.

    The position marginal (column sums) is an exact identity.  The row
    sums are compared against the same squares on the reflected momentum
    spectrum and reported; the authoritative identity subsuming both is
    the defining property V^T W V = Z.
    """

    n: int
    position: tuple[MarginalEntry, ...]
    momentum: tuple[MarginalEntry, ...]
    total: Fraction

    @property
    def position_exact(self) -> bool:
        return all(e.equal for e in self.position)

    @property
    def momentum_exact(self) -> bool:
        return all(e.equal for e in self.momentum)


@lru_cache(maxsize=None)
def _ordering_sum(two_j: int, a: int, b: int) -> ExactMatrix:
    """Sum over all interleavings of a momentum and b position factors."""
    model = OscillatorModel(two_j)
    ops = gauge_operators(model)
    p = ops.momentum
    q = ops.position.map(GaussianRational.of)
    dim = model.dim
    total: ExactMatrix | None = None
    for p_slots in itertools.combinations(range(a + b), a):
        chosen = set(p_slots)
        product = ExactMatrix.identity(dim, one=GaussianRational.of(1))
        for slot in range(a + b):
            product = product * (p if slot in chosen else q)
        total = product if total is None else total + product
    assert total is not None
    return total


def weyl_operator(a: int, b: int, model: OscillatorModel, *,
                  unguarded: bool = False) -> ExactMatrix:
    """The symmetrized operator for p^a q^b, averaged over all orderings.

    Averaging products of a momentum and b position factors over the
    C(a+b, a) interleavings gives exactly the normalized coefficient of
    l^a m^b in (l*p + m*q)^(a+b).  Entries are Gaussian rationals in the
    gauge; diagonal entries are real and gauge-invariant.
    """
    if a < 0 or b < 0:
        raise DomainError(f"powers must be >= 0, got a={a}, b={b}")
    if not unguarded and a + b > MAX_GUARDED_WEYL_DEGREE:
        raise CostGuardError(
            f"symmetrization oracle with a+b={a + b} exceeds the default "
            f"guard (a+b <= {MAX_GUARDED_WEYL_DEGREE}): {comb(a + b, a)} orderings")
    if a + b == 0:
        return ExactMatrix.identity(model.dim, one=GaussianRational.of(1))
    return _ordering_sum(model.two_j, a, b) * Fraction(1, comb(a + b, a))


def _moment_prefactor(a: int, b: int) -> Fraction:
    return Fraction(comb(a + b, a), comb(2 * a + 2 * b, 2 * a))


def pre_wigner(n: int, model: OscillatorModel, route: str = "krawtchouk", *,
               unguarded: bool = False) -> PreWignerMatrix:
    """Z(n) via the chosen route; all routes give the identical exact matrix.

    Moment routes fill the even-even entries with
    C(a+b,a)/C(2a+2b,2a) * <n| q^(2a+2b) |n> and zero elsewhere; the
    oracle route reads every entry straight off the symmetrized products.
    """
    if route not in PRE_WIGNER_ROUTES:
        raise DomainError(f"unknown pre-Wigner route {route!r}")
    if not 0 <= n <= model.two_j:
        raise DomainError(f"state index n must be in 0..{model.two_j}, got {n}")
    dim = model.dim
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    if route == "oracle":
        for a in range(dim):
            for b in range(dim):
                entry = weyl_operator(a, b, model, unguarded=unguarded)[n, n]
                if entry.imag != 0:
                    raise ArithmeticError(
                        f"symmetrized diagonal entry ({a},{b}) is not real: {entry}")
                rows[a][b] = entry.real
    else:
        for a in range(0, dim, 2):
            for b in range(0, dim, 2):
                moment = q_moment(n, (a + b) // 2, model, route, unguarded=unguarded)
                rows[a][b] = _moment_prefactor(a // 2, b // 2) * moment
    return PreWignerMatrix(n, ExactMatrix(rows))


def pre_wigner_ground(model: OscillatorModel) -> PreWignerMatrix:
    """Closed form of Z(0): binomially weighted even node-power sums."""
    N = model.two_j
    dim = model.dim
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for a2 in range(0, dim, 2):
        for b2 in range(0, dim, 2):
            a, b = a2 // 2, b2 // 2
            node_sum = sum(comb(N, k) * node ** (2 * a + 2 * b)
                           for k, node in enumerate(model.nodes))
            rows[a2][b2] = Fraction(1, 2 ** N) * _moment_prefactor(a, b) * node_sum
    return PreWignerMatrix(0, ExactMatrix(rows))


def vandermonde_inverse(nodes: Sequence[Fraction | int]) -> VandermondeSystem:
    """Exact inverse of the Vandermonde matrix V[k][a] = node_k^a.

    Row a of the inverse holds the coefficients of the degree-a dual
    (Lagrange-type) basis polynomial on the nodes.
    """
    values = tuple(Fraction(x) for x in nodes)
    if len(set(values)) != len(values):
        raise DuplicateNodes(f"nodes must be pairwise distinct: {values}")
    v = ExactMatrix([[x ** a for a in range(len(values))] for x in values])
    return VandermondeSystem(values, v, v.inverse())


def wigner_matrix(n: int, model: OscillatorModel, route: str = "krawtchouk", *,
                  unguarded: bool = False) -> WignerMatrix:
    """W(n) = V^-T Z(n) V^-1 on the node grid.

    This is the unique matrix whose discrete averages of p^a q^b match the
    corresponding entries of Z(n) for all 0 <= a, b <= N.
    """
    z = pre_wigner(n, model, route, unguarded=unguarded)
    system = vandermonde_inverse(model.nodes)
    w = system.inverse.transpose() * z.matrix * system.inverse
    return WignerMatrix(n, w)


def check_marginals(w: WignerMatrix, model: OscillatorModel) -> MarginalReport:
    """Compare column sums (position marginal) and row sums against |phi_n|^2."""
    dim = model.dim
    grid = w.matrix.tolist()
    position = []
    for l in range(dim):
        column_sum = sum(grid[k][l] for k in range(dim))
        reference = phi_squared(w.n, l, model).square
        position.append(MarginalEntry(model.nodes[l], column_sum, reference,
                                      column_sum == reference))
    momentum = []
    for k in range(dim):
        row_sum = sum(grid[k][l] for l in range(dim))
        reference = phi_squared(w.n, k, model).square
        momentum.append(MarginalEntry(model.nodes[k], row_sum, reference,
                                      row_sum == reference))
    total = sum(x for row in grid for x in row)
    return MarginalReport(w.n, tuple(position), tuple(momentum), total)
