"""The finite oscillator with equidistant spectra on -j .. +j.

The representation is labeled by two_j = N; states |0> .. |N> are the
energy eigenbasis, and position/momentum both have the N+1 nodes -j+k.
Position matrix elements involve square roots of u_k = k(N+1-k), so all
matrices here are stored after conjugation by diag(1, sqrt(u_1),
sqrt(u_1 u_2), ...): that similarity transform clears the radicals
(position becomes rational, momentum Gaussian-rational) while leaving
every diagonal element of operator products unchanged, which is all the
moment and Wigner machinery ever reads.

Diagonal moments <n| q^(2r) |n> are computed three independent ways:
a Krawtchouk wavefunction sum, an evaluated weighted-path polynomial,
and brute-force powers of the gauged position matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .dyck import dyck_poly_rec, restrict_height
from .errors import CostGuardError, DomainError
from .matrices import ExactMatrix
from .polynomials import MultiPoly
from .scalars import GaussianRational

# Default cost guard for moment computation; override with unguarded=True.
MAX_GUARDED_TWO_J = 16
MAX_GUARDED_MOMENT_ORDER = 12


@dataclass(frozen=True)
class OscillatorModel:
    """Representation parameters: two_j = N, dimension N+1."""

    two_j: int

    def __post_init__(self):
        if not isinstance(self.two_j, int) or self.two_j < 1:
            raise DomainError(f"two_j must be a positive integer, got {self.two_j!r}")

    @property
    def dim(self) -> int:
        return self.two_j + 1

    @property
    def j(self) -> Fraction:
        return Fraction(self.two_j, 2)

    @property
    def nodes(self) -> tuple[Fraction, ...]:
        """Position (= momentum) spectrum -j, -j+1, ..., +j."""
        return tuple(-self.j + k for k in range(self.dim))

    def u_value(self, i: int) -> int:
        """The ladder weight at level i: u_i = i(N+1-i)."""
        return i * (self.two_j + 1 - i)

    def substitution(self) -> dict[int, Fraction]:
        """Variable assignment u_i -> i(N+1-i) for i = 1 .. N."""
        return {i: Fraction(self.u_value(i)) for i in range(1, self.two_j + 1)}


@dataclass(frozen=True)
class SignedSquare:
    """A real number sign * sqrt(square), kept radical-free."""

    sign: int
    square: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if self.square < 0:
            raise ValueError("square must be nonnegative")

    def __mul__(self, other: "SignedSquare") -> "SignedSquare":
        return SignedSquare(self.sign * other.sign, self.square * other.square)

    @property
    def as_float(self) -> float:
        return self.sign * float(self.square) ** 0.5


@dataclass(frozen=True)
class GaugeOperators:
    """Position and momentum matrices in the radical-free gauge."""

    position: ExactMatrix   # Fraction entries
    momentum: ExactMatrix   # GaussianRational entries


def _check_state(n: int, model: OscillatorModel) -> None:
    if not 0 <= n <= model.two_j:
        raise DomainError(f"state index n must be in 0..{model.two_j}, got {n}")


def _check_moment_guard(model: OscillatorModel, r: int, unguarded: bool) -> None:
    if r < 0:
        raise DomainError(f"moment order must be >= 0, got {r}")
    if unguarded:
        return
    if model.two_j > MAX_GUARDED_TWO_J or r > MAX_GUARDED_MOMENT_ORDER:
        raise CostGuardError(
            f"moment computation with two_j={model.two_j}, r={r} exceeds the "
            f"default guard (two_j <= {MAX_GUARDED_TWO_J}, r <= {MAX_GUARDED_MOMENT_ORDER})")


def krawtchouk(n: int, x: int, inv_p: Fraction | int, N: int) -> Fraction:
    """Krawtchouk polynomial K_n(x) as its terminating hypergeometric sum.

    K_n(x; p, N) = sum_i [C(n,i) C(x,i) / C(N,i)] * (-1/p)^i, passed the
    reciprocal 1/p directly so everything stays rational.
    """
    if not 0 <= n <= N:
        raise DomainError(f"degree n must be in 0..{N}, got {n}")
    if not 0 <= x <= N:
        raise DomainError(f"argument x must be in 0..{N}, got {x}")
    inv_p = Fraction(inv_p)
    total = Fraction(0)
    for i in range(min(n, x) + 1):
        total += Fraction(comb(n, i) * comb(x, i), comb(N, i)) * (-inv_p) ** i
    return total


def phi_squared(n: int, k: int, model: OscillatorModel) -> SignedSquare:
    """Position wavefunction value phi_n at node k, as sign and exact square.

    The square is C(N,n) C(N,k) K_n(k; 1/2, N)^2 / 2^N; downstream
    quantities only ever consume the square, but the sign of
    (-1)^n K_n(k; 1/2, N) is kept for completeness.
    """
    _check_state(n, model)
    _check_state(k, model)
    N = model.two_j
    value = krawtchouk(n, k, 2, N)
    square = Fraction(comb(N, n) * comb(N, k), 2 ** N) * value * value
    signed = -value if n % 2 else value
    sign = 0 if signed == 0 else (1 if signed > 0 else -1)
    return SignedSquare(sign, square)


def position_gauge(model: OscillatorModel) -> ExactMatrix:
    """Gauged position matrix: superdiagonal 1/2, subdiagonal u_k / 2."""
    dim = model.dim
    half = Fraction(1, 2)
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for k in range(1, dim):
        rows[k - 1][k] = half
        rows[k][k - 1] = Fraction(model.u_value(k), 2)
    return ExactMatrix(rows)


def momentum_gauge(model: OscillatorModel) -> ExactMatrix:
    """Gauged momentum matrix: superdiagonal -i/2, subdiagonal i u_k / 2."""
    dim = model.dim
    zero = GaussianRational()
    rows = [[zero] * dim for _ in range(dim)]
    for k in range(1, dim):
        rows[k - 1][k] = GaussianRational(Fraction(0), Fraction(-1, 2))
        rows[k][k - 1] = GaussianRational(Fraction(0), Fraction(model.u_value(k), 2))
    return ExactMatrix(rows)


def gauge_operators(model: OscillatorModel) -> GaugeOperators:
    return GaugeOperators(position_gauge(model), momentum_gauge(model))


def path_transfer_matrix(n_levels: int) -> ExactMatrix:
    """Symbolic tridiagonal with 1 above and u_1 .. u_N below the diagonal.

    This is twice the gauged position matrix with the weights left
    symbolic.  Entry (a, b) of its even powers, multiplied by u_1...u_b,
    is the weight sum over paths of height at most N from axis-height a
    to axis-height b; odd powers vanish on the even checkerboard.
    """
    if n_levels < 1:
        raise DomainError(f"n_levels must be >= 1, got {n_levels}")
    dim = n_levels + 1
    zero = MultiPoly.zero()
    rows = [[zero] * dim for _ in range(dim)]
    for k in range(1, dim):
        rows[k - 1][k] = MultiPoly.one()
        rows[k][k - 1] = MultiPoly.var(k)
    return ExactMatrix(rows)


def transfer_power(n_levels: int, m: int) -> ExactMatrix:
    """Exact m-th power of the symbolic transfer matrix."""
    if m < 0:
        raise DomainError(f"power must be >= 0, got {m}")
    return path_transfer_matrix(n_levels) ** m


def q_moment_krawtchouk(n: int, r: int, model: OscillatorModel, *,
                        unguarded: bool = False) -> Fraction:
    """<n| q^(2r) |n> as the node sum of q_k^(2r) |phi_n(q_k)|^2."""
    _check_state(n, model)
    _check_moment_guard(model, r, unguarded)
    total = Fraction(0)
    for k, node in enumerate(model.nodes):
        total += node ** (2 * r) * phi_squared(n, k, model).square
    return total


def q_moment_dyck(n: int, r: int, model: OscillatorModel, *,
                  unguarded: bool = False) -> Fraction:
    """<n| q^(2r) |n> as an evaluated weighted-path polynomial.

    The diagonal entry (n, n) of the 2r-th transfer-matrix power is the
    height-capped weight sum of size r+n paths with n forced leading ups
    and trailing downs, divided by u_1...u_n; evaluating at
    u_i = i(N+1-i) and scaling by 4^-r (q is half the transfer matrix)
    gives the moment.
    """
    _check_state(n, model)
    _check_moment_guard(model, r, unguarded)
    N = model.two_j
    poly = restrict_height(dyck_poly_rec(r + n, n, n), N)
    values = model.substitution()
    numerator = poly.substitute(values)
    denominator = Fraction(4) ** r
    for i in range(1, n + 1):
        denominator *= values[i]
    return numerator / denominator


def q_moment_matrix(n: int, r: int, model: OscillatorModel, *,
                    unguarded: bool = False) -> Fraction:
    """<n| q^(2r) |n> by brute-force exact powers of the gauged position matrix.

    Diagonal entries of gauged products equal the physical matrix
    elements, so no un-gauging is needed.
    """
    _check_state(n, model)
    _check_moment_guard(model, r, unguarded)
    return (position_gauge(model) ** (2 * r))[n, n]


MOMENT_ROUTES = {
    "krawtchouk": q_moment_krawtchouk,
    "dyck": q_moment_dyck,
    "matrix": q_moment_matrix,
    # The brute-force matrix power is the oracle route.
    "oracle": q_moment_matrix,
}


def q_moment(n: int, r: int, model: OscillatorModel, route: str = "krawtchouk", *,
             unguarded: bool = False) -> Fraction:
    try:
        fn = MOMENT_ROUTES[route]
    except KeyError:
        raise DomainError(f"unknown moment route {route!r}") from None
    return fn(n, r, model, unguarded=unguarded)
