"""Named verification suites; each case recomputes an identity two ways.

Suites: catalan (path counts), lemma1 (the two-step peeling identity),
theorem1 (transfer-matrix powers vs enumerated weight sums), genseries
(continued-fraction coefficients vs height-restricted weight sums),
routes (moment and pre-Wigner route agreement), marginals (Wigner
normalization, defining property, position marginal).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .dyck import (
    PathConstraint,
    catalan,
    dyck_poly_enum,
    dyck_poly_rec,
    gen_series,
    iter_paths,
    lemma_lhs_rhs,
    restrict_height,
)
from .oscillator import MOMENT_ROUTES, OscillatorModel, path_transfer_matrix
from .polynomials import MultiPoly
from .wigner import (
    PRE_WIGNER_ROUTES,
    check_marginals,
    pre_wigner,
    pre_wigner_ground,
    vandermonde_inverse,
    wigner_matrix,
)

SUITE_ORDER = ("catalan", "lemma1", "genseries", "theorem1", "routes", "marginals")


@dataclass(frozen=True)
class CaseResult:
    suite: str
    case: str
    ok: bool


def _count(constraint: PathConstraint) -> int:
    return sum(1 for _ in iter_paths(constraint))


def suite_catalan(two_j_max: int, r_max: int) -> Iterator[CaseResult]:
    for r in range(r_max + 1):
        ok = _count(PathConstraint(r)) == catalan(r)
        yield CaseResult("catalan", f"|D_{r}| = C_{r}", ok)
    for constraint, expected in (
        (PathConstraint(3, h=2), 4),
        (PathConstraint(3, h=1), 1),
        (PathConstraint(5, a=3, b=2), 10),
    ):
        label = f"count r={constraint.r} h={constraint.height_cap} a={constraint.a} b={constraint.b}"
        yield CaseResult("catalan", label, _count(constraint) == expected)


def suite_lemma1(two_j_max: int, r_max: int) -> Iterator[CaseResult]:
    for r in range(r_max + 1):
        ok = True
        for a in range(r + 2):
            for b in range(r + 2):
                lhs, rhs = lemma_lhs_rhs(r, a, b)
                if lhs != rhs:
                    ok = False
        yield CaseResult("lemma1", f"r={r}, all 0 <= a,b <= {r + 1}", ok)


def suite_genseries(two_j_max: int, r_max: int) -> Iterator[CaseResult]:
    for n_vars in range(1, r_max + 1):
        coeffs = gen_series(r_max, n_vars)
        ok = all(coeffs[r] == restrict_height(dyck_poly_rec(r), n_vars)
                 for r in range(r_max + 1))
        yield CaseResult("genseries", f"orders 0..{r_max}, height cap {n_vars}", ok)


def _theorem1_holds(n_levels: int, r_max: int) -> bool:
    t = path_transfer_matrix(n_levels)
    dim = n_levels + 1
    power = t ** 0
    for m in range(1, 2 * r_max + 1):
        power = power * t
        for a in range(dim):
            for b in range(dim):
                entry = power[a, b]
                if (m + a + b) % 2 == 1:
                    if not entry.is_zero:
                        return False
                    continue
                if m % 2 == 1:
                    continue
                ladder = MultiPoly.one()
                for i in range(1, b + 1):
                    ladder = ladder * MultiPoly.var(i)
                expected = dyck_poly_enum(
                    PathConstraint(m // 2 + (a + b) // 2, h=n_levels, a=a, b=b))
                if entry * ladder != expected:
                    return False
    return True


def suite_theorem1(two_j_max: int, r_max: int) -> Iterator[CaseResult]:
    for n_levels in range(1, two_j_max + 1):
        ok = _theorem1_holds(n_levels, r_max)
        yield CaseResult("theorem1", f"N={n_levels}, powers up to {2 * r_max}", ok)


def suite_routes(two_j_max: int, r_max: int) -> Iterator[CaseResult]:
    for two_j in range(1, two_j_max + 1):
        model = OscillatorModel(two_j)
        ok = True
        for n in range(model.dim):
            for r in range(r_max + 1):
                values = {MOMENT_ROUTES[name](n, r, model)
                          for name in ("krawtchouk", "dyck", "matrix")}
                if len(values) != 1:
                    ok = False
        yield CaseResult("routes", f"two_j={two_j} moments agree (r <= {r_max})", ok)
        # The symmetrization oracle grows as C(a+b, a); cap its use.
        if 2 * two_j <= 10:
            ok = True
            for n in range(model.dim):
                matrices = {pre_wigner(n, model, route).matrix
                            for route in PRE_WIGNER_ROUTES}
                if len(matrices) != 1:
                    ok = False
            yield CaseResult("routes", f"two_j={two_j} pre-Wigner routes agree", ok)
        ground = pre_wigner_ground(model)
        ok = ground.matrix == pre_wigner(0, model, "krawtchouk").matrix
        yield CaseResult("routes", f"two_j={two_j} ground-state closed form", ok)


def suite_marginals(two_j_max: int, r_max: int) -> Iterator[CaseResult]:
    for two_j in range(1, two_j_max + 1):
        model = OscillatorModel(two_j)
        system = vandermonde_inverse(model.nodes)
        for n in range(model.dim):
            w = wigner_matrix(n, model)
            z = pre_wigner(n, model)
            defining = (system.matrix.transpose() * w.matrix * system.matrix
                        == z.matrix)
            yield CaseResult("marginals", f"two_j={two_j} n={n} defining property", defining)
            report = check_marginals(w, model)
            yield CaseResult("marginals", f"two_j={two_j} n={n} position marginal",
                             report.position_exact)
            yield CaseResult("marginals", f"two_j={two_j} n={n} total = 1",
                             report.total == Fraction(1))


SUITES: dict[str, Callable[[int, int], Iterator[CaseResult]]] = {
    "catalan": suite_catalan,
    "lemma1": suite_lemma1,
    "genseries": suite_genseries,
    "theorem1": suite_theorem1,
    "routes": suite_routes,
    "marginals": suite_marginals,
}


def run_suites(names: Iterable[str], two_j_max: int, r_max: int) -> list[CaseResult]:
    """Run the named suites in the canonical order and collect every case."""
    requested = list(names)
    unknown = [name for name in requested if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    results: list[CaseResult] = []
    for name in SUITE_ORDER:
        if name in requested:
            results.extend(SUITES[name](two_j_max, r_max))
    return results
