"""Weighted Dyck path combinatorics.

A Dyck path of size r is a word of r 'u' and r 'd' letters whose prefixes
never contain more 'd' than 'u'.  Each up step carries a weight variable
u_k, where the level k is the height of the step's upper end; the weight
of a path is the product of those variables, and a Dyck polynomial is the
weight sum over a family of paths.

Families are constrained four ways: size r, maximum height h, at least a
leading up steps, at least b trailing down steps.  The weight sums satisfy
a lift-and-concatenate recurrence (split a path at its first return to the
axis; the prefix, lifted one level, shifts all variable indices up by one),
which this module implements with memoization next to brute enumeration.
Enumeration doubles as the oracle for every recurrence identity.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import DomainError, InvalidWord
from .polynomials import Monomial, MultiPoly


def catalan(r: int) -> int:
    if r < 0:
        raise DomainError(f"size must be >= 0, got {r}")
    return comb(2 * r, r) // (r + 1)


@dataclass(frozen=True)
class DyckPath:
    """A Dyck path, stored as its word over {u, d}."""

    word: str

    def __post_init__(self):
        _validate_word(self.word)

    @property
    def size(self) -> int:
        return len(self.word) // 2

    def height(self) -> int:
        """Largest height the path reaches."""
        level = best = 0
        for ch in self.word:
            level += 1 if ch == "u" else -1
            if level > best:
                best = level
        return best

    def weight(self) -> Monomial:
        """Product of u_level over all up steps."""
        counts: Counter[int] = Counter()
        level = 0
        for ch in self.word:
            if ch == "u":
                level += 1
                counts[level] += 1
            else:
                level -= 1
        return Monomial(counts)

    def up_run_lengths(self) -> list[int]:
        """Lengths of the maximal runs of consecutive up steps."""
        return [len(run) for run in re.findall(r"u+", self.word)]

    def __str__(self) -> str:
        return self.word


def _validate_word(word: str) -> None:
    level = 0
    for ch in word:
        if ch == "u":
            level += 1
        elif ch == "d":
            level -= 1
        else:
            raise InvalidWord(f"invalid character {ch!r} (expected 'u' or 'd')")
        if level < 0:
            raise InvalidWord(f"prefix dips below the axis in {word!r}")
    if level != 0:
        raise InvalidWord(f"unbalanced word {word!r}")


def parse_word(s: str) -> DyckPath:
    """Inverse of str(path); raises InvalidWord on malformed input."""
    return DyckPath(s)


@dataclass(frozen=True)
class PathConstraint:
    """Size r, height cap h (None = unrestricted), min a leading ups, min b trailing downs."""

    r: int
    h: int | None = None
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.r < 0:
            raise DomainError(f"size must be >= 0, got {self.r}")
        if self.h is not None and self.h < 0:
            raise DomainError(f"height cap must be >= 0, got {self.h}")
        if self.a < 0 or self.b < 0:
            raise DomainError("leading/trailing step counts must be >= 0")

    @property
    def height_cap(self) -> int:
        return self.r if self.h is None else min(self.h, self.r)


def iter_paths(constraint: PathConstraint) -> Iterator[DyckPath]:
    """All paths satisfying the constraint, lexicographic with u < d.

    Unsatisfiable constraints (a > r, b > r, or h = 0 with r > 0) yield
    nothing; size 0 yields the empty path.
    """
    r, cap, a, b = constraint.r, constraint.height_cap, constraint.a, constraint.b
    if a > r or b > r:
        return
    if r == 0:
        yield DyckPath("")
        return
    if cap <= 0 or a > cap:
        return

    total = 2 * r
    letters: list[str] = []

    def extend(pos: int, level: int, ups: int) -> Iterator[DyckPath]:
        if pos == total:
            yield DyckPath("".join(letters))
            return
        remaining = total - pos
        # 'u' first keeps the output lexicographic.
        if ups < r and level < cap and pos < total - b:
            letters.append("u")
            yield from extend(pos + 1, level + 1, ups + 1)
            letters.pop()
        downs = pos - ups
        if pos >= a and downs < r and level > 0 and level <= remaining:
            letters.append("d")
            yield from extend(pos + 1, level - 1, ups)
            letters.pop()

    yield from extend(0, 0, 0)


def enumerate_paths(constraint: PathConstraint) -> list[DyckPath]:
    return list(iter_paths(constraint))


def dyck_poly_enum(constraint: PathConstraint) -> MultiPoly:
    """Weight sum by brute enumeration; the oracle for the recurrence route."""
    acc: dict[Monomial, int] = {}
    for path in iter_paths(constraint):
        m = path.weight()
        acc[m] = acc.get(m, 0) + 1
    return MultiPoly(acc)


# Values are immutable and keyed results identical, so concurrent use is
# safe: a race costs at most a duplicate computation, never a torn read.
_REC_CACHE: dict[tuple[int, int, int], MultiPoly] = {}


def dyck_poly_rec(r: int, a: int = 0, b: int = 0) -> MultiPoly:
    """Weight sum over size-r paths with >= a leading ups and >= b trailing downs.

    Computed by the lift-and-concatenate recurrence; out-of-range indices
    (negative, or a/b exceeding r) give the zero polynomial.  Identical to
    dyck_poly_enum with no height cap.
    """
    if r < 0 or a < 0 or b < 0:
        return MultiPoly.zero()
    if a > r or b > r:
        return MultiPoly.zero()
    if r == 0:
        return MultiPoly.one()
    # Every nonempty path starts with an up and ends with a down.
    a = max(a, 1)
    b = max(b, 1)
    key = (r, a, b)
    cached = _REC_CACHE.get(key)
    if cached is not None:
        return cached
    u1 = MultiPoly.var(1)
    if a == 1 and b == 1:
        total = MultiPoly.zero()
        for i in range(r):
            total = total + u1 * dyck_poly_rec(i).shift(1) * dyck_poly_rec(r - 1 - i)
    else:
        # Split at the first return to the axis: path = u A d B, with the
        # prefix A lifted one level.  When B is empty the closing down
        # step joins A's trailing run, hence the (a-1, b-1) term; when B
        # is nonempty it carries the whole trailing constraint and A is
        # free at its end, including the empty A (so no trailing
        # constraint may be put on A; it would wrongly erase the i = 0
        # term whenever a <= 1).
        total = u1 * dyck_poly_rec(r - 1, a - 1, b - 1).shift(1)
        for i in range(r - 1):
            total = total + (u1 * dyck_poly_rec(i, a - 1, 0).shift(1)
                             * dyck_poly_rec(r - 1 - i, 1, b))
    _REC_CACHE[key] = total
    return total


def restrict_height(p: MultiPoly, h: int) -> MultiPoly:
    """Drop every term reaching a level above h (set u_k = 0 for k > h)."""
    return p.restrict(h)


def _var_or_zero(k: int) -> MultiPoly:
    # Indices below 1 act as the zero factor (the extended-range convention).
    return MultiPoly.var(k) if k >= 1 else MultiPoly.zero()


def lemma_lhs_rhs(r: int, a: int, b: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the two-step peeling identity for constrained weight sums.

    Left: paths of size r+2 starting with at least a but fewer than a+2 ups.
    Right: the same family split by what follows the forced a-up prefix,
    u_{a-1}*u_a * P(r, a-2, b)  +  (u_a + u_{a+1}) * P(r+1, a, b).
    Valid for 0 <= a, b <= r+1 once out-of-range families count as zero.
    """
    lhs = dyck_poly_rec(r + 2, a, b) - dyck_poly_rec(r + 2, a + 2, b)
    rhs = (_var_or_zero(a - 1) * _var_or_zero(a) * dyck_poly_rec(r, a - 2, b)
           + (_var_or_zero(a) + _var_or_zero(a + 1)) * dyck_poly_rec(r + 1, a, b))
    return lhs, rhs


def gen_series(order: int, n_vars: int) -> list[MultiPoly]:
    """Coefficients of t^0 .. t^order of the height-capped generating function.

    The generating function of weight sums satisfies
    G(t; u_1, ..., u_N) = 1 / (1 - t u_1 G(t; u_2, ..., u_N)); unrolling
    gives a finite continued fraction whose innermost level is 1 - t u_N.
    Expanded bottom-up as a power series in t with polynomial coefficients,
    truncating at the requested order each step.  The coefficient of t^r
    is the weight sum over size-r paths of height at most n_vars.
    """
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    if n_vars < 0:
        raise DomainError(f"n_vars must be >= 0, got {n_vars}")
    series = [MultiPoly.one()] + [MultiPoly.zero()] * order
    for level in range(n_vars, 0, -1):
        u = MultiPoly.var(level)
        inv = [MultiPoly.one()] + [MultiPoly.zero()] * order
        for m in range(1, order + 1):
            acc = MultiPoly.zero()
            for i in range(1, m + 1):
                acc = acc + u * series[i - 1] * inv[m - i]
            inv[m] = acc
        series = inv
    return series


def u_segment_poly(r: int) -> MultiPoly:
    """Up-run statistic over all size-r paths.

    Each path contributes the product over i of t_i^(number of maximal
    up-runs of length i); variables are indexed by run length.  Evaluating
    every variable at 1 recovers the Catalan number.
    """
    if r < 0:
        raise DomainError(f"size must be >= 0, got {r}")
    acc: dict[Monomial, int] = {}
    for path in iter_paths(PathConstraint(r)):
        m = Monomial(Counter(path.up_run_lengths()))
        acc[m] = acc.get(m, 0) + 1
    return MultiPoly(acc)
