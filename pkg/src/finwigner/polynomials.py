"""Sparse multivariate polynomials with integer coefficients.

Variables are indexed 1, 2, 3, ... and render as u1, u2, u3 by default.
A monomial stores only its nonzero exponents, and a polynomial maps
monomials to nonzero integer coefficients, so two polynomials are equal
exactly when their term maps are equal.

Canonical term order is graded: higher total degree first; within a
degree, terms compare by their "word", the weakly increasing sequence of
variable indices with multiplicity (u1^2*u2 -> (1, 1, 2)).  For the
weighted-path polynomials in this package the word of a weight monomial is
literally the sequence of up-step levels, which makes this order the
natural one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import MissingVariable


class Monomial:
    """Product of variables u_k raised to positive integer exponents."""

    __slots__ = ("_exps",)

    def __init__(self, exps: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = dict(exps)
        cleaned = []
        for var in sorted(items):
            exp = items[var]
            if exp == 0:
                continue
            if var < 1:
                raise ValueError(f"variable index must be >= 1, got {var}")
            if exp < 0:
                raise ValueError(f"exponent must be >= 0, got {exp}")
            cleaned.append((var, exp))
        self._exps = tuple(cleaned)

    @property
    def exps(self) -> tuple[tuple[int, int], ...]:
        return self._exps

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    @property
    def max_var(self) -> int:
        """Largest variable index present (0 for the constant monomial)."""
        return self._exps[-1][0] if self._exps else 0

    def word(self) -> tuple[int, ...]:
        """Variable indices with multiplicity, weakly increasing."""
        out: list[int] = []
        for var, exp in self._exps:
            out.extend([var] * exp)
        return tuple(out)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        # Higher total degree first, then ascending word; for homogeneous
        # weight sums this lists u1^r first and the staircase weight last.
        return (-self.degree, self.word())

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self._exps)
        for var, exp in other._exps:
            merged[var] = merged.get(var, 0) + exp
        return Monomial(merged)

    def shift(self, offset: int) -> "Monomial":
        """Relabel every variable u_k as u_{k+offset}."""
        if offset < 0:
            raise ValueError("shift offset must be >= 0")
        return Monomial({var + offset: exp for var, exp in self._exps})

    def substitute(self, values: Mapping[int, Fraction | int]) -> Fraction:
        result = Fraction(1)
        for var, exp in self._exps:
            if var not in values:
                raise MissingVariable(var)
            result *= Fraction(values[var]) ** exp
        return result

    def to_text(self, prefix: str = "u") -> str:
        if not self._exps:
            return "1"
        parts = []
        for var, exp in self._exps:
            parts.append(f"{prefix}{var}" if exp == 1 else f"{prefix}{var}^{exp}")
        return "*".join(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return hash(self._exps)

    def __repr__(self) -> str:
        return f"Monomial({list(self._exps)!r})"


_ONE_MONOMIAL = Monomial()


class MultiPoly:
    """Polynomial in u1, u2, ... with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        data = dict(terms)
        self._terms = {m: c for m, c in data.items() if c != 0}

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({_ONE_MONOMIAL: 1})

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({_ONE_MONOMIAL: c})

    @classmethod
    def var(cls, index: int, exp: int = 1) -> "MultiPoly":
        return cls({Monomial({index: exp}): 1})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_var(self) -> int:
        return max((m.max_var for m in self._terms), default=0)

    @property
    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=0)

    def term_count(self) -> int:
        return len(self._terms)

    def coefficient(self, monomial: Monomial) -> int:
        return self._terms.get(monomial, 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in the canonical graded order."""
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.sorted_terms())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        return isinstance(other, MultiPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items(), key=lambda t: t[0].sort_key())))

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return MultiPoly.const(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, offset: int) -> "MultiPoly":
        """Relabel every variable u_k as u_{k+offset}."""
        return MultiPoly({m.shift(offset): c for m, c in self._terms.items()})

    def restrict(self, h: int) -> "MultiPoly":
        """Set u_k = 0 for every k > h, i.e. drop terms reaching above h."""
        return MultiPoly({m: c for m, c in self._terms.items() if m.max_var <= h})

    def substitute(self, values: Mapping[int, Fraction | int]) -> Fraction:
        """Exact evaluation; every variable present must be assigned."""
        total = Fraction(0)
        for m, c in self._terms.items():
            total += c * m.substitute(values)
        return total

    def to_text(self, prefix: str = "u") -> str:
        """Canonical-order rendering, e.g. "u1^2 + u1*u2" or "2*u1^2*u2"."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for m, c in self.sorted_terms():
            mag = abs(c)
            if m.degree == 0:
                body = str(mag)
            elif mag == 1:
                body = m.to_text(prefix)
            else:
                body = f"{mag}*{m.to_text(prefix)}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def to_json_obj(self) -> list[dict]:
        """Canonical JSON form: [{"coeff": "...", "exponents": [[var, exp], ...]}, ...]."""
        return [
            {"coeff": str(c), "exponents": [list(pair) for pair in m.exps]}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_obj(cls, data: Iterable[dict]) -> "MultiPoly":
        terms: dict[Monomial, int] = {}
        for item in data:
            m = Monomial([(int(v), int(e)) for v, e in item["exponents"]])
            terms[m] = terms.get(m, 0) + int(item["coeff"])
        return cls(terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()})"
