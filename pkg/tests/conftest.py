from fractions import Fraction

from hypothesis import strategies as st

from finwigner.polynomials import Monomial, MultiPoly

# Small random polynomials: a handful of terms in u1..u4 with modest
# coefficients is plenty to exercise the ring axioms.
monomials = st.dictionaries(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=3),
    max_size=3,
).map(Monomial)

polys = st.dictionaries(
    monomials,
    st.integers(min_value=-6, max_value=6),
    max_size=4,
).map(MultiPoly)

rationals = st.fractions(
    min_value=Fraction(-8), max_value=Fraction(8), max_denominator=6)
