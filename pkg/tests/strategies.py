from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from chiralpoly.field import ExactScalar
from chiralpoly.quaternion import Quaternion

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def scalars(draw) -> ExactScalar:
    return ExactScalar(*(draw(small) for _ in range(4)))


@st.composite
def nonzero_scalars(draw) -> ExactScalar:
    x = draw(scalars())
    if x.is_zero():
        x = x + Fraction(1)
    return x


@st.composite
def quaternions(draw) -> Quaternion:
    return Quaternion(*(draw(scalars()) for _ in range(4)))


@st.composite
def unit_quaternions(draw) -> Quaternion:
    """Unit quaternions q^2/|q|^2 with small integer q, exact over the rationals."""
    a, b, c, d = (draw(st.integers(-6, 6)) for _ in range(4))
    n2 = a * a + b * b + c * c + d * d
    if n2 == 0:
        a, n2 = 1, 1
    q = Quaternion(*(ExactScalar(v) for v in (a, b, c, d)))
    sq = q * q
    return sq.scale(ExactScalar(Fraction(1, n2)))
