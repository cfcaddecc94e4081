"""Exact arithmetic in Q(sqrt2, sqrt5).

Every element is stored as four reduced rationals on the basis
{1, sqrt2, sqrt5, sqrt10}, so equality and hashing are componentwise.
"""

from __future__ import annotations

import decimal
from fractions import Fraction
from functools import total_ordering
from typing import Union

Rational = Union[int, Fraction]

_BASIS = ("", "√2", "√5", "√10")

# (i, j) -> (k, factor): basis_i * basis_j = factor * basis_k
_PRODUCT = {
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, 2), (1, 2): (3, 1), (1, 3): (2, 2),
    (2, 0): (2, 1), (2, 1): (3, 1), (2, 2): (0, 5), (2, 3): (1, 5),
    (3, 0): (3, 1), (3, 1): (2, 2), (3, 2): (1, 5), (3, 3): (0, 10),
}

_EMBED_DIGITS = 60


def _sign_q2(a: Fraction, b: Fraction) -> int:
    """Sign of a + b*sqrt2."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: the larger magnitude wins
    d = a * a - 2 * b * b
    return sa if d > 0 else (sb if d < 0 else 0)


def _mul_q2(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    return (a[0] * b[0] + 2 * a[1] * b[1], a[0] * b[1] + a[1] * b[0])


@total_ordering
class ExactScalar:
    """An element c0 + c1*sqrt2 + c2*sqrt5 + c3*sqrt10 of Q(sqrt2, sqrt5)."""

    __slots__ = ("_c", "_hash")

    def __init__(self, c0: Rational = 0, c1: Rational = 0, c2: Rational = 0, c3: Rational = 0) -> None:
        self._c = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))
        self._hash = hash(self._c)

    @classmethod
    def coerce(cls, value: object) -> ExactScalar:
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to ExactScalar")

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._c

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_rational(self) -> bool:
        return not any(self._c[1:])

    # ring operations

    def __add__(self, other: object) -> ExactScalar:
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(*(x + y for x, y in zip(self._c, o._c)))

    __radd__ = __add__

    def __neg__(self) -> ExactScalar:
        return ExactScalar(*(-x for x in self._c))

    def __pos__(self) -> ExactScalar:
        return self

    def __sub__(self, other: object) -> ExactScalar:
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(*(x - y for x, y in zip(self._c, o._c)))

    def __rsub__(self, other: object) -> ExactScalar:
        return (-self) + other

    def __mul__(self, other: object) -> ExactScalar:
        if isinstance(other, (int, Fraction)):
            return ExactScalar(*(x * other for x in self._c))
        if not isinstance(other, ExactScalar):
            return NotImplemented
        out = [Fraction(0)] * 4
        for i, x in enumerate(self._c):
            if not x:
                continue
            for j, y in enumerate(other._c):
                if y:
                    k, f = _PRODUCT[i, j]
                    out[k] += f * x * y
        return ExactScalar(*out)

    __rmul__ = __mul__

    def conjugate5(self) -> ExactScalar:
        """Galois conjugate sending sqrt5 -> -sqrt5."""
        c0, c1, c2, c3 = self._c
        return ExactScalar(c0, c1, -c2, -c3)

    def conjugate2(self) -> ExactScalar:
        """Galois conjugate sending sqrt2 -> -sqrt2."""
        c0, c1, c2, c3 = self._c
        return ExactScalar(c0, -c1, c2, -c3)

    def inverse(self) -> ExactScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt5)")
        # a * conj5(a) lies in Q(sqrt2); its conj2 clears sqrt2
        n5 = self * self.conjugate5()
        n2 = n5 * n5.conjugate2()
        return self.conjugate5() * n5.conjugate2() * (1 / n2._c[0])

    def __truediv__(self, other: object) -> ExactScalar:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return ExactScalar(*(x / other for x in self._c))
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> ExactScalar:
        return ExactScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> ExactScalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ordering

    def sign(self) -> int:
        """Exact sign, decided without floating point."""
        c0, c1, c2, c3 = self._c
        # value = x + y*sqrt5 with x, y in Q(sqrt2)
        sx = _sign_q2(c0, c1)
        sy = _sign_q2(c2, c3)
        if sy == 0:
            return sx
        if sx == 0 or sx == sy:
            return sy
        x2 = _mul_q2((c0, c1), (c0, c1))
        y2 = _mul_q2((c2, c3), (c2, c3))
        d = _sign_q2(x2[0] - 5 * y2[0], x2[1] - 5 * y2[1])
        return sx if d > 0 else (sy if d < 0 else 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactScalar):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == (Fraction(other), 0, 0, 0)
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: object) -> bool:
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).sign() < 0

    def __abs__(self) -> ExactScalar:
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return not self.is_zero()

    # conversion

    def embed(self) -> float:
        """Nearest binary64 to the exact value."""
        if self.is_zero():
            return 0.0
        with decimal.localcontext() as ctx:
            ctx.prec = _EMBED_DIGITS
            total = decimal.Decimal(0)
            for coef, radicand in zip(self._c, (1, 2, 5, 10)):
                if coef:
                    num = decimal.Decimal(coef.numerator) / decimal.Decimal(coef.denominator)
                    total += num * decimal.Decimal(radicand).sqrt()
            return float(total)

    def __float__(self) -> float:
        return self.embed()

    def __repr__(self) -> str:
        return "ExactScalar({})".format(", ".join(str(c) for c in self._c))

    def __str__(self) -> str:
        terms = []
        for c, b in zip(self._c, _BASIS):
            if c:
                terms.append(f"{c}{b}" if not b else (f"{c}*{b}" if c != 1 else b))
        return " + ".join(terms) if terms else "0"


def embed(a: ExactScalar | Rational | float) -> float:
    if isinstance(a, ExactScalar):
        return a.embed()
    return float(a)


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
HALF = ExactScalar(Fraction(1, 2))
SQRT2 = ExactScalar(0, 1)
SQRT5 = ExactScalar(0, 0, 1)
INV_SQRT2 = ExactScalar(0, Fraction(1, 2))
TAU = ExactScalar(Fraction(1, 2), 0, Fraction(1, 2))
SIGMA = ExactScalar(Fraction(1, 2), 0, Fraction(-1, 2))
