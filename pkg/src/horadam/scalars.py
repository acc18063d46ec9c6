"""Exact scalars: rationals and the quadratic extension Q(sqrt(D)).

Rationals are :class:`fractions.Fraction`, which already keeps every value
reduced with a positive denominator.  :class:`QuadExt` represents
``rat + irr*sqrt(D)`` purely symbolically, so negative and perfect-square
radicands are handled the same way as any other: arithmetic happens in
the ring Q[s]/(s**2 - D) and nothing is ever approximated.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

from .errors import (
    DegenerateRootsError,
    DiscriminantMismatchError,
    NonInvertibleError,
    NotRationalError,
)

Rational = Fraction

__all__ = [
    "Rational",
    "QuadExt",
    "discriminant",
    "quad_add",
    "quad_mul",
    "quad_inv",
    "make_roots",
    "reduce_to_rational",
]


def discriminant(p: int, q: int) -> int:
    """Radicand of the characteristic roots of t**2 - p*t - q."""
    return p * p + 4 * q


def _check_disc(disc: int) -> int:
    if not isinstance(disc, int) or isinstance(disc, bool):
        raise TypeError(f"discriminant must be an int, got {disc!r}")
    if disc == 0:
        raise DegenerateRootsError("discriminant p**2 + 4q is zero")
    return disc


class QuadExt:
    """An element ``rat + irr*sqrt(disc)`` with rational components.

    Values are immutable.  Binary operations require equal discriminants;
    plain ``int`` and ``Fraction`` operands are promoted to the other
    operand's discriminant.
    """

    # stored as (x + y*sqrt(disc)) / d with d > 0 and gcd(x, y, d) == 1
    __slots__ = ("_x", "_y", "_d", "disc")

    def __init__(self, rat=0, irr=0, disc: int = 1):
        rat, irr = Fraction(rat), Fraction(irr)
        d = rat.denominator * irr.denominator // gcd(rat.denominator, irr.denominator)
        x = rat.numerator * (d // rat.denominator)
        y = irr.numerator * (d // irr.denominator)
        _init(self, x, y, d, _check_disc(disc))

    @classmethod
    def _make(cls, x: int, y: int, d: int, disc: int) -> QuadExt:
        # trusted constructor: disc validated, d nonzero; normalizes sign and gcd
        if d < 0:
            x, y, d = -x, -y, -d
        g = gcd(x, y, d)
        if g != 1:
            x, y, d = x // g, y // g, d // g
        self = object.__new__(cls)
        _init(self, x, y, d, disc)
        return self

    @classmethod
    def sqrt(cls, disc: int) -> QuadExt:
        """The symbolic square root of ``disc``."""
        return cls(0, 1, disc)

    @property
    def rat(self) -> Fraction:
        return Fraction(self._x, self._d)

    @property
    def irr(self) -> Fraction:
        return Fraction(self._y, self._d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    def __reduce__(self):
        return (QuadExt, (self.rat, self.irr, self.disc))

    def _coerce(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.disc != self.disc:
                raise DiscriminantMismatchError(
                    f"cannot combine sqrt({self.disc}) and sqrt({other.disc}) values"
                )
            return other
        if isinstance(other, _RationalABC):
            return QuadExt._make(other.numerator, 0, other.denominator, self.disc)
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return QuadExt._make(self._x + o._x, self._y + o._y, d1, self.disc)
        return QuadExt._make(self._x * d2 + o._x * d1, self._y * d2 + o._y * d1, d1 * d2, self.disc)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return QuadExt._make(-self._x, -self._y, self._d, self.disc)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadExt._make(self._x * other, self._y * other, self._d, self.disc)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        x1, y1, x2, y2 = self._x, self._y, o._x, o._y
        return QuadExt._make(
            x1 * x2 + y1 * y2 * self.disc, x1 * y2 + x2 * y1, self._d * o._d, self.disc
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadExt:
        """Field conjugate ``rat - irr*sqrt(disc)``."""
        return QuadExt._make(self._x, -self._y, self._d, self.disc)

    def norm(self) -> Fraction:
        """``self * self.conjugate()``, always rational."""
        return Fraction(self._x * self._x - self._y * self._y * self.disc, self._d * self._d)

    def inverse(self) -> QuadExt:
        n = self._x * self._x - self._y * self._y * self.disc
        if n == 0:
            if self._x == 0 and self._y == 0:
                raise NonInvertibleError("division by zero in Q[sqrt(D)]")
            raise NonInvertibleError(f"{self} is a zero divisor (D={self.disc} is a square)")
        return QuadExt._make(self._d * self._x, -self._d * self._y, n, self.disc)

    def __truediv__(self, other):
        if isinstance(other, _RationalABC):
            if other == 0:
                raise NonInvertibleError("division by zero in Q[sqrt(D)]")
            return QuadExt._make(
                self._x * other.denominator, self._y * other.denominator,
                self._d * other.numerator, self.disc,
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExt._make(1, 0, 1, self.disc)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # -- comparison and display ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (
                self.disc == other.disc and self._x == other._x
                and self._y == other._y and self._d == other._d
            )
        if isinstance(other, _RationalABC):
            return self._y == 0 and self._x * other.denominator == other.numerator * self._d
        return NotImplemented

    def __hash__(self):
        if self._y == 0:
            return hash(self.rat)
        return hash((self._x, self._y, self._d, self.disc))

    def __bool__(self):
        return self._x != 0 or self._y != 0

    def is_rational(self) -> bool:
        return self._y == 0

    def __repr__(self):
        return f"QuadExt({self.rat!s}, {self.irr!s}, disc={self.disc})"

    def __str__(self):
        return f"{self.rat}+{self.irr}*sqrt({self.disc})"


def _init(obj: QuadExt, x: int, y: int, d: int, disc: int) -> None:
    object.__setattr__(obj, "_x", x)
    object.__setattr__(obj, "_y", y)
    object.__setattr__(obj, "_d", d)
    object.__setattr__(obj, "disc", disc)


def quad_add(x: QuadExt, y: QuadExt) -> QuadExt:
    return x + y


def quad_mul(x: QuadExt, y: QuadExt) -> QuadExt:
    return x * y


def quad_inv(x: QuadExt) -> QuadExt:
    return x.inverse()


def make_roots(p: int, q: int) -> tuple[QuadExt, QuadExt]:
    """Roots ``alpha = (p + sqrt(D))/2`` and ``beta = (p - sqrt(D))/2``.

    Raises :class:`DegenerateRootsError` when ``D = p**2 + 4q`` is zero.
    """
    disc = discriminant(p, q)
    if disc == 0:
        raise DegenerateRootsError(f"p={p}, q={q} gives a repeated root (p**2 + 4q = 0)")
    alpha = QuadExt._make(p, 1, 2, disc)
    beta = QuadExt._make(p, -1, 2, disc)
    return alpha, beta


def reduce_to_rational(x) -> Fraction:
    """Collapse a value with no sqrt(D) component to a :class:`Fraction`."""
    if isinstance(x, QuadExt):
        if not x.is_rational():
            raise NotRationalError(f"{x} has a nonzero sqrt({x.disc}) component")
        return x.rat
    return Fraction(x)
