"""Exception hierarchy shared by the scalar, octonion and sequence layers."""


class HoradamError(Exception):
    """Base class for every error raised by this package."""


class DiscriminantMismatchError(HoradamError, ValueError):
    """Two quadratic-extension values with different radicands were combined."""


class DegenerateRootsError(HoradamError, ValueError):
    """p**2 + 4*q == 0, so the characteristic roots coincide."""


class NotRationalError(HoradamError, ArithmeticError):
    """A value expected to be rational still carries a sqrt(D) component."""


class NonInvertibleError(HoradamError, ZeroDivisionError):
    """Inversion of zero or of a zero divisor of Q[sqrt(D)]."""


class PoleError(HoradamError, ZeroDivisionError):
    """1 - p - q == 0: a summation closed form has a vanishing denominator."""
