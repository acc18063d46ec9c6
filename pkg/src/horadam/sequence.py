"""Horadam numbers ``w_n(a, b; p, q)`` and their closed forms.

``w_term`` unfolds the recurrence directly and is the oracle every closed
form here is judged against.  Only ``n >= 0`` is supported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotRationalError, PoleError
from .report import IdentityReport
from .scalars import QuadExt, discriminant, make_roots, reduce_to_rational


@dataclass(frozen=True, order=True)
class HoradamParams:
    """Initial values ``w0 = a``, ``w1 = b`` and recurrence ``w_n = p w_{n-1} + q w_{n-2}``."""

    a: int
    b: int
    p: int
    q: int

    def __post_init__(self):
        for name in ("a", "b", "p", "q"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an int, got {v!r}")

    @property
    def disc(self) -> int:
        return discriminant(self.p, self.q)

    @property
    def degenerate(self) -> bool:
        return self.disc == 0

    @property
    def pole(self) -> bool:
        """True when 1 - p - q vanishes (a root equals 1)."""
        return 1 - self.p - self.q == 0

    def __str__(self):
        return f"(a={self.a}, b={self.b}, p={self.p}, q={self.q})"


@dataclass(frozen=True)
class BinetConstants:
    alpha: QuadExt
    beta: QuadExt
    A: QuadExt
    B: QuadExt

    @property
    def delta(self) -> QuadExt:
        """``alpha - beta``, which is ``sqrt(D)``."""
        return self.alpha - self.beta


@lru_cache(maxsize=1024)
def binet_constants(params: HoradamParams) -> BinetConstants:
    """``alpha, beta`` and ``A = b - a*beta``, ``B = b - a*alpha``."""
    alpha, beta = make_roots(params.p, params.q)
    return BinetConstants(alpha, beta, params.b - params.a * beta, params.b - params.a * alpha)


def w_terms(params: HoradamParams, count: int) -> list[int]:
    """``[w_0, ..., w_{count-1}]`` by unfolding the recurrence."""
    if count < 0:
        raise ValueError("count must be non-negative")
    terms = [params.a, params.b][:count]
    p, q = params.p, params.q
    while len(terms) < count:
        terms.append(p * terms[-1] + q * terms[-2])
    return terms


def w_term(params: HoradamParams, n: int) -> int:
    if n < 0:
        raise ValueError("negative indices are not supported")
    return w_terms(params, n + 1)[n]


def _as_integer(value: Fraction) -> int:
    if value.denominator != 1:
        raise NotRationalError(f"{value} is not an integer")
    return value.numerator


def w_binet(params: HoradamParams, n: int) -> int:
    """``(A alpha^n - B beta^n) / (alpha - beta)`` evaluated in Q(sqrt(D))."""
    if n < 0:
        raise ValueError("negative indices are not supported")
    c = binet_constants(params)
    value = (c.A * c.alpha**n - c.B * c.beta**n) / c.delta
    return _as_integer(reduce_to_rational(value))


def series_expand(numerator, p: int, q: int, count: int) -> list:
    """Power-series coefficients of ``numerator(t) / (1 - p t - q t^2)``.

    ``numerator`` is a coefficient list over any ring (ints, octonions...);
    uses ``c_k = N_k + p c_{k-1} + q c_{k-2}``.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    zero = numerator[0] * 0
    coeffs: list = []
    for k in range(count):
        c = numerator[k] if k < len(numerator) else zero
        if k >= 1:
            c = c + p * coeffs[k - 1]
        if k >= 2:
            c = c + q * coeffs[k - 2]
        coeffs.append(c)
    return coeffs


def w_genfun_numerator(params: HoradamParams) -> tuple[int, int]:
    """Numerator ``w0 + (w1 - p w0) t`` of the generating function."""
    return params.a, params.b - params.p * params.a


def w_genfun_coeffs(params: HoradamParams, count: int) -> list[int]:
    return series_expand(list(w_genfun_numerator(params)), params.p, params.q, count)


def w_cassini_rhs(params: HoradamParams, n: int) -> int:
    """Closed form of ``w_{n+1} w_{n-1} - w_n^2``.

    Equals ``(-q)^(n-1) (p a b - b^2 + q a^2)``, i.e. ``-AB (alpha beta)^(n-1)``.
    """
    if n < 1:
        raise ValueError("Cassini identity needs n >= 1")
    a, b, p, q = params.a, params.b, params.p, params.q
    return (-q) ** (n - 1) * (p * a * b - b * b + q * a * a)


def w_cassini_check(params: HoradamParams, n: int) -> IdentityReport:
    if n < 1:
        raise ValueError("Cassini identity needs n >= 1")
    w = w_terms(params, n + 2)
    lhs = w[n + 1] * w[n - 1] - w[n] ** 2
    return IdentityReport.compare("w_cassini", params, n, lhs, w_cassini_rhs(params, n))


def w_sum_closed(params: HoradamParams, n: int) -> Fraction:
    """Closed form of ``w_0 + ... + w_n``.

    ``(w1 - w0 (p - 1) - q w_n - w_{n+1}) / (1 - p - q)``; the ``q w_n``
    term enters with a minus sign.
    """
    if n < 0:
        raise ValueError("negative indices are not supported")
    denom = 1 - params.p - params.q
    if denom == 0:
        raise PoleError(f"1 - p - q = 0 for {params}")
    w = w_terms(params, n + 2)
    num = params.b - params.a * (params.p - 1) - params.q * w[n] - w[n + 1]
    return Fraction(num, denom)


def w_sum_check(params: HoradamParams, n: int) -> IdentityReport:
    lhs = sum(w_terms(params, n + 1))
    return IdentityReport.compare("w_sum", params, n, lhs, w_sum_closed(params, n))


def w_binet_check(params: HoradamParams, n: int) -> IdentityReport:
    c = binet_constants(params)
    rhs = (c.A * c.alpha**n - c.B * c.beta**n) / c.delta
    return IdentityReport.compare("w_binet", params, n, w_term(params, n), rhs)


def w_genfun_check(params: HoradamParams, n: int) -> IdentityReport:
    rhs = w_genfun_coeffs(params, n + 1)[n]
    return IdentityReport.compare("w_genfun", params, n, w_term(params, n), rhs)
