"""Horadam octonions ``OG_n = w_n e0 + w_{n+1} e1 + ... + w_{n+7} e7``.

Every closed form is evaluated over ``Octonion[QuadExt]`` and compared
with :func:`og_term`, which packs recurrence values and serves as the
oracle.  QuadExt scalars multiply octonions coefficientwise; the only
octonion-octonion products in the closed forms are the pairwise
``alpha_u * beta_u`` and ``beta_u * alpha_u``, so no bracketing choice
is ever needed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .errors import NotRationalError, PoleError
from .octonion import Octonion
from .report import IdentityReport
from .scalars import QuadExt, reduce_to_rational
from .sequence import HoradamParams, binet_constants, series_expand, w_terms

PRESETS: dict[str, HoradamParams] = {
    "fibonacci": HoradamParams(0, 1, 1, 1),
    "lucas": HoradamParams(2, 1, 1, 1),
    "pell": HoradamParams(0, 1, 2, 1),
    "jacobsthal": HoradamParams(0, 1, 1, 2),
    "modified_pell": HoradamParams(1, 1, 2, 1),
    "pell_lucas": HoradamParams(2, 2, 2, 1),
}

CASSINI_ORDERS = ("left", "right")

# Bracket shapes of the two printed Cassini right-hand sides.
#   beta_ab_minus_alpha_ba:  beta (alpha_u beta_u) - alpha (beta_u alpha_u)
#   beta_ba_minus_alpha_ab:  beta (beta_u alpha_u) - alpha (alpha_u beta_u)
CASSINI_FORMS = ("beta_ab_minus_alpha_ba", "beta_ba_minus_alpha_ab")


def preset(name: str) -> HoradamParams:
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None


@dataclass(frozen=True)
class HoradamOctonion:
    value: Octonion
    n: int
    params: HoradamParams


@dataclass(frozen=True)
class UnderlinedRoots:
    """Octonions whose i-th coefficients are ``alpha**i`` and ``beta**i``."""

    alpha_u: Octonion
    beta_u: Octonion


def og_term(params: HoradamParams, n: int) -> HoradamOctonion:
    if n < 0:
        raise ValueError("negative indices are not supported")
    w = w_terms(params, n + 8)
    return HoradamOctonion(Octonion(w[n : n + 8]), n, params)


def og_terms(params: HoradamParams, count: int) -> list[Octonion]:
    """``[OG_0, ..., OG_{count-1}]`` as plain octonions."""
    w = w_terms(params, count + 7)
    return [Octonion(w[i : i + 8]) for i in range(count)]


@lru_cache(maxsize=256)
def _underlined(p: int, q: int) -> UnderlinedRoots:
    c = binet_constants(HoradamParams(0, 1, p, q))
    return UnderlinedRoots(
        Octonion(c.alpha**i for i in range(8)),
        Octonion(c.beta**i for i in range(8)),
    )


def underlined_roots(params: HoradamParams) -> UnderlinedRoots:
    return _underlined(params.p, params.q)


@lru_cache(maxsize=256)
def _cross_products(p: int, q: int) -> tuple[Octonion, Octonion]:
    u = _underlined(p, q)
    return u.alpha_u * u.beta_u, u.beta_u * u.alpha_u


def to_integer_octonion(x: Octonion) -> Octonion:
    """Reduce QuadExt coefficients to ints; raise if any is not integral."""
    out = []
    for c in x.coeffs:
        r = reduce_to_rational(c)
        if r.denominator != 1:
            raise NotRationalError(f"coefficient {r} is not an integer")
        out.append(r.numerator)
    return Octonion(out)


# -- Binet ---------------------------------------------------------------


def og_binet_exact(params: HoradamParams, n: int) -> Octonion:
    """``(A alpha_u alpha^n - B beta_u beta^n) / (alpha - beta)``, unreduced."""
    if n < 0:
        raise ValueError("negative indices are not supported")
    c = binet_constants(params)
    u = underlined_roots(params)
    sa = c.A * c.alpha**n / c.delta
    sb = c.B * c.beta**n / c.delta
    return u.alpha_u * sa - u.beta_u * sb


def og_binet(params: HoradamParams, n: int) -> Octonion:
    return to_integer_octonion(og_binet_exact(params, n))


def og_binet_check(params: HoradamParams, n: int) -> IdentityReport:
    return IdentityReport.compare("binet", params, n, og_term(params, n).value, og_binet_exact(params, n))


# -- generating function -------------------------------------------------


def og_genfun_numerator(params: HoradamParams) -> tuple[Octonion, Octonion]:
    """Coefficients ``(OG_0, OG_1 - p OG_0)`` of the numerator polynomial."""
    og0, og1 = og_terms(params, 2)
    return og0, og1 - params.p * og0


def og_genfun_coeffs(params: HoradamParams, count: int) -> list[Octonion]:
    return series_expand(list(og_genfun_numerator(params)), params.p, params.q, count)


def og_genfun_check(params: HoradamParams, n: int) -> IdentityReport:
    rhs = og_genfun_coeffs(params, n + 1)[n]
    return IdentityReport.compare("genfun", params, n, og_term(params, n).value, rhs)


# -- Cassini -------------------------------------------------------------


def cassini_lhs(params: HoradamParams, n: int, order: str) -> Octonion:
    """``OG_{n-1} OG_{n+1} - OG_n^2`` (left) or ``OG_{n+1} OG_{n-1} - OG_n^2`` (right)."""
    if n < 1:
        raise ValueError("Cassini identities need n >= 1")
    prev, cur, nxt = og_terms(params, n + 2)[n - 1 :]
    if order == "left":
        product = prev * nxt
    elif order == "right":
        product = nxt * prev
    else:
        raise ValueError(f"order must be 'left' or 'right', got {order!r}")
    return product - cur * cur


def cassini_rhs(params: HoradamParams, n: int, form: str) -> Octonion:
    """``AB (alpha beta)^(n-1) [bracket] / (alpha - beta)`` over QuadExt."""
    if n < 1:
        raise ValueError("Cassini identities need n >= 1")
    c = binet_constants(params)
    ab, ba = _cross_products(params.p, params.q)
    if form == "beta_ab_minus_alpha_ba":
        bracket = ab * c.beta - ba * c.alpha
    elif form == "beta_ba_minus_alpha_ab":
        bracket = ba * c.beta - ab * c.alpha
    else:
        raise ValueError(f"unknown Cassini form {form!r}")
    scalar = c.A * c.B * (c.alpha * c.beta) ** (n - 1) / c.delta
    return bracket * scalar


@lru_cache(maxsize=1)
def cassini_pairing() -> dict[str, str]:
    """Frozen order -> closed-form pairing shipped with the package."""
    text = resources.files("horadam").joinpath("data/cassini_pairing.json").read_text()
    return dict(json.loads(text))


def discover_cassini_pairing(points, n_max: int) -> dict[str, str]:
    """Find, for each product order, the unique form matching the oracle everywhere.

    ``points`` is an iterable of non-degenerate :class:`HoradamParams`.
    Raises ``LookupError`` if an order is matched by zero or by both forms.
    """
    alive = {order: set(CASSINI_FORMS) for order in CASSINI_ORDERS}
    for params in points:
        for n in range(1, n_max + 1):
            for order in CASSINI_ORDERS:
                lhs = cassini_lhs(params, n, order)
                for form in list(alive[order]):
                    if cassini_rhs(params, n, form) != lhs:
                        alive[order].discard(form)
    pairing = {}
    for order, forms in alive.items():
        if len(forms) != 1:
            raise LookupError(f"order {order!r} matched {sorted(forms) or 'no'} forms")
        pairing[order] = forms.pop()
    return pairing


def og_cassini(params: HoradamParams, n: int, order: str) -> IdentityReport:
    form = cassini_pairing()[order]
    return IdentityReport.compare(
        f"cassini_{order}", params, n, cassini_lhs(params, n, order), cassini_rhs(params, n, form)
    )


# -- summation -----------------------------------------------------------


def og_sum_closed(params: HoradamParams, n: int) -> Octonion:
    """Closed form of ``OG_0 + ... + OG_n`` over QuadExt, unreduced.

    ``(B beta_u beta^(n+1)/(1-beta) - A alpha_u alpha^(n+1)/(1-alpha)) / (alpha-beta) + K``
    with ``K = (A alpha_u (1-beta) - B beta_u (1-alpha)) / ((alpha-beta)(1-alpha)(1-beta))``.
    """
    if n < 0:
        raise ValueError("negative indices are not supported")
    if params.pole:
        raise PoleError(f"1 - p - q = 0 for {params}: a root equals 1")
    c = binet_constants(params)
    u = underlined_roots(params)
    one_a, one_b = 1 - c.alpha, 1 - c.beta
    head = (u.beta_u * (c.B * c.beta ** (n + 1) / one_b) - u.alpha_u * (c.A * c.alpha ** (n + 1) / one_a)) / c.delta
    k = (u.alpha_u * (c.A * one_b) - u.beta_u * (c.B * one_a)) / (c.delta * one_a * one_b)
    return head + k


def og_sum(params: HoradamParams, n: int) -> IdentityReport:
    rhs = og_sum_closed(params, n)
    lhs = Octonion.zero()
    for og in og_terms(params, n + 1):
        lhs = lhs + og
    return IdentityReport.compare("sum", params, n, lhs, rhs)


# -- norm ----------------------------------------------------------------


def norm_closed_form(params: HoradamParams, n: int, leading=1) -> QuadExt:
    """Closed form of ``Nr(OG_n) = w_n^2 + ... + w_{n+7}^2``.

    ``[A^2 alpha^2n G(alpha) + B^2 beta^2n G(beta) - 2AB (-q)^n S] / (alpha-beta)^2``
    with ``G(x) = 1 + x^2 + ... + x^14`` and ``S = leading + (-q) + ... + (-q)^7``.
    The identity holds for ``leading = 1``; other values exist to probe
    variants of the cross term.
    """
    if n < 0:
        raise ValueError("negative indices are not supported")
    c = binet_constants(params)
    a2, b2 = c.alpha * c.alpha, c.beta * c.beta
    geo_a = sum((a2**i for i in range(1, 8)), QuadExt(1, 0, a2.disc))
    geo_b = sum((b2**i for i in range(1, 8)), QuadExt(1, 0, b2.disc))
    mq = -params.q
    s = leading + sum(mq**i for i in range(1, 8))
    main = c.A * c.A * a2**n * geo_a + c.B * c.B * b2**n * geo_b
    cross = 2 * c.A * c.B * Fraction(mq) ** n * s
    return (main - cross) / (c.delta * c.delta)


def og_norm(params: HoradamParams, n: int) -> IdentityReport:
    lhs = og_term(params, n).value.norm()
    return IdentityReport.compare("norm", params, n, lhs, norm_closed_form(params, n))
