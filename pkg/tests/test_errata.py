"""Alternative closed forms that circulate for these identities, checked against the oracle.

Each variant is evaluated literally.  The ones that fail are pinned to a
concrete counterexample so the shipped forms stay justified.
"""

from fractions import Fraction

from horadam.horadam_octonion import norm_closed_form, og_sum_closed, og_term, og_terms, preset, underlined_roots
from horadam.report import reduce_value
from horadam.sequence import HoradamParams, binet_constants, w_cassini_rhs, w_terms

FIB = HoradamParams(0, 1, 1, 1)


def cassini_q_power_variant(P, n):
    # q^(n-1) (p w0 w1 - w1^2 - w0^2 q): the form for w_n = p w_{n-1} - q w_{n-2}
    return P.q ** (n - 1) * (P.p * P.a * P.b - P.b**2 - P.a**2 * P.q)


def sum_plus_q_variant(P, n):
    w = w_terms(P, n + 2)
    return Fraction(P.b - P.a * (P.p - 1) + P.q * w[n] - w[n + 1], 1 - P.p - P.q)


def test_cassini_q_power_variant_fails_for_fibonacci():
    w = w_terms(FIB, 4)
    lhs = w[3] * w[1] - w[2] ** 2
    assert lhs == 1
    assert cassini_q_power_variant(FIB, 2) == -1
    assert w_cassini_rhs(FIB, 2) == 1


def test_cassini_q_power_variant_fails_broadly():
    failures = 0
    for a in range(-2, 3):
        for b in range(-2, 3):
            for p in range(-2, 3):
                for q in range(-2, 3):
                    P = HoradamParams(a, b, p, q)
                    w = w_terms(P, 22)
                    for n in range(1, 21):
                        if w[n + 1] * w[n - 1] - w[n] ** 2 != cassini_q_power_variant(P, n):
                            failures += 1
    assert failures > 0


def test_sum_plus_q_variant_fails():
    P = HoradamParams(2, 2, 2, 1)
    assert sum(w_terms(P, 3)) == 10
    assert sum_plus_q_variant(P, 2) == 4


def test_sum_variant_agrees_when_q_term_vanishes():
    # q = 0 makes both signs coincide
    P = HoradamParams(1, 3, 3, 0)
    for n in range(8):
        assert sum_plus_q_variant(P, n) == sum(w_terms(P, n + 1))


def test_modified_pell_unit_weight_binet_is_not_rational():
    mp = preset("modified_pell")
    c = binet_constants(mp)
    u = underlined_roots(mp)
    for n in range(5):
        plus_form = (u.alpha_u * c.alpha**n + u.beta_u * c.beta**n) / c.delta
        assert not all(x.is_rational() for x in plus_form.coeffs)
        halved = (u.alpha_u * c.alpha**n + u.beta_u * c.beta**n) / 2
        assert reduce_value(halved) == og_term(mp, n).value


def test_modified_pell_weights():
    c = binet_constants(preset("modified_pell"))
    # A = -B = sqrt 2, so A/(alpha-beta) = 1/2
    assert c.A == -c.B
    assert c.A / c.delta == Fraction(1, 2)


def test_norm_cross_term_leading_a_fails_when_a_is_not_one():
    pell = preset("pell")
    truth = og_term(pell, 0).value.norm()
    assert norm_closed_form(pell, 0, leading=pell.a) != truth
    assert norm_closed_form(pell, 0, leading=1) == truth


def test_norm_cross_term_leading_a_harmless_when_a_is_one():
    mp = preset("modified_pell")
    for n in range(6):
        assert norm_closed_form(mp, n, leading=mp.a) == og_term(mp, n).value.norm()


def test_fibonacci_sum_display_holds():
    # (1/sqrt5)(beta_u beta^(n+1)/(1-beta) - alpha_u alpha^(n+1)/(1-alpha))
    #   - (alpha_u (1-beta) - beta_u (1-alpha))/sqrt5
    c = binet_constants(FIB)
    u = underlined_roots(FIB)
    for n in range(12):
        head = (u.beta_u * (c.beta ** (n + 1) / (1 - c.beta)) - u.alpha_u * (c.alpha ** (n + 1) / (1 - c.alpha))) / c.delta
        tail = (u.alpha_u * (1 - c.beta) - u.beta_u * (1 - c.alpha)) / c.delta
        total = og_terms(FIB, n + 1)
        expected = total[0]
        for og in total[1:]:
            expected = expected + og
        assert reduce_value(head - tail) == expected
        assert reduce_value(og_sum_closed(FIB, n)) == expected
