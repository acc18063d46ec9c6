from fractions import Fraction
from importlib import resources
from itertools import product

import pytest
from hypothesis import given, strategies as st

from horadam.octonion import (
    MULTIPLICATION_TABLE,
    Octonion,
    build_table,
    format_table,
    oct_add,
    oct_conj,
    oct_mul,
    oct_norm,
    oct_scale,
    parse_table,
)
from horadam.scalars import QuadExt

ints = st.integers(-50, 50)
octonions = st.lists(ints, min_size=8, max_size=8).map(Octonion)
E = [Octonion.basis(i) for i in range(8)]


def test_table_unit_row_and_column():
    t = build_table()
    for j in range(8):
        assert t[0][j] == (1, j)
        assert t[j][0] == (1, j)


def test_imaginary_units_square_to_minus_one():
    t = build_table()
    for i in range(1, 8):
        assert t[i][i] == (-1, 0)


def test_distinct_imaginary_units_anticommute():
    t = build_table()
    for i, j in product(range(1, 8), repeat=2):
        if i != j:
            (s1, k1), (s2, k2) = t[i][j], t[j][i]
            assert k1 == k2 and s1 == -s2 and k1 not in (0, i, j)


def test_each_row_is_a_signed_permutation():
    for row in MULTIPLICATION_TABLE:
        assert sorted(k for _, k in row) == list(range(8))


def test_shipped_fixture_matches_generated_table():
    shipped = resources.files("horadam").joinpath("data/multiplication_table.txt").read_text()
    assert shipped == format_table()
    assert parse_table(shipped) == MULTIPLICATION_TABLE
    assert len(shipped.splitlines()) == 64


def test_parse_table_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_table("0 0 +1")
    with pytest.raises(ValueError):
        parse_table(format_table().replace("0 0 +1 0", "0 0 +2 0"))
    with pytest.raises(ValueError):
        parse_table("\n".join(format_table().splitlines()[:-1]))


def test_mul_examples():
    x = Octonion([3, -1, 4, 1, -5, 9, 2, -6])
    assert x * Octonion.one() == x
    assert Octonion.one() * x == x
    assert E[1] * E[2] != E[2] * E[1]
    assert E[1] * E[2] == -(E[2] * E[1])


def test_non_associative_basis_triple_exists():
    witnesses = [
        (i, j, k)
        for i, j, k in product(range(1, 8), repeat=3)
        if (E[i] * E[j]) * E[k] != E[i] * (E[j] * E[k])
    ]
    assert (1, 2, 4) in witnesses


def test_conj_examples():
    assert oct_conj(Octonion.one()) == Octonion.one()
    x = Octonion([0, 1, 1, 2, 3, 5, 8, 13])
    assert oct_conj(x) == Octonion([0, -1, -1, -2, -3, -5, -8, -13])
    assert oct_conj(oct_conj(x)) == x


def test_norm_examples():
    assert oct_norm(Octonion.one()) == 1
    x = Octonion([0, 1, 1, 2, 3, 5, 8, 13])
    assert oct_norm(x) == 273
    assert x * x.conj() == Octonion([273, 0, 0, 0, 0, 0, 0, 0])


def test_scale_and_add_examples():
    x = Octonion([0, 1, 1, 2, 3, 5, 8, 13])
    assert oct_scale(0, x) == Octonion.zero()
    assert oct_scale(1, x) == x
    og0 = x
    og1 = Octonion([1, 1, 2, 3, 5, 8, 13, 21])
    og2 = Octonion([1, 2, 3, 5, 8, 13, 21, 34])
    assert oct_add(oct_scale(1, og1), oct_scale(1, og0)) == og2
    assert 3 * x == x * 3


def test_division_by_octonion_refused():
    with pytest.raises(TypeError):
        Octonion.one() / Octonion.one()


def test_wrong_length_rejected():
    with pytest.raises(ValueError):
        Octonion([1, 2, 3])


@given(octonions, octonions)
def test_norm_is_multiplicative(x, y):
    assert oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y)


@given(octonions, octonions)
def test_alternative_laws(x, y):
    assert x * (x * y) == (x * x) * y
    assert (y * x) * x == y * (x * x)


@given(octonions, octonions)
def test_conjugation_reverses_products(x, y):
    assert (x * y).conj() == y.conj() * x.conj()


@given(octonions, octonions, octonions)
def test_bilinearity(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


@given(octonions)
def test_norm_from_conjugate_product(x):
    for prod in (x.conj() * x, x * x.conj()):
        assert prod[0] == oct_norm(x)
        assert all(c == 0 for c in prod.coeffs[1:])


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=16, max_size=16))
def test_norm_multiplicative_over_quadratic_coefficients(pairs):
    x = Octonion(QuadExt(r, i, 5) for r, i in pairs[:8])
    y = Octonion(QuadExt(r, i, 5) for r, i in pairs[8:])
    assert oct_norm(x * y) == oct_norm(x) * oct_norm(y)


def test_rational_coefficients():
    x = Octonion([Fraction(1, 2)] * 8)
    assert oct_norm(x) == 2
    assert (x * x.conj())[0] == 2
