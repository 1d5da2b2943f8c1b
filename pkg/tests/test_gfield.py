import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import FieldArithmeticError, InvalidArgumentError
from core.models.gfield import (
    code_to_coeffs,
    field_elements,
    field_make,
    frobenius,
    inv,
    multiplicative_order,
    power,
    prime_subfield,
    primitive_element,
)

FIELDS = [field_make(13), field_make(3, 2), field_make(2, 3), field_make(5, 2), field_make(2, 4)]


@st.composite
def elements(draw, nonzero=False):
    spec = draw(st.sampled_from(FIELDS))
    lo = 1 if nonzero else 0
    codes = st.integers(min_value=lo, max_value=spec.q - 1)
    return spec, draw(codes), draw(codes), draw(codes)


def test_prime_field_shape(f7):
    assert f7.q == 7
    assert f7.is_prime_field
    assert f7.modulus == (0, 1)
    assert repr(f7) == "F_7"


def test_smallest_primitive_modulus():
    # x^3 + x + 1 and x^2 + x + 2, low degree first
    assert field_make(2, 3).modulus == (1, 1, 0, 1)
    assert field_make(3, 2).modulus == (2, 1, 1)


@pytest.mark.parametrize("p, a", [(4, 1), (9, 2), (7, 0), (2, 9), (65537, 2)])
def test_field_make_rejects_bad_input(p, a):
    with pytest.raises(InvalidArgumentError):
        field_make(p, a)


def test_prime_field_arithmetic(f7):
    three, five = f7.element(3), f7.element(5)
    assert (three * five).code == 1
    assert (three / five).code == 2
    assert (three - five).code == 5
    assert (-three).code == 4
    assert (three ** -1).code == 5


def test_division_by_zero(f7):
    with pytest.raises(FieldArithmeticError):
        f7.element(3) / f7.zero
    with pytest.raises(ZeroDivisionError):
        inv(f7.zero)


def test_mixed_fields_rejected(f7, f11):
    with pytest.raises(InvalidArgumentError):
        f7.one + f11.one


def test_code_layout(f9):
    assert code_to_coeffs(f9, 7) == (1, 2)
    assert f9.element(7).code == 7
    assert [e.code for e in prime_subfield(f9)] == [0, 1, 2]
    with pytest.raises(InvalidArgumentError):
        f9.element(9)


@pytest.mark.parametrize("p, a, code", [(7, 1, 3), (11, 1, 2), (19, 1, 2), (3, 2, 3), (13, 2, 13), (2, 3, 2)])
def test_primitive_element(p, a, code):
    spec = field_make(p, a)
    g = primitive_element(spec)
    assert g.code == code
    assert multiplicative_order(g) == spec.q - 1


def test_multiplicative_order_of_zero(f7):
    with pytest.raises(FieldArithmeticError):
        multiplicative_order(f7.zero)


def test_frobenius_fixes_prime_subfield(f49):
    for x in prime_subfield(f49):
        assert frobenius(x, 1) == x
    moved = [x for x in field_elements(f49) if frobenius(x, 1) != x]
    assert len(moved) == 49 - 7


@settings(max_examples=200, deadline=None)
@given(elements())
def test_field_axioms(data):
    spec, x, y, z = data
    a, b, c = spec.element(x), spec.element(y), spec.element(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == spec.zero
    assert a * spec.one == a


@settings(max_examples=200, deadline=None)
@given(elements(nonzero=True))
def test_inverse_and_power(data):
    spec, x, _, _ = data
    a = spec.element(x)
    assert a * inv(a) == spec.one
    assert power(a, spec.q - 1) == spec.one
    assert power(a, -2) * power(a, 2) == spec.one


@settings(max_examples=200, deadline=None)
@given(elements())
def test_frobenius_is_a_field_automorphism(data):
    spec, x, y, _ = data
    a, b = spec.element(x), spec.element(y)
    assert frobenius(a + b, 1) == frobenius(a, 1) + frobenius(b, 1)
    assert frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1)
    assert frobenius(a, spec.a) == a
    assert frobenius(a, 1) == power(a, spec.p)


@settings(max_examples=200, deadline=None)
@given(elements())
def test_code_tables_agree_with_elements(data):
    spec, x, y, _ = data
    t = spec.tables
    a, b = spec.element(x), spec.element(y)
    assert t.add(x, y) == (a + b).code
    assert t.sub(x, y) == (a - b).code
    assert t.mul(x, y) == (a * b).code
    assert t.neg(x) == (-a).code
    if y:
        assert t.div(x, y) == (a / b).code
    assert t.power(x, 5) == power(a, 5).code


def test_vectorized_tables(f9):
    t = f9.tables
    codes = np.arange(9)
    assert t.mul_np(codes, np.full(9, 4)).tolist() == [t.mul(c, 4) for c in range(9)]
    assert t.add_np(codes, codes[::-1]).tolist() == [t.add(c, 8 - c) for c in range(9)]
    with pytest.raises(FieldArithmeticError):
        t.inv_np(codes)
