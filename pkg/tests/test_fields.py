"""Coefficient field arithmetic: exactness, canonical forms, guards."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradix.errors import CharacteristicForbidden, GradixError
from gradix.fields import GF, QQ, char_guard, field_add, field_mul, field_mul_inv


def test_rational_add():
    assert field_add(QQ, Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_gf3_add_wraps():
    F = GF(3)
    assert field_add(F, 2, 2) == 1


def test_add_identity():
    assert field_add(QQ, Fraction(7, 3), 0) == Fraction(7, 3)
    assert field_add(GF(5), 4, 0) == 4


def test_inverse_rational():
    assert field_mul_inv(QQ, Fraction(2, 3)) == Fraction(3, 2)


def test_inverse_gf5():
    assert field_mul_inv(GF(5), 2) == 3


def test_inverse_one():
    assert field_mul_inv(QQ, 1) == 1
    assert field_mul_inv(GF(7), 1) == 1


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        field_mul_inv(QQ, 0)
    with pytest.raises(ZeroDivisionError):
        field_mul_inv(GF(3), 0)


def test_char_guard():
    char_guard(QQ, [2])
    char_guard(GF(3), [2])
    with pytest.raises(CharacteristicForbidden) as exc:
        char_guard(GF(2), [2])
    assert exc.value.characteristic == 2


def test_gf_modulus_validation():
    with pytest.raises(GradixError):
        GF(4)
    with pytest.raises(GradixError):
        GF(1)
    with pytest.raises(GradixError):
        GF(2**31 + 11)
    assert GF(32003).characteristic == 32003


rationals = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert field_add(QQ, field_add(QQ, a, b), c) == field_add(QQ, a, field_add(QQ, b, c))
    assert field_mul(QQ, a, field_add(QQ, b, c)) == field_add(
        QQ, field_mul(QQ, a, b), field_mul(QQ, a, c)
    )
    if a != 0:
        assert field_mul(QQ, a, field_mul_inv(QQ, a)) == 1


@given(st.integers(0, 30), st.integers(0, 30), st.integers(0, 30))
def test_gf31_field_axioms(a, b, c):
    F = GF(31)
    assert field_add(F, field_add(F, a, b), c) == field_add(F, a, field_add(F, b, c))
    assert field_mul(F, a, field_add(F, b, c)) == field_add(
        F, field_mul(F, a, b), field_mul(F, a, c)
    )
    if a % 31:
        assert field_mul(F, a, field_mul_inv(F, a)) == 1


def test_no_overflow_on_huge_rationals():
    big = Fraction(10**80 + 1, 10**79)
    assert field_mul(QQ, big, field_mul_inv(QQ, big)) == 1
