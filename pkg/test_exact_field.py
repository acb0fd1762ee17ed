"""
test_exact_field.py
───────────────────
Exact elimination over F_p and ℚ.

Usage:
    pytest test_exact_field.py
"""

from fractions import Fraction

import pytest

from exact_field import PrimeField, RationalField, parse_field

FIELDS = [PrimeField(101), PrimeField(7), RationalField()]


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_rank_of_dependent_rows(F):
    R, pivots = F.rref([[1, 2], [2, 4]])
    assert pivots == [0]
    assert F.rank([[1, 2], [2, 4]]) == 1


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_nullspace_is_annihilated(F):
    A = F.asarray([[1, 2, 3], [0, 1, 1]])
    N = F.nullspace(A)
    assert N.shape == (3, 1)
    assert F.is_zero(F.matmul(A, N))


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_inverse(F):
    A = F.asarray([[1, 2], [3, 4]])
    inv = F.inverse(A)
    assert inv is not None
    assert F.equal(F.matmul(A, inv), F.eye(2))


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_inconsistent_system(F):
    A = F.asarray([[1, 0], [0, 0]])
    B = F.asarray([[0], [1]])
    assert F.solve(A, B) is None


def test_singular_matrix_has_no_inverse():
    F = PrimeField(5)
    assert F.inverse(F.asarray([[1, 2], [2, 4]])) is None
    assert not F.is_invertible(F.asarray([[1, 2], [2, 4]]))


def test_prime_field_arithmetic():
    F = PrimeField(7)
    assert F.inv_scalar(3) == 5
    assert F.parse_element("1/2") == 4
    assert F.element(Fraction(1, 2)) == 4
    with pytest.raises(ZeroDivisionError):
        F.inv_scalar(7)


def test_rationals_stay_exact():
    F = RationalField()
    A = F.asarray([[2, 1], [1, 1]])
    inv = F.inverse(A)
    assert inv[0, 0] == Fraction(1)
    assert inv[0, 1] == Fraction(-1)
    assert inv[1, 1] == Fraction(2)


def test_parse_field():
    assert isinstance(parse_field("Q"), RationalField)
    assert parse_field("Fp:7") == PrimeField(7)
    assert parse_field(" fp:101 ").p == 101
    for bad in ("Fp:8", "R", "Fp:x"):
        with pytest.raises(ValueError):
            parse_field(bad)


def test_composite_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(9)
