from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from solvres import GF, QQ, Field, Residue
from solvres.errors import DivisionByZero, FieldMismatch

rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f.numerator) < 10**6)
F7 = GF(7)
F101 = GF(101)
residues = st.integers(0, 100).map(F101)


def test_rational_addition():
    assert QQ(Fraction(1, 2)) + QQ(Fraction(1, 3)) == Fraction(5, 6)


def test_inverse_mod_7():
    assert F7.inv(F7(3)) == F7(5)
    # brute force
    assert [x for x in range(7) if (3 * x) % 7 == 1] == [5]


def test_additive_identity():
    assert QQ(Fraction(3, 4)) + QQ.zero == Fraction(3, 4)
    assert F7(4) + F7.zero == F7(4)


def test_fraction_inputs_are_accepted():
    c = QQ(Fraction(-7, 3))
    assert QQ.contains(c)
    assert c == Fraction(-7, 3) and hash(c) == hash(Fraction(-7, 3))
    assert F7(Fraction(1, 2)) == F7(4)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        F7.inv(F7(0))
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ(0))


def test_mixing_fields_is_rejected():
    with pytest.raises(FieldMismatch):
        F7(1) + GF(5)(1)
    with pytest.raises(FieldMismatch):
        F7(1) + QQ(Fraction(1, 2))


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        GF(6)


def test_from_string():
    assert Field.from_string("QQ") == QQ
    assert Field.from_string("GF(7)") == F7


@given(rationals, rationals, rationals)
def test_qq_axioms(a, b, c):
    a, b, c = QQ(a), QQ(b), QQ(c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * QQ.inv(a) == 1


@given(residues, residues, residues)
def test_gf_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F101.zero
    if a:
        assert a * F101.inv(a) == F101.one


@given(rationals)
def test_qq_round_trip(c):
    c = QQ(c)
    assert QQ.parse(QQ.render(c)) == c


@given(residues)
def test_gf_round_trip(c):
    assert F101.parse(F101.render(c)) == c
    assert isinstance(c, Residue)
