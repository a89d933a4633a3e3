import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfg.scalars import CycField, FieldParams, get_field


@pytest.fixture(scope="module")
def F():
    return get_field(3, 4)


def test_conductor_covers_half_label_exponents():
    p = FieldParams(3, 4)
    assert p.N == 96
    assert p.rprime == 3
    assert CycField(p).degree == 32
    assert FieldParams(5, 4).N == 160


@pytest.mark.parametrize("r, D", [(1, 4), (4, 4), (3, 0)])
def test_bad_params(r, D):
    with pytest.raises(ValueError):
        FieldParams(r, D)


def test_q_is_primitive_rth_root(F):
    q = F.q_power(1)
    assert q ** 3 == F.one
    assert q != F.one
    assert abs(q.to_complex() - cmath.exp(2j * cmath.pi / 3)) < 1e-12


def test_q_power_outside_field(F):
    with pytest.raises(ValueError):
        F.q_power(Fraction(1, 64))


def test_sqrt_rprime(F):
    s = F.sqrt_rprime()
    assert s * s == F(3)
    assert s.to_complex().real > 0


def test_quantum_integers(F):
    # [3] = 0 at r = 3, [2] = q + q^-1 = -1
    assert F.qint(3).is_zero()
    assert F.qint(2) == F(-1)
    assert F.qbinomial(2, 1) == F.qint(2)
    assert F.qbinomial(2, 3).is_zero()


def test_inverse_and_division(F):
    x = F.q_power(Fraction(1, 32)) + F(2)
    assert x * x.inverse() == F.one
    assert (F.one / x) * x == F.one


exps = st.fractions(min_value=-4, max_value=4, max_denominator=32).filter(
    lambda e: (e * 32).denominator == 1)


@settings(max_examples=60, deadline=None)
@given(exps, exps)
def test_q_power_is_a_homomorphism(a, b):
    F = get_field(3, 4)
    assert F.q_power(a) * F.q_power(b) == F.q_power(a + b)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6),
       st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_field_axioms_and_embedding(u, v):
    F = get_field(3, 4)
    x = sum((F(c) * F.zeta_power(k) for k, c in enumerate(u)), F.zero)
    y = sum((F(c) * F.zeta_power(3 * k) for k, c in enumerate(v)), F.zero)
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-9
    if not y.is_zero():
        assert (x / y) * y == x
