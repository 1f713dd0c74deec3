import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from biharmonic import ONE, RHO, ZERO, AlgebraElement, NotInvertible, ZeroElement, inverse, is_zero_divisor
from biharmonic.algebra import mul_coords

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)
elements = st.builds(AlgebraElement, cplx, cplx)


def close(a, b, tol=1e-9):
    scale = max(1.0, a.coef_norm(), b.coef_norm())
    return (a - b).coef_norm() <= tol * scale


def test_rho_is_nilpotent():
    assert RHO * RHO == ZERO
    assert RHO != ZERO


def test_product_formula():
    a = AlgebraElement(2 + 1j, -3j)
    b = AlgebraElement(1 - 1j, 4)
    # (a1 b1, a1 b2 + a2 b1) by hand
    assert a * b == AlgebraElement((2 + 1j) * (1 - 1j), (2 + 1j) * 4 + (-3j) * (1 - 1j))


def test_inverse_closed_form():
    a = AlgebraElement(2, 3)
    assert a.inverse() == AlgebraElement(0.5, -0.75)
    assert inverse(a) * a == ONE


def test_zero_divisor_not_invertible():
    z = AlgebraElement(0, 2 - 1j)
    assert is_zero_divisor(z)
    assert not z.is_invertible()
    with pytest.raises(NotInvertible):
        z.inverse()
    with pytest.raises(NotInvertible):
        ONE / z


def test_zero_has_no_inverse():
    assert not ZERO.is_zero_divisor()
    with pytest.raises(ZeroElement):
        ZERO.inverse()


def test_scalar_mixing():
    a = AlgebraElement(1, 2)
    assert 2 * a == AlgebraElement(2, 4)
    assert a + 1 == AlgebraElement(2, 2)
    assert 1 - a == AlgebraElement(0, -2)
    assert a * 1j == AlgebraElement(1j, 2j)


def test_powers():
    a = AlgebraElement(1.5, -0.5j)
    assert close(a**3, a * a * a)
    assert close(a**-2 * a**2, ONE)
    assert a**0 == ONE


@pytest.mark.parametrize("bad", [math.nan, math.inf, complex(0, math.inf)])
def test_rejects_non_finite(bad):
    with pytest.raises(ValueError):
        AlgebraElement(bad, 0)


def test_mul_coords_vectorised():
    rng = np.random.default_rng(0)
    a = rng.standard_normal((2, 5)) + 1j * rng.standard_normal((2, 5))
    b = rng.standard_normal((2, 5)) + 1j * rng.standard_normal((2, 5))
    pe, pr = mul_coords(a[0], a[1], b[0], b[1])
    for k in range(5):
        ref = AlgebraElement(a[0, k], a[1, k]) * AlgebraElement(b[0, k], b[1, k])
        assert pe[k] == pytest.approx(ref.e_coef, rel=1e-15)
        assert pr[k] == pytest.approx(ref.rho_coef, rel=1e-15)


@given(elements, elements)
def test_commutative(a, b):
    assert close(a * b, b * a)


@given(elements, elements, elements)
def test_associative(a, b, c):
    assert close((a * b) * c, a * (b * c), 1e-7)


@given(elements, elements, elements)
def test_distributive(a, b, c):
    assert close(a * (b + c), a * b + a * c, 1e-7)


@given(elements)
def test_identity(a):
    assert a * ONE == a


@given(elements)
def test_inverse_property(a):
    assume(abs(a.e_coef) > 1e-3)
    assert close(a * a.inverse(), ONE)


def test_inverse_of_tiny_e_coefficient():
    assert AlgebraElement(1e-200j, 0).inverse() == AlgebraElement(-1e200j, 0)
    with pytest.raises(NotInvertible):
        AlgebraElement(1e-200, 1).inverse()


@given(cplx.filter(lambda w: w != 0))
def test_every_radical_element_is_zero_divisor(w):
    z = w * RHO
    assert is_zero_divisor(z)
    assert z * RHO == ZERO
