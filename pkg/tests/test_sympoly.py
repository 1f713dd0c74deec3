from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from biharmonic import DegreeOverflow, preset
from biharmonic.sampling import random_basis, random_holo
from biharmonic.sympoly import (
    MAX_DEGREE,
    X,
    Y,
    Z,
    BiPoly,
    HoloPoly,
    RealBiPoly,
    is_zero_poly,
    relative_residual,
    substitute_plane,
    substitute_z,
)


def binomial_expansion(coeffs, a, b):
    """``sum_k c_k (a x + b y)^k`` expanded term by term with binomial coefficients."""
    out = {}
    for k, c in enumerate(coeffs):
        for j in range(k + 1):
            key = (k - j, j)
            out[key] = out.get(key, 0) + c * comb(k, j) * a ** (k - j) * b**j
    return out


def test_holo_trims_and_degree():
    assert HoloPoly([1, 2, 0, 0]).degree == 1
    assert HoloPoly().degree == -1 and HoloPoly([0]).is_zero()
    assert HoloPoly.monomial(3, 2).coef(3) == 2
    assert HoloPoly([1]).coef(9) == 0


def test_holo_arithmetic():
    p = HoloPoly([1, 1])
    assert p * p == HoloPoly([1, 2, 1])
    assert p - p == HoloPoly()
    assert 2 * p + 1 == HoloPoly([3, 2])
    assert Z * Z == HoloPoly.monomial(2)


def test_derivative_power_rule():
    p = HoloPoly([5, 3, -2j, 4])
    assert p.derivative() == HoloPoly([3, -4j, 12])
    assert HoloPoly([7]).derivative() == HoloPoly()


def test_primitive_has_zero_constant(rng):
    for _ in range(50):
        p = random_holo(rng, 10)
        P = p.primitive()
        assert P.coef(0) == 0
        assert P.derivative().allclose(p, 1e-14)


def test_horner_matches_polyval(rng):
    p = random_holo(rng, 8, exact=True)
    z = rng.standard_normal(20) + 1j * rng.standard_normal(20)
    assert np.allclose(p(z), np.polyval(p.coeffs[::-1], z), rtol=1e-13)
    assert HoloPoly()(z).shape == z.shape


def test_degree_cap():
    HoloPoly.monomial(MAX_DEGREE)
    with pytest.raises(DegreeOverflow):
        HoloPoly.monomial(MAX_DEGREE + 1)
    with pytest.raises(DegreeOverflow):
        HoloPoly.monomial(20) * HoloPoly.monomial(20)
    with pytest.raises(DegreeOverflow):
        (X**20) * (Y**20)


def test_bivariate_derivatives():
    q = RealBiPoly.from_terms([(3, 2, 2.0), (0, 1, -1.0)])  # 2 x^3 y^2 - y
    assert q.dx() == RealBiPoly.from_terms([(2, 2, 6.0)])
    assert q.dy() == RealBiPoly.from_terms([(3, 1, 4.0), (0, 0, -1.0)])
    assert q.dx().dy() == q.dy().dx()


def test_bilaplacian_of_known_functions():
    r2 = X * X + Y * Y
    assert (r2 * r2).bilaplacian() == RealBiPoly.constant(64.0)
    assert (X * r2).bilaplacian().is_zero()
    assert (X**4).laplacian() == 12 * X * X


def test_real_imag_conj():
    q = BiPoly.from_terms([(1, 0, 1 + 2j), (0, 1, -3j)])
    assert q.real == RealBiPoly.from_terms([(1, 0, 1.0)])
    assert q.imag == RealBiPoly.from_terms([(1, 0, 2.0), (0, 1, -3.0)])
    assert q.conj().imag == -q.imag


def test_evaluation_matches_terms(rng):
    q = BiPoly.from_terms([(i, j, complex(*rng.standard_normal(2))) for i in range(4) for j in range(3)])
    x, y = 0.7, -0.4
    ref = sum(c * x**i * y**j for i, j, c in q.terms())
    assert q(x, y) == pytest.approx(ref, rel=1e-13)


def test_substitute_plane_binomial_oracle(rng):
    for _ in range(30):
        b = random_basis(rng)
        p = random_holo(rng, 7)
        got = substitute_plane(p, b)
        ref = binomial_expansion(p.coeffs, b.alpha1, b.sign * 1j * b.alpha1)
        scale = max(1.0, max(abs(v) for v in ref.values()))
        for key in set(ref) | {(i, j) for i, j, _ in got.terms()}:
            assert abs(got.coef(*key) - ref.get(key, 0)) <= 1e-12 * scale


def test_substitute_z_worked():
    q = substitute_z(Z * Z)  # x^2 - y^2 + 2ixy
    assert q == BiPoly.from_terms([(2, 0, 1), (0, 2, -1), (1, 1, 2j)])


def test_holomorphic_parts_are_harmonic(rng):
    b = preset("gp_basis")
    for _ in range(20):
        img = substitute_plane(random_holo(rng, 8), b)
        assert is_zero_poly(img.real.laplacian())
        assert is_zero_poly(img.imag.laplacian())


def test_scale_tracks_cancellation():
    big = RealBiPoly.constant(1e8)
    q = (big + X) - big
    assert q.scale >= 1e8
    assert relative_residual(RealBiPoly.constant(1e-3)) == pytest.approx(1e-3 / 1.001)
    assert is_zero_poly((big + 1e-5) - big)
    assert not is_zero_poly(RealBiPoly.constant(1e-5))


coef = st.builds(complex, st.floats(-10, 10), st.floats(-10, 10))
holo = st.lists(coef, max_size=6).map(HoloPoly)


@settings(max_examples=100)
@given(holo, holo, holo)
def test_ring_laws(p, q, r):
    assert (p * q).allclose(q * p)
    assert ((p * q) * r).allclose(p * (q * r), 1e-10)
    assert (p * (q + r)).allclose(p * q + p * r, 1e-10)
    assert (p * q).derivative().allclose(p.derivative() * q + p * q.derivative(), 1e-10)


@settings(max_examples=50)
@given(holo, holo)
def test_substitution_is_homomorphism(p, q):
    b = preset("new_basis")
    diff = substitute_plane(p * q, b) - substitute_plane(p, b) * substitute_plane(q, b)
    assert is_zero_poly(diff, 1e-12)
