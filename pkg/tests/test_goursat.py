import numpy as np
import pytest

import oracles
from biharmonic import (
    GoursatPair,
    InvalidDegree,
    MonogenicFn,
    Phi0Params,
    components,
    cr_residual_compact,
    goursat_u,
    lift,
    phi0,
    preset,
    reconstruct,
    u1_kernel,
)
from biharmonic.goursat import pack_pair, phi0_vectors, u1_matrix, u1_round_trip_residual, unpack_pair
from biharmonic.sampling import random_goursat, random_holo, random_phi0
from biharmonic.sympoly import X, Y, ZBAR_XY, HoloPoly, RealBiPoly, is_zero_poly, substitute_z

B17 = preset("new_basis")


def gaussian_int_poly(rng, deg):
    return HoloPoly(rng.integers(-4, 5, deg + 1) + 1j * rng.integers(-4, 5, deg + 1))


def exact_goursat_u(psi, phi):
    """``Re(psi + zbar phi)`` in exact arithmetic."""
    z = oracles.X + oracles.Y * oracles.QQ_I(0, 1)
    zbar = oracles.X - oracles.Y * oracles.QQ_I(0, 1)
    return oracles.real_part(oracles.horner(psi.coeffs, z) + zbar * oracles.horner(phi.coeffs, z))


def test_worked_case_psi_zero_phi_z():
    m = reconstruct(GoursatPair(HoloPoly(), HoloPoly([0, 1])))
    assert m.F == HoloPoly([0, 0, 1])
    assert m.F0 == HoloPoly([0, 0, -1])
    assert components(m).U1 == X * X + Y * Y


def test_goursat_u_examples():
    assert goursat_u(GoursatPair([0, 1], [])) == X
    assert goursat_u(GoursatPair([], [0, 1])) == X * X + Y * Y
    assert goursat_u(GoursatPair([], [1j])) == RealBiPoly.from_terms([(0, 1, 1.0)])


def test_round_trip_random(rng):
    for _ in range(30):
        g = random_goursat(rng)
        for _ in range(3):
            p = random_phi0(rng)
            diff = components(reconstruct(g, p)).U1 - goursat_u(g)
            assert is_zero_poly(diff)
            assert u1_round_trip_residual(g, p) <= 1e-12


def test_round_trip_against_exact_oracle(rng):
    for _ in range(10):
        g = random_goursat(rng, 5)
        m = reconstruct(g)
        # exact U1 of the returned (F, F0); these carry the rounding of the primitive
        u1 = oracles.to_float_dict(oracles.components(B17, m.F, m.F0)[0])
        ref = oracles.to_float_dict(exact_goursat_u(g.psi, g.phi))
        scale = max(abs(v) for v in ref.values())
        assert all(abs(u1.get(k, 0) - ref.get(k, 0)) <= 1e-14 * scale for k in set(u1) | set(ref))


def test_lift_identity_exact_on_integer_data(rng):
    for _ in range(20):
        f1, f2 = gaussian_int_poly(rng, 5), gaussian_int_poly(rng, 5)
        expect = (substitute_z(f1) + ZBAR_XY * substitute_z(f2.derivative())).real
        assert (components(lift(f1, f2)).U1 - expect).max_abs() == 0.0


def test_lift_identity_random(rng):
    for _ in range(20):
        f1, f2 = random_holo(rng), random_holo(rng)
        expect = (substitute_z(f1) + ZBAR_XY * substitute_z(f2.derivative())).real
        assert is_zero_poly(components(lift(f1, f2)).U1 - expect)


def test_reconstruct_is_lift_of_primitive(rng):
    for _ in range(20):
        g = random_goursat(rng)
        assert reconstruct(g, Phi0Params()).allclose(lift(g.psi, g.phi.primitive()))


def test_primitive_constant_does_not_change_u1(rng):
    g = random_goursat(rng)
    shifted = lift(g.psi, g.phi.primitive() + 2.5 - 1j)
    assert is_zero_poly(components(shifted).U1 - goursat_u(g))


def test_phi0_closed_form():
    m = phi0(Phi0Params(a=1, b=2, c=3, d=4))
    assert m.F == HoloPoly([5j - 4, 1])
    assert m.F0 == HoloPoly([8j - 8, 1])


def test_phi0_matches_its_definition(rng):
    a, b, c, d = rng.standard_normal(4)
    m = phi0(Phi0Params(a, b, c, d))
    x, y = 0.3, 0.8
    zeta_plus = MonogenicFn(B17, [0, 1], [0, 1]).eval(x, y)  # zeta + z rho
    ref = a * zeta_plus + b * B17.ie1 + c * B17.e2 + d * B17.ie2
    assert m.eval(x, y).isclose(ref, rel_tol=1e-13)


def test_phi0_sound(rng):
    for _ in range(30):
        m = phi0(random_phi0(rng))
        assert is_zero_poly(components(m).U1)
        assert cr_residual_compact(m).is_zero()


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_kernel_dimension_matches_exact_rank(n):
    assert u1_kernel(n).dimension == oracles.u1_kernel_dimension(n)


def test_kernel_dimensions_frozen():
    # exact elimination gives 3, 5, then 6 from degree 2 on
    assert [u1_kernel(n).dimension for n in range(7)] == [3, 5, 6, 6, 6, 6, 6]


@pytest.mark.parametrize("n", range(1, 7))
def test_kernel_contains_phi0_image(n):
    rep = u1_kernel(n)
    assert all(rep.contains(v) for v in phi0_vectors(n))
    for F, F0 in rep.pairs():
        assert is_zero_poly(components(MonogenicFn(B17, F, F0)).U1)


def test_kernel_extra_direction_outside_phi0():
    # Re(D zbar z) = Re(D) |z|^2, so D = i gives U1 = 0 for Phi[i z^2, -i z^2]
    extra = MonogenicFn(B17, [0, 0, 1j], [0, 0, -1j])
    assert is_zero_poly(components(extra).U1)
    vec = pack_pair(extra.F, extra.F0, 2)
    assert u1_kernel(2).contains(vec)
    phi_span = np.array(phi0_vectors(2)).T
    coef, *_ = np.linalg.lstsq(phi_span, vec, rcond=None)
    assert np.linalg.norm(phi_span @ coef - vec) > 0.5


def test_kernel_rejects_non_kernel_vector():
    m = lift(HoloPoly([0, 1]), HoloPoly())
    assert not u1_kernel(3).contains(pack_pair(m.F, m.F0, 3))


def test_pack_unpack_round_trip(rng):
    F, F0 = random_holo(rng, 4, exact=True), random_holo(rng, 3)
    G, G0 = unpack_pair(pack_pair(F, F0, 4), 4)
    assert G == F and G0 == F0


def test_u1_matrix_shape_and_bad_degree():
    assert u1_matrix(2).shape == (9, 12)
    with pytest.raises(InvalidDegree):
        u1_kernel(-1)
