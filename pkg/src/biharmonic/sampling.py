"""Random draws of bases, polynomials and monogenic functions for property checks."""

from __future__ import annotations

import numpy as np

from .algebra import AlgebraElement
from .bases import BiharmonicBasis
from .goursat import GoursatPair, Phi0Params
from .monogenic import MonogenicFn
from .sympoly import HoloPoly


def complex_normal(rng: np.random.Generator, size=None, scale=1.0):
    return scale * (rng.standard_normal(size) + 1j * rng.standard_normal(size))


def random_alpha(rng, lo=0.1, hi=10.0) -> complex:
    """Log-uniform modulus in ``[lo, hi]``, uniform phase."""
    r = np.exp(rng.uniform(np.log(lo), np.log(hi)))
    return complex(r * np.exp(1j * rng.uniform(0, 2 * np.pi)))


def random_basis(rng, lo=0.1, hi=10.0) -> BiharmonicBasis:
    alpha1 = random_alpha(rng, lo, hi)
    while True:
        beta1, beta2 = complex_normal(rng, 2)
        if abs(beta1 - beta2) > 1e-3:
            break
    sign = 1 if rng.random() < 0.5 else -1
    return BiharmonicBasis(alpha1, complex(beta1), complex(beta2), sign)


def random_element(rng, scale=1.0) -> AlgebraElement:
    a, b = complex_normal(rng, 2, scale)
    return AlgebraElement(complex(a), complex(b))


def random_invertible(rng) -> AlgebraElement:
    while True:
        a = random_element(rng)
        if abs(a.e_coef) > 1e-3:
            return a


def random_holo(rng, max_degree=6, exact=False) -> HoloPoly:
    deg = max_degree if exact else int(rng.integers(0, max_degree + 1))
    return HoloPoly(complex_normal(rng, deg + 1))


def random_monogenic(rng, basis=None, max_degree=6, exact=False) -> MonogenicFn:
    basis = random_basis(rng) if basis is None else basis
    return MonogenicFn(basis, random_holo(rng, max_degree, exact), random_holo(rng, max_degree, exact))


def random_goursat(rng, max_degree=6) -> GoursatPair:
    return GoursatPair(random_holo(rng, max_degree), random_holo(rng, max_degree))


def random_phi0(rng) -> Phi0Params:
    return Phi0Params(*rng.standard_normal(4))
