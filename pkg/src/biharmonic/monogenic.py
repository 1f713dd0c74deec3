"""Monogenic functions Phi[F, F0] over a biharmonic basis.

With ``Z = alpha1 (x + sign i y)`` every monogenic function has the form::

    Phi[F, F0](zeta) = F(Z) e + ((beta1/alpha1 Z + sign i (beta2 - beta1) y) F'(Z) + F0(Z)) rho

for holomorphic ``F`` and ``F0``.  Here both are polynomials, so the four real
components over ``(e1, i e1, e2, i e2)`` are polynomials in ``x, y`` and every
claimed identity can be checked coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number

import numpy as np

from .algebra import AlgebraElement, mul_coords
from .bases import BiharmonicBasis, join_coords, product_table, same_basis, split_coords
from .sympoly import BiPoly, HoloPoly, RealBiPoly, is_zero_poly, linear, relative_residual, substitute_plane

ZERO_TOL = 1e-10


@dataclass(frozen=True)
class ComponentSet:
    """The real components ``U1..U4`` of a B-valued function."""

    U1: RealBiPoly
    U2: RealBiPoly
    U3: RealBiPoly
    U4: RealBiPoly

    def as_tuple(self):
        return (self.U1, self.U2, self.U3, self.U4)

    def coordinate_polys(self, basis: BiharmonicBasis):
        """``sum Uk * (k-th real basis vector)`` as polynomials over ``{e, rho}``."""
        c1 = self.U1 + 1j * self.U2
        c2 = self.U3 + 1j * self.U4
        return join_coords(c1, c2, basis)

    def __call__(self, x, y):
        return tuple(u(x, y) for u in self.as_tuple())


@dataclass(frozen=True)
class MonogenicFn:
    basis: BiharmonicBasis
    F: HoloPoly
    F0: HoloPoly

    def __post_init__(self):
        for name in ("F", "F0"):
            value = getattr(self, name)
            if not isinstance(value, HoloPoly):
                object.__setattr__(self, name, HoloPoly(value))

    # -- numeric evaluation --
    def coords(self, x, y):
        """``(w_e, w_rho)`` at ``(x, y)``; vectorised over numpy arrays."""
        b = self.basis
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        z = b.alpha1 * (x + b.sign * 1j * y)
        shift = b.beta1 / b.alpha1 * z + b.sign * 1j * (b.beta2 - b.beta1) * y
        w_e = self.F(z) + 0 * z
        w_rho = shift * self.F.derivative()(z) + self.F0(z)
        return w_e, w_rho

    def eval(self, x: float, y: float) -> AlgebraElement:
        w_e, w_rho = self.coords(float(x), float(y))
        return AlgebraElement(complex(w_e), complex(w_rho))

    __call__ = eval

    # -- symbolic form --
    def coordinate_polys(self):
        """``(w_e, w_rho)`` as polynomials in ``x, y``."""
        b = self.basis
        z = substitute_plane(HoloPoly([0, 1]), b)
        # beta1/alpha1 Z + sign i (beta2 - beta1) y  ==  beta1 x + sign i beta2 y
        shift = linear(b.beta1, b.sign * 1j * b.beta2)
        w_e = self.F(z)
        w_rho = shift * self.F.derivative()(z) + self.F0(z)
        return _as_bipoly(w_e), _as_bipoly(w_rho)

    def components(self) -> ComponentSet:
        return components(self)

    def derivative(self) -> "MonogenicFn":
        return derivative(self)

    # -- the class is closed under linear combinations --
    def __add__(self, other):
        if not isinstance(other, MonogenicFn):
            return NotImplemented
        _require_same_basis(self.basis, other.basis)
        return MonogenicFn(self.basis, self.F + other.F, self.F0 + other.F0)

    def __neg__(self):
        return MonogenicFn(self.basis, -self.F, -self.F0)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, Number):
            return NotImplemented
        return MonogenicFn(self.basis, self.F * scalar, self.F0 * scalar)

    __rmul__ = __mul__

    def allclose(self, other: "MonogenicFn", rel_tol=1e-12) -> bool:
        return (
            same_basis(self.basis, other.basis)
            and self.F.allclose(other.F, rel_tol)
            and self.F0.allclose(other.F0, rel_tol)
        )


@dataclass(frozen=True)
class RawAssembly:
    """``U1 e1 + U2 ie1 + U3 e2 + U4 ie2`` for arbitrary real polynomials.

    Not monogenic in general; used to exercise the Cauchy-Riemann checks on
    inputs that should fail them.
    """

    basis: BiharmonicBasis
    comps: ComponentSet

    @classmethod
    def of(cls, basis, u1, u2, u3, u4):
        return cls(basis, ComponentSet(u1, u2, u3, u4))

    def coordinate_polys(self):
        w_e, w_rho = self.comps.coordinate_polys(self.basis)
        return _as_bipoly(w_e), _as_bipoly(w_rho)

    def coords(self, x, y):
        u1, u2, u3, u4 = self.comps(np.asarray(x, float), np.asarray(y, float))
        return join_coords(u1 + 1j * u2, u3 + 1j * u4, self.basis)

    def eval(self, x, y) -> AlgebraElement:
        w_e, w_rho = self.coords(float(x), float(y))
        return AlgebraElement(complex(w_e), complex(w_rho))

    def components(self) -> ComponentSet:
        return self.comps


def _as_bipoly(p) -> BiPoly:
    return p if isinstance(p, BiPoly) else BiPoly(p.c, p.scale)


def _require_same_basis(a, b):
    if not same_basis(a, b):
        raise ValueError("monogenic functions live on different bases")


def build(basis: BiharmonicBasis, F, F0) -> MonogenicFn:
    return MonogenicFn(basis, F, F0)


def eval_at(m: MonogenicFn, x: float, y: float) -> AlgebraElement:
    return m.eval(x, y)


def components(m: MonogenicFn) -> ComponentSet:
    """Split ``Phi`` into ``U1..U4`` symbolically."""
    w_e, w_rho = m.coordinate_polys()
    c1, c2 = split_coords(w_e, w_rho, m.basis)
    return ComponentSet(c1.real, c1.imag, c2.real, c2.imag)


def derivative(m: MonogenicFn) -> MonogenicFn:
    """``Phi[F, F0]' = Phi[F', F0']``."""
    return MonogenicFn(m.basis, m.F.derivative(), m.F0.derivative())


def derivative_from_dx(m):
    """``(dPhi/dx) * e1^-1`` in ``{e, rho}`` polynomial coordinates.

    For a monogenic function this equals the derivative; it is computed
    straight from the expanded coordinates, without the closed form.
    """
    w_e, w_rho = m.coordinate_polys()
    inv = m.basis.e1.inverse()
    return mul_coords(w_e.dx(), w_rho.dx(), inv.e_coef, inv.rho_coef)


# ---------------------------------------------------------------------------
# Cauchy-Riemann analogue
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CRResidual:
    """``dPhi/dy e1 - dPhi/dx e2`` in ``{e, rho}`` coordinates."""

    e_part: BiPoly
    rho_part: BiPoly

    def is_zero(self, tol=ZERO_TOL) -> bool:
        return is_zero_poly(self.e_part, tol) and is_zero_poly(self.rho_part, tol)

    def residual(self) -> float:
        return max(relative_residual(self.e_part), relative_residual(self.rho_part))


def cr_residual_compact(m) -> CRResidual:
    """Works for :class:`MonogenicFn` and :class:`RawAssembly` alike."""
    b = m.basis
    w_e, w_rho = m.coordinate_polys()
    ye, yr = mul_coords(w_e.dy(), w_rho.dy(), b.e1.e_coef, b.e1.rho_coef)
    xe, xr = mul_coords(w_e.dx(), w_rho.dx(), b.e2.e_coef, b.e2.rho_coef)
    return CRResidual(_as_bipoly(ye - xe), _as_bipoly(yr - xr))


def cr_residual_expanded(c: ComponentSet, b: BiharmonicBasis):
    """Left-hand sides of the four real equations equivalent to the CR condition."""
    s = b.sign
    u1, u2, u3, u4 = c.as_tuple()
    u1x, u2x, u3x, u4x = (u.dx() for u in (u1, u2, u3, u4))
    u1y, u2y, u3y, u4y = (u.dy() for u in (u1, u2, u3, u4))
    rb1, ib1 = b.beta1.real, b.beta1.imag
    rb2, ib2 = b.beta2.real, b.beta2.imag
    rs, is_ = (b.beta1 + b.beta2).real, (b.beta1 + b.beta2).imag

    eq1 = u1y - s * u4y + s * u2x + u3x
    eq2 = u2y + s * u3y - s * u1x + u4x
    eq3 = (
        2 * rb1 * u1y - 2 * ib1 * u2y - s * is_ * u3y - s * rs * u4y
        + s * is_ * u1x + s * rs * u2x + 2 * rb2 * u3x - 2 * ib2 * u4x
    )
    eq4 = (
        2 * ib1 * u1y + 2 * rb1 * u2y + s * rs * u3y - s * is_ * u4y
        - s * rs * u1x + s * is_ * u2x + 2 * ib2 * u3x + 2 * rb2 * u4x
    )
    return tuple(_as_real(e) for e in (eq1, eq2, eq3, eq4))


def _as_real(p) -> RealBiPoly:
    return p if isinstance(p, RealBiPoly) else RealBiPoly(p.c.real, p.scale)


def expanded_is_zero(residuals, tol=ZERO_TOL) -> bool:
    return all(is_zero_poly(r, tol) for r in residuals)


# ---------------------------------------------------------------------------
# biharmonicity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BiharmonicReport:
    bilaplacians: tuple  # bilaplacian of U1..U4
    residuals: tuple  # relative residual of each
    multiplier: AlgebraElement  # (e1^2 + e2^2)^2
    ok: bool


def biharmonic_check(m, tol=ZERO_TOL) -> BiharmonicReport:
    comps = m.components()
    bil = tuple(u.bilaplacian() for u in comps.as_tuple())
    res = tuple(relative_residual(q) for q in bil)
    t = product_table(m.basis)
    sum_sq = t.e1_sq + t.e2_sq
    mult = sum_sq * sum_sq
    scale = max(m.basis.e1.coef_norm(), m.basis.e2.coef_norm()) ** 4
    ok = all(is_zero_poly(q, tol) for q in bil) and mult.coef_norm() <= tol * scale
    return BiharmonicReport(bil, res, mult, ok)
