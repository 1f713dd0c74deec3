"""Biharmonic bases of B and coordinate changes to and from them.

Every biharmonic basis has the form::

    e1 = alpha1 e + beta1 rho
    e2 = sign * i * (alpha1 e + beta2 rho)

with ``alpha1 != 0`` and ``beta1 != beta2``.  A basis is stored by these four
parameters; the elements ``e1`` and ``e2`` are derived once at construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .algebra import REL_TOL, AlgebraElement, as_complex
from .errors import InvalidBasis

IDENTITY_TOL = 1e-10  # relative to the largest basis vector, in {e, rho} coordinates


def parse_sign(sign) -> int:
    if sign in (1, "+", "+1"):
        return 1
    if sign in (-1, "-", "-1"):
        return -1
    raise InvalidBasis(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class BiharmonicBasis:
    alpha1: complex
    beta1: complex
    beta2: complex
    sign: int = 1
    e1: AlgebraElement = field(init=False, repr=False, compare=False)
    e2: AlgebraElement = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        try:
            alpha1 = as_complex(self.alpha1, "alpha1")
            beta1 = as_complex(self.beta1, "beta1")
            beta2 = as_complex(self.beta2, "beta2")
        except (TypeError, ValueError) as exc:
            raise InvalidBasis(str(exc)) from None
        sign = parse_sign(self.sign)
        if alpha1 == 0:
            raise InvalidBasis("alpha1 must be nonzero")
        if beta1 == beta2:
            raise InvalidBasis("beta1 must differ from beta2")
        object.__setattr__(self, "alpha1", alpha1)
        object.__setattr__(self, "beta1", beta1)
        object.__setattr__(self, "beta2", beta2)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "e1", AlgebraElement(alpha1, beta1))
        object.__setattr__(self, "e2", AlgebraElement(sign * 1j * alpha1, sign * 1j * beta2))
        report = verify_biharmonic_identity(self)
        if not report.ok:
            raise InvalidBasis(f"identity check failed: residual {report.residual:.3e}")

    @property
    def sign_str(self) -> str:
        return "+" if self.sign > 0 else "-"

    @property
    def ie1(self) -> AlgebraElement:
        return 1j * self.e1

    @property
    def ie2(self) -> AlgebraElement:
        return 1j * self.e2

    def vectors(self):
        """The real basis ``(e1, i e1, e2, i e2)`` of B as a 4-dim real space."""
        return (self.e1, self.ie1, self.e2, self.ie2)


def make_basis(alpha1, beta1, beta2, sign=1) -> BiharmonicBasis:
    return BiharmonicBasis(alpha1, beta1, beta2, sign)


# -- defining identity -------------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    lhs: AlgebraElement  # e1^4 + 2 e1^2 e2^2 + e2^4
    sum_sq: AlgebraElement  # e1^2 + e2^2
    residual: float  # |lhs| / |e1|^4
    ok: bool


def verify_biharmonic_identity(b, tol=IDENTITY_TOL) -> IdentityReport:
    """Check ``(e1^2 + e2^2)^2 = 0`` and ``e1^2 + e2^2 != 0``.

    ``b`` is either a :class:`BiharmonicBasis` or a raw pair ``(e1, e2)`` of
    algebra elements, so that arbitrary candidate pairs can be tested.
    """
    e1, e2 = (b.e1, b.e2) if isinstance(b, BiharmonicBasis) else b
    s1, s2 = e1 * e1, e2 * e2
    lhs = s1 * s1 + 2 * s1 * s2 + s2 * s2
    sum_sq = s1 + s2
    scale = max(e1.coef_norm(), e2.coef_norm())
    if scale == 0:
        return IdentityReport(lhs, sum_sq, 0.0, False)
    residual = lhs.coef_norm() / scale**4
    nonzero = sum_sq.coef_norm() > tol * scale**2
    return IdentityReport(lhs, sum_sq, residual, residual <= tol and nonzero)


@dataclass(frozen=True)
class ProductTable:
    e1_sq: AlgebraElement
    e2_sq: AlgebraElement
    e1_e2: AlgebraElement


def product_table(b: BiharmonicBasis) -> ProductTable:
    """Closed-form products of the basis vectors.

    ``ek^2 = (-1)^(k+1) alpha1 (alpha1 e + 2 beta_k rho)`` and
    ``e1 e2 = sign i alpha1 (alpha1 e + (beta1 + beta2) rho)``.
    """
    a = b.alpha1
    return ProductTable(
        e1_sq=a * AlgebraElement(a, 2 * b.beta1),
        e2_sq=-a * AlgebraElement(a, 2 * b.beta2),
        e1_e2=b.sign * 1j * a * AlgebraElement(a, b.beta1 + b.beta2),
    )


# -- presets -----------------------------------------------------------------

PRESETS = ("gp_basis", "new_basis", "e_identity")


def preset(name: str, beta2=None, sign=1) -> BiharmonicBasis:
    """Named bases.

    ``gp_basis``   -- (1, 0, -1/2, +), the basis with ``e1 = e``, ``e2^2 = e1 + 2 i e2``
    ``new_basis``  -- (1, 1, 2, +), i.e. ``e1 = e + rho``, ``e2 = i (e + 2 rho)``
    ``e_identity`` -- (1, 0, beta2, sign) with free nonzero ``beta2``
    """
    if name == "gp_basis":
        return BiharmonicBasis(1, 0, -0.5, 1)
    if name == "new_basis":
        return BiharmonicBasis(1, 1, 2, 1)
    if name == "e_identity":
        if beta2 is None:
            raise InvalidBasis("e_identity preset needs beta2")
        return BiharmonicBasis(1, 0, beta2, sign)
    raise InvalidBasis(f"unknown preset {name!r}; expected one of {PRESETS}")


# -- coordinates -------------------------------------------------------------


def split_coords(w_e, w_rho, b: BiharmonicBasis):
    """Solve ``w_e e + w_rho rho = c1 e1 + c2 e2`` for complex ``c1, c2``.

    Only additions and scalar multiplications are used, so the inputs may be
    complex numbers, numpy arrays or polynomials.
    """
    a, b1, b2, s = b.alpha1, b.beta1, b.beta2, b.sign
    d = b2 - b1
    c1 = w_e * (b2 / (a * d)) + w_rho * (-1 / d)
    c2 = w_rho * (1 / (s * 1j * d)) + w_e * (-b1 / (s * 1j * a * d))
    return c1, c2


def join_coords(c1, c2, b: BiharmonicBasis):
    """Inverse of :func:`split_coords`: ``c1 e1 + c2 e2`` as ``(w_e, w_rho)``."""
    a, s = b.alpha1, b.sign
    w_e = c1 * a + c2 * (s * 1j * a)
    w_rho = c1 * b.beta1 + c2 * (s * 1j * b.beta2)
    return w_e, w_rho


@dataclass(frozen=True)
class RealComponents:
    """Coefficients over the real basis ``(e1, i e1, e2, i e2)``."""

    u1: float
    u2: float
    u3: float
    u4: float

    def as_tuple(self):
        return (self.u1, self.u2, self.u3, self.u4)

    def recompose(self, b: BiharmonicBasis) -> AlgebraElement:
        w_e, w_rho = join_coords(complex(self.u1, self.u2), complex(self.u3, self.u4), b)
        return AlgebraElement(w_e, w_rho)


def decompose(a: AlgebraElement, b: BiharmonicBasis) -> RealComponents:
    c1, c2 = split_coords(a.e_coef, a.rho_coef, b)
    return RealComponents(c1.real, c1.imag, c2.real, c2.imag)


def norm_in_basis(a: AlgebraElement, b: BiharmonicBasis) -> float:
    """``sqrt(|z1|^2 + |z2|^2)`` where ``a = z1 e1 + z2 e2``."""
    c1, c2 = split_coords(a.e_coef, a.rho_coef, b)
    return math.hypot(abs(c1), abs(c2))


def zeta_embed(x: float, y: float, b: BiharmonicBasis) -> AlgebraElement:
    """The point ``zeta = x e1 + y e2`` of the plane spanned by the basis."""
    return AlgebraElement(*join_coords(float(x), float(y), b))


def z_map(x: float, y: float, b: BiharmonicBasis) -> complex:
    """Complex variable ``Z = alpha1 (x + sign i y)``."""
    return b.alpha1 * complex(x, b.sign * y)


def same_basis(a: BiharmonicBasis, b: BiharmonicBasis, rel_tol=REL_TOL) -> bool:
    return a.sign == b.sign and all(
        abs(p - q) <= rel_tol * max(1.0, abs(p), abs(q))
        for p, q in ((a.alpha1, b.alpha1), (a.beta1, b.beta1), (a.beta2, b.beta2))
    )

