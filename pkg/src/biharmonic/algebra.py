"""Arithmetic in the algebra B = {z1 e + z2 rho : z1, z2 complex}.

The multiplication table is ``e*e = e``, ``e*rho = rho``, ``rho*rho = 0``, so an
element behaves like a dual number with complex parts::

    (a1 e + a2 rho)(b1 e + b2 rho) = a1 b1 e + (a1 b2 + a2 b1) rho

Elements are immutable and hashable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from numbers import Number

from .errors import NotInvertible, ZeroElement

#: relative tolerance used by the float-valued identity checks
REL_TOL = 1e-12


def as_complex(value, name="value") -> complex:
    """Coerce ``value`` to a finite Python complex."""
    z = complex(value)
    if not (cmath.isfinite(z)):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return z


@dataclass(frozen=True)
class AlgebraElement:
    """``e_coef * e + rho_coef * rho``."""

    e_coef: complex = 0j
    rho_coef: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "e_coef", as_complex(self.e_coef, "e coefficient"))
        object.__setattr__(self, "rho_coef", as_complex(self.rho_coef, "rho coefficient"))

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.e_coef + other.e_coef, self.rho_coef + other.rho_coef)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(-self.e_coef, -self.rho_coef)

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.e_coef - other.e_coef, self.rho_coef - other.rho_coef)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            c = complex(other)
            return AlgebraElement(c * self.e_coef, c * self.rho_coef)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        a1, a2 = self.e_coef, self.rho_coef
        b1, b2 = other.e_coef, other.rho_coef
        return AlgebraElement(a1 * b1, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return self * (1 / complex(other))
        if isinstance(other, AlgebraElement):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        # (a e + b rho)^n = a^n e + n a^(n-1) b rho
        if n == 0:
            return ONE
        a, b = self.e_coef, self.rho_coef
        return AlgebraElement(a**n, n * a ** (n - 1) * b)

    # -- classification --------------------------------------------------
    def is_zero(self) -> bool:
        return self.e_coef == 0 and self.rho_coef == 0

    def is_zero_divisor(self) -> bool:
        """True for the nonzero radical elements ``w * rho``. Zero is excluded."""
        return self.e_coef == 0 and self.rho_coef != 0

    def is_invertible(self) -> bool:
        return self.e_coef != 0

    def inverse(self) -> "AlgebraElement":
        if self.is_zero():
            raise ZeroElement("the zero element has no inverse")
        if self.e_coef == 0:
            raise NotInvertible(f"{self} is a zero divisor")
        inv = 1 / self.e_coef
        rho = -(self.rho_coef * inv) * inv  # avoids squaring a tiny e_coef first
        if not (cmath.isfinite(inv) and cmath.isfinite(rho)):
            raise NotInvertible(f"inverse of {self} overflows")
        return AlgebraElement(inv, rho)

    # -- comparisons -----------------------------------------------------
    def coef_norm(self) -> float:
        """Euclidean norm of the coordinates over ``{e, rho}``."""
        return math.hypot(abs(self.e_coef), abs(self.rho_coef))

    def isclose(self, other, rel_tol=REL_TOL, abs_tol=0.0) -> bool:
        other = _lift(other)
        scale = max(self.coef_norm(), other.coef_norm())
        return (self - other).coef_norm() <= max(rel_tol * scale, abs_tol)

    def to_tuple(self):
        return (self.e_coef, self.rho_coef)

    def __repr__(self):
        return f"AlgebraElement(e={self.e_coef!r}, rho={self.rho_coef!r})"

    def __str__(self):
        return f"({self.e_coef})e + ({self.rho_coef})rho"


def _lift(value):
    if isinstance(value, AlgebraElement):
        return value
    if isinstance(value, Number):
        return AlgebraElement(complex(value), 0j)
    return NotImplemented


ZERO = AlgebraElement(0j, 0j)
ONE = AlgebraElement(1 + 0j, 0j)
E = ONE
RHO = AlgebraElement(0j, 1 + 0j)


def inverse(a: AlgebraElement) -> AlgebraElement:
    return a.inverse()


def is_zero_divisor(a: AlgebraElement) -> bool:
    return a.is_zero_divisor()


def mul_coords(a_e, a_rho, b_e, b_rho):
    """Product on raw coordinates; works elementwise on arrays and on polynomials."""
    return a_e * b_e, a_e * b_rho + a_rho * b_e
