"""Dense polynomials used as the symbolic backend.

:class:`HoloPoly` is a univariate polynomial with complex coefficients (a
holomorphic function of one complex variable).  :class:`BiPoly` and
:class:`RealBiPoly` are polynomials in the real variables ``x`` and ``y``
stored as a dense coefficient array ``c[i, j]`` for the monomial ``x**i y**j``.

Bivariate polynomials carry a ``scale``: an upper estimate of the coefficient
magnitudes that were combined to build them.  Zero tests are made relative to
it, so that float cancellation in a long chain of operations is not mistaken
for a nonzero result.
"""

from __future__ import annotations

from numbers import Number

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DegreeOverflow

MAX_DEGREE = 32


def _check_degree(deg: int, cap: int = MAX_DEGREE):
    if deg > cap:
        raise DegreeOverflow(f"degree {deg} exceeds cap {cap}")


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------


class HoloPoly:
    """``sum_k coeffs[k] * z**k`` with complex coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        if not np.all(np.isfinite(c)):
            raise ValueError("polynomial coefficients must be finite")
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:0]
        _check_degree(len(c) - 1)
        c.setflags(write=False)
        self.coeffs = c

    @classmethod
    def monomial(cls, k: int, coef=1.0):
        c = np.zeros(k + 1, dtype=complex)
        c[k] = coef
        return cls(c)

    @classmethod
    def constant(cls, value):
        return cls([value])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def coef(self, k: int) -> complex:
        return complex(self.coeffs[k]) if 0 <= k < len(self.coeffs) else 0j

    def padded(self, n: int) -> np.ndarray:
        out = np.zeros(n, dtype=complex)
        m = min(n, len(self.coeffs))
        out[:m] = self.coeffs[:m]
        return out

    # -- arithmetic --
    def __add__(self, other):
        other = _as_holo(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return HoloPoly(self.padded(n) + other.padded(n))

    __radd__ = __add__

    def __neg__(self):
        return HoloPoly(-self.coeffs)

    def __sub__(self, other):
        other = _as_holo(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            return HoloPoly(self.coeffs * complex(other))
        if not isinstance(other, HoloPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return HoloPoly()
        return HoloPoly(np.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HoloPoly):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def allclose(self, other, rel_tol=1e-12) -> bool:
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.padded(n), other.padded(n)
        scale = max(1.0, float(np.max(np.abs(a), initial=0)), float(np.max(np.abs(b), initial=0)))
        return bool(np.all(np.abs(a - b) <= rel_tol * scale))

    # -- calculus --
    def derivative(self) -> "HoloPoly":
        if self.degree < 1:
            return HoloPoly()
        k = np.arange(1, len(self.coeffs))
        return HoloPoly(self.coeffs[1:] * k)

    def primitive(self) -> "HoloPoly":
        """Antiderivative with zero constant term."""
        if self.is_zero():
            return HoloPoly()
        k = np.arange(1, len(self.coeffs) + 1)
        return HoloPoly(np.concatenate([[0j], self.coeffs / k]))

    def __call__(self, z):
        """Horner evaluation; ``z`` may be a number, an array or a :class:`BiPoly`."""
        if self.is_zero():
            if isinstance(z, BiPoly):
                return BiPoly()
            return np.zeros_like(z, dtype=complex)[()]
        acc = self.coeffs[-1]
        if isinstance(z, BiPoly):
            acc = BiPoly.constant(acc)
        for c in self.coeffs[-2::-1]:
            acc = acc * z + c
        return acc

    def __repr__(self):
        return f"HoloPoly({[complex(c) for c in self.coeffs]})"


def _as_holo(value):
    if isinstance(value, HoloPoly):
        return value
    if isinstance(value, Number):
        return HoloPoly([value])
    return NotImplemented


Z = HoloPoly([0, 1])  # the identity function z


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------


def _trim2(c: np.ndarray) -> np.ndarray:
    rows = np.flatnonzero(np.any(c != 0, axis=1))
    cols = np.flatnonzero(np.any(c != 0, axis=0))
    if rows.size == 0:
        return np.zeros((0, 0), dtype=c.dtype)
    return c[: rows[-1] + 1, : cols[-1] + 1]


def _pad2(c: np.ndarray, shape, dtype) -> np.ndarray:
    out = np.zeros(shape, dtype=dtype)
    out[: c.shape[0], : c.shape[1]] = c
    return out


class _Bivariate:
    """Shared implementation; the concrete class follows the coefficient dtype."""

    __slots__ = ("c", "scale")
    _dtype = complex

    def __init__(self, coeffs=None, scale=None):
        c = np.zeros((0, 0), dtype=self._dtype) if coeffs is None else np.array(coeffs, dtype=self._dtype, ndmin=2)
        if not np.all(np.isfinite(c)):
            raise ValueError("polynomial coefficients must be finite")
        c = _trim2(c)
        if c.size:
            i, j = np.nonzero(c)
            _check_degree(int(np.max(i + j)))
        c.setflags(write=False)
        self.c = c
        own = float(np.max(np.abs(c), initial=0.0))
        self.scale = own if scale is None else max(float(scale), own)

    # -- construction helpers --
    @classmethod
    def constant(cls, value):
        return _wrap(np.array([[value]]), abs(value))

    @classmethod
    def from_terms(cls, terms):
        """Build from an iterable of ``(i, j, coef)``."""
        terms = list(terms)
        if not terms:
            return cls()
        ni = max(t[0] for t in terms) + 1
        nj = max(t[1] for t in terms) + 1
        c = np.zeros((ni, nj), dtype=cls._dtype)
        for i, j, v in terms:
            c[i, j] += v
        return cls(c)

    def terms(self):
        """Nonzero ``(i, j, coef)`` in lexicographic order."""
        return [(int(i), int(j), self.c[i, j].item()) for i, j in zip(*np.nonzero(self.c))]

    @property
    def degree(self) -> int:
        if not self.c.size:
            return -1
        i, j = np.nonzero(self.c)
        return int(np.max(i + j))

    def coef(self, i: int, j: int):
        if i < self.c.shape[0] and j < self.c.shape[1]:
            return self.c[i, j].item()
        return self._dtype(0)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.c), initial=0.0))

    def is_zero(self, tol: float = 1e-10) -> bool:
        return is_zero_poly(self, tol)

    # -- arithmetic --
    def _binary_add(self, other, sign):
        if isinstance(other, Number):
            other = _wrap(np.array([[other]]), abs(other))
        if not isinstance(other, _Bivariate):
            return NotImplemented
        shape = (max(self.c.shape[0], other.c.shape[0]), max(self.c.shape[1], other.c.shape[1]))
        dtype = np.result_type(self.c, other.c)
        out = _pad2(self.c, shape, dtype) + sign * _pad2(other.c, shape, dtype)
        return _wrap(out, max(self.scale, other.scale))

    def __add__(self, other):
        return self._binary_add(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary_add(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return _wrap(-self.c, self.scale)

    def __mul__(self, other):
        if isinstance(other, Number):
            return _wrap(self.c * other, self.scale * abs(other))
        if not isinstance(other, _Bivariate):
            return NotImplemented
        a, b = self, other
        if not a.c.size or not b.c.size:
            return _wrap(np.zeros((0, 0), dtype=np.result_type(a.c, b.c)), 0.0)
        if np.count_nonzero(a.c) > np.count_nonzero(b.c):
            a, b = b, a
        _check_degree(a.degree + b.degree)
        shape = (a.c.shape[0] + b.c.shape[0] - 1, a.c.shape[1] + b.c.shape[1] - 1)
        out = np.zeros(shape, dtype=np.result_type(a.c, b.c))
        bi, bj = b.c.shape
        for i, j in zip(*np.nonzero(a.c)):
            out[i : i + bi, j : j + bj] += a.c[i, j] * b.c
        return _wrap(out, a.scale * b.scale)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return self * (1 / other)
        return NotImplemented

    def __pow__(self, n: int):
        result = self.constant(1.0)
        for _ in range(n):
            result = result * self
        return result

    # -- calculus --
    def dx(self):
        if self.c.shape[0] < 2:
            return _wrap(np.zeros((0, 0), dtype=self.c.dtype), 0.0)
        k = np.arange(1, self.c.shape[0])[:, None]
        return _wrap(self.c[1:] * k, self.scale * (self.c.shape[0] - 1))

    def dy(self):
        if self.c.ndim < 2 or self.c.shape[1] < 2:
            return _wrap(np.zeros((0, 0), dtype=self.c.dtype), 0.0)
        k = np.arange(1, self.c.shape[1])[None, :]
        return _wrap(self.c[:, 1:] * k, self.scale * (self.c.shape[1] - 1))

    def laplacian(self):
        return self.dx().dx() + self.dy().dy()

    def bilaplacian(self):
        """``d4/dx4 + 2 d4/dx2dy2 + d4/dy4``."""
        xx = self.dx().dx()
        yy = self.dy().dy()
        return xx.dx().dx() + 2 * xx.dy().dy() + yy.dy().dy()

    # -- parts and evaluation --
    @property
    def real(self) -> "RealBiPoly":
        return RealBiPoly(self.c.real, self.scale)

    @property
    def imag(self) -> "RealBiPoly":
        return RealBiPoly(self.c.imag, self.scale)

    def conj(self):
        return _wrap(np.conj(self.c), self.scale)

    def __call__(self, x, y):
        if not self.c.size:
            return np.zeros(np.broadcast(np.asarray(x), np.asarray(y)).shape, dtype=self.c.dtype)[()]
        return npoly.polyval2d(x, y, self.c)

    def __eq__(self, other):
        if not isinstance(other, _Bivariate):
            return NotImplemented
        return self.c.shape == other.c.shape and np.array_equal(self.c, other.c)

    def __hash__(self):
        return hash(self.c.tobytes())

    def __repr__(self):
        return f"{type(self).__name__}({self.terms()})"


class BiPoly(_Bivariate):
    """Polynomial in ``x, y`` with complex coefficients."""

    __slots__ = ()
    _dtype = complex


class RealBiPoly(_Bivariate):
    """Polynomial in ``x, y`` with real coefficients."""

    __slots__ = ()
    _dtype = float


def _wrap(c, scale):
    c = np.asarray(c)
    if np.iscomplexobj(c):
        return BiPoly(c, scale)
    return RealBiPoly(c, scale)


def is_zero_poly(q: _Bivariate, tol: float = 1e-10) -> bool:
    """Every coefficient magnitude is at most ``tol * (1 + q.scale)``."""
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return q.max_abs() <= tol * (1.0 + q.scale)


def relative_residual(q: _Bivariate) -> float:
    """Largest coefficient magnitude measured against ``1 + scale``."""
    return q.max_abs() / (1.0 + q.scale)


X = RealBiPoly([[0.0], [1.0]])
Y = RealBiPoly([[0.0, 1.0]])


def linear(cx, cy, c0=0.0) -> BiPoly:
    """``c0 + cx*x + cy*y`` as a complex polynomial."""
    return BiPoly([[c0, cy], [cx, 0]])


def substitute_plane(p: HoloPoly, basis) -> BiPoly:
    """``p(alpha1 (x + sign i y))`` expanded in ``x, y``."""
    return p(linear(basis.alpha1, basis.sign * 1j * basis.alpha1))


def substitute_z(p: HoloPoly) -> BiPoly:
    """``p(x + i y)``."""
    return p(linear(1.0, 1j))


def substitute_zbar(p: HoloPoly) -> BiPoly:
    """``p(x - i y)``."""
    return p(linear(1.0, -1j))


Z_XY = linear(1.0, 1j)  # z = x + iy
ZBAR_XY = linear(1.0, -1j)  # zbar = x - iy

