"""Monogenic lifts of biharmonic functions on the basis e1 = e + rho, e2 = i(e + 2 rho).

A biharmonic ``u`` has a Goursat representation ``u = Re(psi(z) + zbar phi(z))``.
The lift ``Phi[2 G, 4 G - psi - 3 z phi]`` with ``G' = phi`` has first
component ``u``; adding any member of the four-parameter family ``phi0`` keeps
that first component.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bases import preset
from .errors import InvalidDegree
from .monogenic import MonogenicFn, components
from .sympoly import ZBAR_XY, HoloPoly, RealBiPoly, Z, substitute_z

#: relative singular-value cut-off used to decide numerical rank
RANK_TOL = 1e-9

NEW_BASIS = preset("new_basis")


@dataclass(frozen=True)
class GoursatPair:
    psi: HoloPoly = field(default_factory=HoloPoly)
    phi: HoloPoly = field(default_factory=HoloPoly)

    def __post_init__(self):
        for name in ("psi", "phi"):
            value = getattr(self, name)
            if not isinstance(value, HoloPoly):
                object.__setattr__(self, name, HoloPoly(value))


@dataclass(frozen=True)
class Phi0Params:
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, float(getattr(self, name)))

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)


def goursat_u(g: GoursatPair) -> RealBiPoly:
    """``Re(psi(z) + (x - iy) phi(z))`` with ``z = x + iy``."""
    total = substitute_z(g.psi) + ZBAR_XY * substitute_z(g.phi)
    return total.real


def lift(f1, f2) -> MonogenicFn:
    """``Phi[2 f2, 4 f2 - f1 - 3 z f2']``, whose first component is ``Re(f1 + zbar f2')``."""
    f1 = f1 if isinstance(f1, HoloPoly) else HoloPoly(f1)
    f2 = f2 if isinstance(f2, HoloPoly) else HoloPoly(f2)
    return MonogenicFn(NEW_BASIS, 2 * f2, 4 * f2 - f1 - 3 * Z * f2.derivative())


def phi0(p: Phi0Params) -> MonogenicFn:
    """``a (zeta + z rho) + b ie1 + c e2 + d ie2`` written as ``Phi[F, F0]``.

    On this basis ``zeta = Phi[z, 0]``, ``z rho = Phi[0, z]``, ``ie1 = Phi[i, i]``,
    ``e2 = Phi[i, 2i]`` and ``ie2 = Phi[-1, -2]``.
    """
    a, b, c, d = p.as_tuple()
    F = HoloPoly([(b + c) * 1j - d, a])
    F0 = HoloPoly([(b + 2 * c) * 1j - 2 * d, a])
    return MonogenicFn(NEW_BASIS, F, F0)


def reconstruct(g: GoursatPair, p: Phi0Params = Phi0Params()) -> MonogenicFn:
    """Monogenic function with ``U1 = Re(psi + zbar phi)``, shifted by ``phi0(p)``.

    The primitive of ``phi`` is taken with zero constant; another constant
    ``c`` changes ``(F, F0)`` by ``(2c, 4c)``, which leaves ``U1`` alone.
    """
    prim = g.phi.primitive()
    lift = MonogenicFn(NEW_BASIS, 2 * prim, 4 * prim - g.psi - 3 * Z * g.phi)
    return lift + phi0(p)


def u1_round_trip_residual(g: GoursatPair, p: Phi0Params = Phi0Params()) -> float:
    """Largest coefficient of ``U1[reconstruct(g, p)] - goursat_u(g)``, relative to its scale."""
    diff = components(reconstruct(g, p)).U1 - goursat_u(g)
    return diff.max_abs() / (1.0 + diff.scale)


# ---------------------------------------------------------------------------
# kernel of the map (F, F0) -> U1
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KernelReport:
    max_degree: int
    dimension: int
    basis_vectors: np.ndarray  # rows; orthonormal, length 4 (N+1)
    singular_values: np.ndarray

    def pairs(self):
        """Kernel vectors as ``(F, F0)`` polynomial pairs."""
        return [unpack_pair(v, self.max_degree) for v in self.basis_vectors]

    def contains(self, vec, tol=RANK_TOL) -> bool:
        vec = np.asarray(vec, dtype=float)
        proj = self.basis_vectors.T @ (self.basis_vectors @ vec)
        return float(np.linalg.norm(vec - proj)) <= tol * max(1.0, float(np.linalg.norm(vec)))


def unpack_pair(v, max_degree: int):
    """Real vector ``[Re F_k, Im F_k ..., Re F0_k, Im F0_k ...]`` to ``(F, F0)``."""
    n = max_degree + 1
    v = np.asarray(v, dtype=float)
    F = v[0 : 2 * n : 2] + 1j * v[1 : 2 * n : 2]
    F0 = v[2 * n :: 2] + 1j * v[2 * n + 1 :: 2]
    return HoloPoly(F), HoloPoly(F0)


def pack_pair(F: HoloPoly, F0: HoloPoly, max_degree: int) -> np.ndarray:
    n = max_degree + 1
    out = np.zeros(4 * n)
    for offset, p in ((0, F), (2 * n, F0)):
        c = p.padded(n)
        out[offset : offset + 2 * n : 2] = c.real
        out[offset + 1 : offset + 2 * n : 2] = c.imag
    return out


def _u1_vector(F, F0, max_degree: int) -> np.ndarray:
    u1 = components(MonogenicFn(NEW_BASIS, F, F0)).U1
    out = np.zeros((max_degree + 1, max_degree + 1))
    c = u1.c
    out[: c.shape[0], : c.shape[1]] = c
    return out.ravel()


def u1_matrix(max_degree: int) -> np.ndarray:
    """Matrix of the real-linear map from packed ``(F, F0)`` to the coefficients of ``U1``."""
    if max_degree < 0:
        raise InvalidDegree(f"max_degree must be >= 0, got {max_degree}")
    size = 4 * (max_degree + 1)
    cols = []
    for k in range(size):
        unit = np.zeros(size)
        unit[k] = 1.0
        cols.append(_u1_vector(*unpack_pair(unit, max_degree), max_degree))
    return np.column_stack(cols)


def u1_kernel(max_degree: int) -> KernelReport:
    """Nullspace of :func:`u1_matrix` from an SVD with a relative threshold."""
    A = u1_matrix(max_degree)
    _, sv, vt = np.linalg.svd(A)
    cut = RANK_TOL * (sv[0] if sv.size else 0.0)
    rank = int(np.sum(sv > cut))
    null = vt[rank:]
    return KernelReport(max_degree, null.shape[0], null, sv)


def phi0_vectors(max_degree: int = 1):
    """The images of the four unit parameter sets, packed as kernel candidates."""
    vecs = []
    for k in range(4):
        p = [0.0] * 4
        p[k] = 1.0
        m = phi0(Phi0Params(*p))
        vecs.append(pack_pair(m.F, m.F0, max_degree))
    return vecs

