"""Grid-based checks: finite-difference CR and biharmonic residuals, limit probes.

Grids are uniform; arrays are indexed ``u[i, j] = u(x_i, y_j)``.  Convergence
studies use the nested grids ``n, 2n-1, 4n-3`` and compare residuals only on
the nodes of the coarsest grid, so that the sampled set does not change with
refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElement, mul_coords
from .bases import join_coords, split_coords
from .errors import DegenerateDirection, GridTooSmall


@dataclass(frozen=True)
class GridSpec:
    x0: float
    y0: float
    x1: float
    y1: float
    n: int

    def __post_init__(self):
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError("grid corners must satisfy x1 > x0 and y1 > y0")
        if int(self.n) != self.n or self.n < 5:
            raise GridTooSmall(f"need n >= 5 points per axis, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """From ``"x0,y0,x1,y1,n"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 5:
            raise ValueError(f"grid needs 5 comma-separated values, got {text!r}")
        x0, y0, x1, y1 = (float(p) for p in parts[:4])
        return cls(x0, y0, x1, y1, int(parts[4]))

    @property
    def hx(self) -> float:
        return (self.x1 - self.x0) / (self.n - 1)

    @property
    def hy(self) -> float:
        return (self.y1 - self.y0) / (self.n - 1)

    def axes(self):
        return np.linspace(self.x0, self.x1, self.n), np.linspace(self.y0, self.y1, self.n)

    def mesh(self):
        xs, ys = self.axes()
        return np.meshgrid(xs, ys, indexing="ij")

    def refined(self, level: int = 1) -> "GridSpec":
        """Halve the spacing ``level`` times; the old nodes stay nodes."""
        n = (self.n - 1) * 2**level + 1
        return GridSpec(self.x0, self.y0, self.x1, self.y1, n)


def sample_components(m, g: GridSpec):
    """``U1..U4`` from the symbolic components, evaluated on the grid."""
    X, Y = g.mesh()
    return tuple(np.asarray(u(X, Y), dtype=float) * np.ones_like(X) for u in m.components().as_tuple())


# ---------------------------------------------------------------------------
# biharmonic stencil
# ---------------------------------------------------------------------------


def biharmonic_stencil(u: np.ndarray, hx: float, hy: float | None = None) -> np.ndarray:
    """13-point discrete bilaplacian on the nodes two cells away from the edge."""
    u = np.asarray(u)
    if u.ndim != 2 or min(u.shape) < 5:
        raise GridTooSmall(f"13-point stencil needs at least 5x5 samples, got {u.shape}")
    hy = hx if hy is None else hy
    c = u[2:-2, 2:-2]

    def at(di, dj):
        return u[2 + di : u.shape[0] - 2 + di, 2 + dj : u.shape[1] - 2 + dj]

    d4x = (at(-2, 0) - 4 * at(-1, 0) + 6 * c - 4 * at(1, 0) + at(2, 0)) / hx**4
    d4y = (at(0, -2) - 4 * at(0, -1) + 6 * c - 4 * at(0, 1) + at(0, 2)) / hy**4
    cross = (
        at(-1, -1) + at(-1, 1) + at(1, -1) + at(1, 1)
        - 2 * (at(-1, 0) + at(1, 0) + at(0, -1) + at(0, 1))
        + 4 * c
    ) / (hx**2 * hy**2)
    return d4x + 2 * cross + d4y


def fd_biharmonic_residual(u: np.ndarray, h: float, hy: float | None = None) -> float:
    return float(np.max(np.abs(biharmonic_stencil(u, h, hy))))


# ---------------------------------------------------------------------------
# Cauchy-Riemann residual
# ---------------------------------------------------------------------------


def _central(w, hx, hy):
    dx = (w[2:, 1:-1] - w[:-2, 1:-1]) / (2 * hx)
    dy = (w[1:-1, 2:] - w[1:-1, :-2]) / (2 * hy)
    return dx, dy


def fd_cr_field(m, g: GridSpec) -> np.ndarray:
    """``|dPhi/dy e1 - dPhi/dx e2|`` on the interior nodes, central differences.

    ``m`` needs a vectorised ``coords(x, y)`` returning ``(w_e, w_rho)``.
    """
    if g.n < 3:
        raise GridTooSmall("central differences need n >= 3")
    b = m.basis
    X, Y = g.mesh()
    w_e, w_rho = m.coords(X, Y)
    w_e = np.broadcast_to(w_e, X.shape)
    w_rho = np.broadcast_to(w_rho, X.shape)
    ex, ey = _central(w_e, g.hx, g.hy)
    rx, ry = _central(w_rho, g.hx, g.hy)
    ye, yr = mul_coords(ey, ry, b.e1.e_coef, b.e1.rho_coef)
    xe, xr = mul_coords(ex, rx, b.e2.e_coef, b.e2.rho_coef)
    c1, c2 = split_coords(ye - xe, yr - xr, b)
    return np.sqrt(np.abs(c1) ** 2 + np.abs(c2) ** 2)


def fd_cr_residual(m, g: GridSpec) -> float:
    return float(np.max(fd_cr_field(m, g)))


# ---------------------------------------------------------------------------
# convergence studies
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvergenceStudy:
    ns: tuple
    residuals: tuple
    orders: tuple  # log2 of successive residual ratios

    @property
    def min_order(self) -> float:
        return min(self.orders)


def _orders(residuals):
    out = []
    for coarse, fine in zip(residuals, residuals[1:]):
        out.append(math.log2(coarse / fine) if fine > 0 and coarse > 0 else math.inf)
    return tuple(out)


def _on_coarse_nodes(field, level, margin_coarse, margin_fine):
    """Entries of a fine-grid interior field that sit on interior coarse nodes."""
    step = 2**level
    start = margin_coarse * step - margin_fine
    return field[start : field.shape[0] - start : step, start : field.shape[1] - start : step]


def cr_convergence(m, g: GridSpec, levels: int = 3) -> ConvergenceStudy:
    """CR residual on grids ``g, g.refined(1), ...`` restricted to ``g``'s interior nodes."""
    ns, res = [], []
    for level in range(levels):
        gl = g.refined(level)
        field = _on_coarse_nodes(fd_cr_field(m, gl), level, 1, 1)
        ns.append(gl.n)
        res.append(float(np.max(field)))
    return ConvergenceStudy(tuple(ns), tuple(res), _orders(res))


def biharmonic_convergence(m, g: GridSpec, levels: int = 3) -> ConvergenceStudy:
    """Largest stencil residual over ``U1..U4`` on grids ``g, g.refined(1), ...``."""
    ns, res = [], []
    for level in range(levels):
        gl = g.refined(level)
        worst = 0.0
        for u in sample_components(m, gl):
            field = _on_coarse_nodes(biharmonic_stencil(u, gl.hx, gl.hy), level, 2, 2)
            worst = max(worst, float(np.max(np.abs(field))))
        ns.append(gl.n)
        res.append(worst)
    return ConvergenceStudy(tuple(ns), tuple(res), _orders(res))


# ---------------------------------------------------------------------------
# limit definition of the derivative
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProbeRow:
    theta: float
    t: float
    error: float


def derivative_limit_probe(m, x: float, y: float, directions: int = 16, t_min: float = 1e-4, levels: int = 4):
    """Errors of ``(Phi(zeta+h) - Phi(zeta)) h^-1`` against ``Phi'(zeta)``.

    ``h = t (cos(theta) e1 + sin(theta) e2)`` for ``directions`` equally spaced
    angles and ``t = t_min * 2**k``, ``k = levels-1 .. 0``.  Errors are measured
    in the basis norm.
    """
    if directions < 1:
        raise ValueError("need at least one direction")
    if not t_min > 0:
        raise DegenerateDirection(f"probe step must be positive, got t_min={t_min}")
    b = m.basis
    d = m.derivative()
    exact = d.eval(x, y)
    base = m.eval(x, y)
    rows = []
    for k in range(directions):
        theta = 2 * math.pi * k / directions
        ct, st = math.cos(theta), math.sin(theta)
        for lev in range(levels - 1, -1, -1):
            t = t_min * 2**lev
            h_e, h_rho = join_coords(t * ct, t * st, b)
            if h_e == 0 and h_rho == 0:
                raise DegenerateDirection(f"zero increment at theta={theta}")
            q = (m.eval(x + t * ct, y + t * st) - base) / AlgebraElement(h_e, h_rho)
            err = q - exact
            c1, c2 = split_coords(err.e_coef, err.rho_coef, b)
            rows.append(ProbeRow(theta, t, math.hypot(abs(c1), abs(c2))))
    return rows


def probe_ratios(rows):
    """Error ratio for each halving of ``t``, grouped by direction."""
    by_theta = {}
    for r in rows:
        by_theta.setdefault(r.theta, []).append(r)
    out = {}
    for theta, rs in by_theta.items():
        rs = sorted(rs, key=lambda r: -r.t)
        out[theta] = [a.error / b.error if b.error > 0 else math.inf for a, b in zip(rs, rs[1:])]
    return out
