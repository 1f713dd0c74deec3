"""Invariant suites run by ``biharm verify``.

Each suite draws its inputs from a seeded generator and returns a list of
:class:`Check` records; nothing here raises on a failed property.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import sampling
from .algebra import ONE
from .bases import (
    IDENTITY_TOL,
    RealComponents,
    decompose,
    preset,
    product_table,
    verify_biharmonic_identity,
    zeta_embed,
)
from .goursat import (
    Phi0Params,
    goursat_u,
    lift,
    phi0,
    phi0_vectors,
    reconstruct,
    u1_kernel,
)
from .monogenic import (
    ZERO_TOL,
    MonogenicFn,
    RawAssembly,
    biharmonic_check,
    components,
    cr_residual_compact,
    cr_residual_expanded,
    derivative_from_dx,
    expanded_is_zero,
)
from .numeric import GridSpec, biharmonic_convergence, cr_convergence, derivative_limit_probe, probe_ratios
from .sympoly import X, Y, Z_XY, ZBAR_XY, is_zero_poly, relative_residual, substitute_plane, substitute_z

EXACT_TOL = 1e-12
ORDER_MIN = 1.9


@dataclass
class Check:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    n_elements: int = 1000
    n_bases: int = 1000
    n_polys: int = 100
    n_functions: int = 200
    n_goursat: int = 200
    n_phi0_per_pair: int = 5
    n_probe_points: int = 10
    n_fd_functions: int = 3
    max_degree: int = 6
    kernel_degrees: tuple = (1, 2, 3, 4, 5, 6)

    @classmethod
    def from_json(cls, doc: dict | None) -> "SuiteConfig":
        doc = doc or {}
        kwargs = {}
        for name in cls.__dataclass_fields__:
            if name in doc:
                value = doc[name]
                kwargs[name] = tuple(value) if name == "kernel_degrees" else int(value)
        return cls(**kwargs)


def _rel(a, b):
    return (a - b).coef_norm() / max(1.0, a.coef_norm(), b.coef_norm())


# ---------------------------------------------------------------------------


def algebra_suite(rng, cfg: SuiteConfig):
    worst_comm = worst_assoc = worst_dist = worst_inv = 0.0
    for _ in range(cfg.n_elements):
        a, b, c = (sampling.random_element(rng) for _ in range(3))
        worst_comm = max(worst_comm, _rel(a * b, b * a))
        worst_assoc = max(worst_assoc, _rel((a * b) * c, a * (b * c)))
        worst_dist = max(worst_dist, _rel(a * (b + c), a * b + a * c))
        u = sampling.random_invertible(rng)
        worst_inv = max(worst_inv, _rel(u.inverse() * u, ONE))
    return [
        Check("algebra.commutative", worst_comm <= EXACT_TOL, {"max_rel_error": worst_comm}),
        Check("algebra.associative", worst_assoc <= EXACT_TOL, {"max_rel_error": worst_assoc}),
        Check("algebra.distributive", worst_dist <= EXACT_TOL, {"max_rel_error": worst_dist}),
        Check("algebra.inverse", worst_inv <= EXACT_TOL, {"max_rel_error": worst_inv}),
    ]


def basis_suite(rng, cfg: SuiteConfig):
    worst_id, all_ok, worst_table, worst_rt, worst_zeta = 0.0, True, 0.0, 0.0, 0.0
    for _ in range(cfg.n_bases):
        b = sampling.random_basis(rng)
        rep = verify_biharmonic_identity(b)
        worst_id = max(worst_id, rep.residual)
        all_ok &= rep.ok
        t = product_table(b)
        worst_table = max(
            worst_table,
            _rel(t.e1_sq, b.e1 * b.e1),
            _rel(t.e2_sq, b.e2 * b.e2),
            _rel(t.e1_e2, b.e1 * b.e2),
        )
        a = sampling.random_element(rng)
        worst_rt = max(worst_rt, _rel(decompose(a, b).recompose(b), a))
        x, y = rng.standard_normal(2)
        zeta = zeta_embed(x, y, b)
        worst_zeta = max(worst_zeta, _rel(zeta * zeta.inverse(), ONE))
    gp = preset("gp_basis")
    eq3 = gp.e1 == ONE and _rel(gp.e2 * gp.e2, gp.e1 + 2j * gp.e2) <= EXACT_TOL
    return [
        Check("basis.identity", all_ok and worst_id <= IDENTITY_TOL, {"max_residual": worst_id}),
        Check("basis.product_table", worst_table <= EXACT_TOL, {"max_rel_error": worst_table}),
        Check("basis.decompose_round_trip", worst_rt <= EXACT_TOL, {"max_rel_error": worst_rt}),
        Check("basis.zeta_invertible", worst_zeta <= EXACT_TOL, {"max_rel_error": worst_zeta}),
        Check("basis.gp_table", bool(eq3)),
    ]


def sympoly_suite(rng, cfg: SuiteConfig):
    prim_ok = hom_ok = harm_ok = mixed_ok = True
    worst_harm = 0.0
    for _ in range(cfg.n_polys):
        p = sampling.random_holo(rng, 10)
        prim_ok &= p.primitive().derivative().allclose(p, EXACT_TOL)
        b = sampling.random_basis(rng)
        p, q = sampling.random_holo(rng, 6), sampling.random_holo(rng, 6)
        diff = substitute_plane(p * q, b) - substitute_plane(p, b) * substitute_plane(q, b)
        hom_ok &= is_zero_poly(diff, EXACT_TOL)
        img = substitute_plane(p, b)
        for part in (img.real, img.imag):
            bil = part.bilaplacian()
            worst_harm = max(worst_harm, relative_residual(bil))
            harm_ok &= is_zero_poly(bil, ZERO_TOL)
            mixed_ok &= part.dx().dy() == part.dy().dx()
    return [
        Check("sympoly.primitive_inverse", bool(prim_ok)),
        Check("sympoly.substitute_homomorphism", bool(hom_ok)),
        Check("sympoly.holomorphic_parts_biharmonic", bool(harm_ok), {"max_rel_residual": worst_harm}),
        Check("sympoly.mixed_partials", bool(mixed_ok)),
    ]


def monogenic_suite(rng, cfg: SuiteConfig):
    cr_ok = exp_ok = bih_ok = rec_ok = deriv_ok = True
    worst_cr = worst_bih = worst_rec = 0.0
    for _ in range(cfg.n_functions):
        m = sampling.random_monogenic(rng, max_degree=cfg.max_degree)
        res = cr_residual_compact(m)
        worst_cr = max(worst_cr, res.residual())
        cr_ok &= res.is_zero()
        comps = components(m)
        exp_ok &= expanded_is_zero(cr_residual_expanded(comps, m.basis))
        rep = biharmonic_check(m)
        worst_bih = max(worst_bih, *rep.residuals)
        bih_ok &= rep.ok
        x, y = rng.uniform(-1, 1, 2)
        direct = m.eval(x, y)
        back = RealComponents(*(float(u(x, y)) for u in comps.as_tuple())).recompose(m.basis)
        err = _rel(direct, back)
        worst_rec = max(worst_rec, err)
        rec_ok &= err <= ZERO_TOL
        de, dr = derivative_from_dx(m)
        ce, cr = m.derivative().coordinate_polys()
        deriv_ok &= is_zero_poly(de - ce, ZERO_TOL) and is_zero_poly(dr - cr, ZERO_TOL)

    # perturbed assemblies must fail both forms of the CR test together
    equiv_ok = True
    for _ in range(max(1, cfg.n_functions // 10)):
        m = sampling.random_monogenic(rng, max_degree=3)
        comps = list(components(m).as_tuple())
        bumped = list(comps)
        k = int(rng.integers(0, 4))
        bumped[k] = bumped[k] + rng.uniform(0.5, 2.0) * X * Y
        for us, expect_zero in ((comps, True), (bumped, False)):
            raw = RawAssembly.of(m.basis, *us)
            compact_zero = cr_residual_compact(raw).is_zero()
            expanded_zero = expanded_is_zero(cr_residual_expanded(raw.comps, m.basis))
            equiv_ok &= compact_zero == expanded_zero == expect_zero

    # U1..U4 through F~ = F - (z + iy) F' - F0 on the basis e1 = e + rho
    b17 = preset("new_basis")
    tilde_ok = True
    for _ in range(max(1, cfg.n_functions // 10)):
        m = sampling.random_monogenic(rng, basis=b17, max_degree=cfg.max_degree)
        F, Fd, F0 = substitute_z(m.F), substitute_z(m.F.derivative()), substitute_z(m.F0)
        tilde = F - (Z_XY + (Z_XY - ZBAR_XY) * 0.5) * Fd - F0
        comps = components(m)
        tilde_ok &= all(
            is_zero_poly(a - b, ZERO_TOL)
            for a, b in (
                (comps.U1, (F + tilde).real),
                (comps.U2, (F + tilde).imag),
                (comps.U3, -tilde.imag),
                (comps.U4, tilde.real),
            )
        )
    return [
        Check("monogenic.cr_compact_zero", bool(cr_ok), {"max_rel_residual": worst_cr}),
        Check("monogenic.cr_expanded_zero", bool(exp_ok)),
        Check("monogenic.cr_forms_equivalent", bool(equiv_ok)),
        Check("monogenic.biharmonic", bool(bih_ok), {"max_rel_residual": worst_bih}),
        Check("monogenic.recomposition", bool(rec_ok), {"max_rel_error": worst_rec}),
        Check("monogenic.derivative_closure", bool(deriv_ok)),
        Check("monogenic.tilde_form", bool(tilde_ok)),
    ]


def goursat_suite(rng, cfg: SuiteConfig):
    rt_ok = l2_ok = p0_ok = cons_ok = gu_ok = True
    worst_rt = 0.0
    for _ in range(cfg.n_goursat):
        g = sampling.random_goursat(rng, cfg.max_degree)
        target = goursat_u(g)
        gu_ok &= is_zero_poly(target.bilaplacian(), ZERO_TOL)
        for _ in range(cfg.n_phi0_per_pair):
            diff = components(reconstruct(g, sampling.random_phi0(rng))).U1 - target
            worst_rt = max(worst_rt, relative_residual(diff))
            rt_ok &= is_zero_poly(diff, ZERO_TOL)
        cons_ok &= reconstruct(g, Phi0Params()).allclose(lift(g.psi, g.phi.primitive()))
        f1, f2 = sampling.random_holo(rng, cfg.max_degree), sampling.random_holo(rng, cfg.max_degree)
        expect = (substitute_z(f1) + ZBAR_XY * substitute_z(f2.derivative())).real
        l2_ok &= is_zero_poly(components(lift(f1, f2)).U1 - expect, ZERO_TOL)
        m0 = phi0(sampling.random_phi0(rng))
        p0_ok &= is_zero_poly(components(m0).U1, ZERO_TOL) and cr_residual_compact(m0).is_zero()
    dims = {}
    contain_ok = True
    for n in cfg.kernel_degrees:
        rep = u1_kernel(n)
        dims[str(n)] = rep.dimension
        contain_ok &= all(rep.contains(v) for v in phi0_vectors(n))
        for F, F0 in rep.pairs():
            contain_ok &= is_zero_poly(components(MonogenicFn(preset("new_basis"), F, F0)).U1, ZERO_TOL)
    return [
        Check("goursat.round_trip", bool(rt_ok), {"max_rel_residual": worst_rt}),
        Check("goursat.lift_identity", bool(l2_ok)),
        Check("goursat.phi0_sound", bool(p0_ok)),
        Check("goursat.reconstruct_matches_lift", bool(cons_ok)),
        Check("goursat.u_biharmonic", bool(gu_ok)),
        Check("goursat.u1_kernel", bool(contain_ok), {"dimension_by_degree": dims, "phi0_dimension": 4}),
    ]


def numeric_suite(rng, cfg: SuiteConfig):
    grid = GridSpec(-1.0, -1.0, 1.0, 1.0, 17)
    cr_orders, bih_orders = [], []
    for _ in range(cfg.n_fd_functions):
        m = sampling.random_monogenic(rng, max_degree=cfg.max_degree, exact=True)
        cr_orders.append(cr_convergence(m, grid).min_order)
        bih_orders.append(biharmonic_convergence(m, grid).min_order)
    spread_worst, ratio_lo, ratio_hi = 0.0, math.inf, 0.0
    for _ in range(cfg.n_probe_points):
        b = sampling.random_basis(rng, 0.5, 2.0)
        m = sampling.random_monogenic(rng, basis=b, max_degree=4, exact=True)
        x, y = rng.uniform(-1, 1, 2)
        rows = derivative_limit_probe(m, x, y, directions=16, t_min=1e-4)
        ratios = [r for rs in probe_ratios(rows).values() for r in rs]
        ratio_lo, ratio_hi = min(ratio_lo, *ratios), max(ratio_hi, *ratios)
        finest = [r.error for r in rows if r.t == 1e-4]
        spread_worst = max(spread_worst, max(finest) / min(finest))
    return [
        Check("numeric.cr_order", min(cr_orders) >= ORDER_MIN, {"min_order": min(cr_orders)}),
        Check("numeric.biharmonic_order", min(bih_orders) >= ORDER_MIN, {"min_order": min(bih_orders)}),
        Check(
            "numeric.derivative_limit",
            1.8 <= ratio_lo and ratio_hi <= 2.2 and spread_worst <= 10.0,
            {"min_ratio": ratio_lo, "max_ratio": ratio_hi, "direction_spread": spread_worst},
        ),
    ]


SUITES = {
    "algebra": algebra_suite,
    "basis": basis_suite,
    "sympoly": sympoly_suite,
    "monogenic": monogenic_suite,
    "goursat": goursat_suite,
    "numeric": numeric_suite,
}


def run_suites(cfg: SuiteConfig = SuiteConfig(), names=None):
    checks = []
    order = list(SUITES)
    for name in order if names is None else names:
        # seeded per suite, so a subset run draws the same inputs as a full run
        rng = np.random.default_rng([cfg.seed, order.index(name)])
        checks.extend(SUITES[name](rng, cfg))
    return checks


def check_function(m, tol=ZERO_TOL):
    """CR and biharmonicity checks for a user-supplied function or raw assembly."""
    res = cr_residual_compact(m)
    comps = m.components()
    bil = [u.bilaplacian() for u in comps.as_tuple()]
    return [
        Check("cr_compact", res.is_zero(tol), {"rel_residual": res.residual()}),
        Check("cr_expanded", expanded_is_zero(cr_residual_expanded(comps, m.basis), tol)),
        Check(
            "biharmonic",
            all(is_zero_poly(q, tol) for q in bil),
            {"rel_residual": max(relative_residual(q) for q in bil)},
        ),
    ]

