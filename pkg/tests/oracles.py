"""Exact reference computations, independent of the package's float kernels.

Floats are converted to exact rationals, so every result here is the true
value for the given (binary) inputs.  Polynomials live in ``QQ_I[x, y]``.
"""

from fractions import Fraction

import sympy
from sympy import QQ, QQ_I
from sympy.polys.rings import ring

R, X, Y = ring("x,y", QQ_I)


def gauss(z):
    z = complex(z)
    re, im = Fraction(z.real), Fraction(z.imag)
    return QQ_I(QQ(re.numerator, re.denominator), QQ(im.numerator, im.denominator))


def horner(coeffs, arg):
    acc = R(0)
    for c in reversed(list(coeffs)):
        acc = acc * arg + gauss(c)
    return acc


def coordinate_polys(basis, F, F0):
    """``(w_e, w_rho)`` of ``Phi[F, F0]`` built straight from its definition.

    ``w_e = F(Z)`` and ``w_rho = (beta1 x + s i beta2 y) F'(Z) + F0(Z)``
    with ``Z = alpha1 (x + s i y)``.
    """
    a, b1, b2 = gauss(basis.alpha1), gauss(basis.beta1), gauss(basis.beta2)
    si = QQ_I(0, basis.sign)
    Z = X * a + Y * (a * si)
    dF = [k * c for k, c in enumerate(F.coeffs)][1:]
    w_e = horner(F.coeffs, Z)
    w_rho = (X * b1 + Y * (si * b2)) * horner(dF, Z) + horner(F0.coeffs, Z)
    return w_e, w_rho


def split(w_e, w_rho, basis):
    """Solve ``w_e e + w_rho rho = c1 e1 + c2 e2`` by Cramer's rule on the 2x2 system."""
    a, b1, b2 = gauss(basis.alpha1), gauss(basis.beta1), gauss(basis.beta2)
    si = QQ_I(0, basis.sign)
    # columns: e1 = (a, b1), e2 = (si a, si b2)
    det = a * si * b2 - si * a * b1
    c1 = (w_e * (si * b2) - w_rho * (si * a)) * (1 / det)
    c2 = (w_rho * a - w_e * b1) * (1 / det)
    return c1, c2


def real_part(p):
    return R({k: QQ_I(v.x, 0) for k, v in p.items()})


def imag_part(p):
    return R({k: QQ_I(v.y, 0) for k, v in p.items()})


def components(basis, F, F0):
    c1, c2 = split(*coordinate_polys(basis, F, F0), basis)
    return real_part(c1), imag_part(c1), real_part(c2), imag_part(c2)


def bilaplacian(p):
    pxx = p.diff(X).diff(X)
    pyy = p.diff(Y).diff(Y)
    return pxx.diff(X).diff(X) + 2 * pxx.diff(Y).diff(Y) + pyy.diff(Y).diff(Y)


def to_float_dict(p):
    return {k: float(v.x) + 1j * float(v.y) for k, v in p.items()}


def poly_close(exact, approx, tol=1e-10):
    """Compare an exact ring element with a package bivariate polynomial coefficient-wise."""
    ref = to_float_dict(exact)
    got = {(i, j): complex(c) for i, j, c in approx.terms()}
    keys = set(ref) | set(got)
    scale = max([1.0] + [abs(v) for v in ref.values()])
    return all(abs(ref.get(k, 0) - got.get(k, 0)) <= tol * scale for k in keys)


def u1_kernel_dimension(max_degree):
    """Exact nullity of ``(F, F0) -> U1`` on the basis ``e1 = e + rho``, ``e2 = i(e + 2 rho)``."""
    from biharmonic import preset
    from biharmonic.sympoly import HoloPoly

    b = preset("new_basis")
    n = max_degree + 1
    monos = [(i, j) for i in range(n) for j in range(n - i)]
    cols = []
    for which in range(2):
        for k in range(n):
            for unit in (1, 1j):
                c = [0] * n
                c[k] = unit
                F, F0 = (HoloPoly(c), HoloPoly()) if which == 0 else (HoloPoly(), HoloPoly(c))
                u1 = components(b, F, F0)[0]
                d = dict(u1.items())
                cols.append([sympy.Rational(str(d.get(m, QQ_I(0, 0)).x)) for m in monos])
    return 4 * n - sympy.Matrix(cols).T.rank()
