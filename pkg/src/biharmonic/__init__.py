"""Commutative biharmonic algebra: bases, monogenic functions and Goursat lifts."""

from .algebra import ONE, RHO, ZERO, AlgebraElement, inverse, is_zero_divisor
from .bases import (
    BiharmonicBasis,
    RealComponents,
    decompose,
    make_basis,
    norm_in_basis,
    preset,
    product_table,
    verify_biharmonic_identity,
    z_map,
    zeta_embed,
)
from .errors import (
    BiharmonicError,
    DegenerateDirection,
    DegreeOverflow,
    GridTooSmall,
    InvalidBasis,
    InvalidDegree,
    NotInvertible,
    SchemaError,
    ZeroElement,
)
from .goursat import GoursatPair, Phi0Params, goursat_u, lift, phi0, reconstruct, u1_kernel
from .monogenic import (
    ComponentSet,
    MonogenicFn,
    RawAssembly,
    biharmonic_check,
    components,
    cr_residual_compact,
    cr_residual_expanded,
)
from .sympoly import BiPoly, HoloPoly, RealBiPoly, is_zero_poly

__version__ = "0.1.0"
