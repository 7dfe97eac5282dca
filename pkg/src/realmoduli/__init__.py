"""Exact Poincaré and Hodge polynomials of moduli spaces of vector bundles on real curves."""

from .constructions import (
    VarietyData,
    blowup,
    combine_product,
    curve,
    grassmannian,
    harnack_double_cover,
    pic,
    point,
    proj_bundle,
    projective_space,
    surface_gallery,
    sym_power_curve,
)
from .hntypes import CurveData, HNType, codim, enumerate_types, validate
from .moduli import (
    InvariantError,
    ModuliReport,
    dim_fixed_det,
    dim_moduli,
    fixed_det,
    hodge_biseries,
    hodge_t1,
    q_complex,
    q_real,
    report,
    stack_series_complex,
    stack_series_real,
)
from .series import BiSeries, UniSeries

__version__ = "0.1.0"
