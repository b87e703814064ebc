"""Uniform asymptotics for Gegenbauer polynomials.

C_n^(lam)(z) and the companion solutions D_n^(lam), D_{n,+-1}^(lam) are
evaluated for large n through Bessel-type expansions with slowly varying
coefficient functions A(u, z), B(u, z) and computable error bounds.
"""
__version__ = "0.1.0"

from .domain import Params, PlanePoint, Region, make_params, map_point, map_theta
from .errors import (BranchError, ConvergenceError, DomainError, GegenError, PathError,
                     PoleError, PrecisionError, RegionError)
from .lg import lg_D, lg_D_pm
from .oracle import oracle_AB, oracle_C, oracle_D, oracle_envelope, oracle_hatC
from .uniform import (ABValue, BoundedValue, ab_cauchy, ab_hat_series, ab_series,
                      envelope_approx, error_bounds_AB, eval_all_solutions, eval_C_real)

__all__ = [
    "Params", "PlanePoint", "Region", "make_params", "map_point", "map_theta",
    "GegenError", "DomainError", "BranchError", "PoleError", "RegionError", "PathError",
    "ConvergenceError", "PrecisionError",
    "lg_D", "lg_D_pm",
    "oracle_AB", "oracle_C", "oracle_D", "oracle_envelope", "oracle_hatC",
    "ABValue", "BoundedValue", "ab_cauchy", "ab_hat_series", "ab_series",
    "envelope_approx", "error_bounds_AB", "eval_all_solutions", "eval_C_real",
]
