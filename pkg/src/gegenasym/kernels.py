"""Hot-loop dispatch: compiled extension when available, numpy otherwise.

Set ``GEGENASYM_PURE=1`` to force the numpy versions.
"""
import os

import numpy as np

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if os.environ.get("GEGENASYM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels


def _c(x):
    return np.ascontiguousarray(np.atleast_1d(x), dtype=np.complex128)


def _r(x):
    return np.ascontiguousarray(x, dtype=np.float64)


def poly_eval(table, x):
    return _impl.poly_eval(_r(np.atleast_2d(table)), _c(x))


def exponent_sums(etab, a, beta, xi, u, smax):
    return _impl.exponent_sums(_r(etab), _r(a), _c(beta), _c(xi), float(u), int(smax))


def cauchy_sum(t, f, z):
    return _impl.cauchy_sum(_c(t), _c(f), complex(z))
