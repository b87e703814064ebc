"""Parameter bookkeeping and the conformal maps z -> (beta, xi, theta).

All square roots used anywhere in the package are taken here.  The branch
of sqrt(z**2 - 1) is principal with its cut on [-1, 1]; real points
0 <= x < 1 are read as lying on the upper side of that cut (x + i0) unless
``side=-1`` is passed, so that

    sqrt(x**2 - 1) = i sin(theta),  xi = i theta,  beta = -i cot(theta)

with x = cos(theta).
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import BranchError, DomainError

#: Points closer than this to z = 1 get xi from its Maclaurin series.
NEAR_ONE = 1e-8
LAMBDA_MAX = 100.0


@dataclass(frozen=True)
class Params:
    """Degree ``n`` and parameter ``lam`` with the derived nu and u."""

    lam: float
    n: int

    @property
    def nu(self) -> float:
        return self.lam - 0.5

    @property
    def u(self) -> float:
        return self.lam + self.n


def make_params(lam: float, n: int) -> Params:
    lam = float(lam)
    if not lam > 0.0 or not math.isfinite(lam):
        raise DomainError(f"lambda must be positive, got {lam}")
    if lam > LAMBDA_MAX:
        raise DomainError(f"lambda > {LAMBDA_MAX} is not supported")
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    return Params(lam, int(n))


class Region(enum.Enum):
    REAL_INTERVAL_01 = "RealInterval01"
    RIGHT_HALF_PLANE = "RightHalfPlane"
    DISK_AROUND_ONE = "DiskAroundOne"


def _sqrt_z2m1(z: complex) -> complex:
    # product of principal roots: continuous across (-inf, -1), cut on [-1, 1]
    return cmath.sqrt(z - 1.0) * cmath.sqrt(z + 1.0)


def _xi_near_one(z: complex) -> complex:
    w = z - 1.0
    # arccosh(1 + w) / sqrt(2 w)
    series = 1.0 - w / 12.0 + 3.0 * w * w / 160.0 - 5.0 * w**3 / 896.0
    return cmath.sqrt(2.0 * w) * series


@dataclass(frozen=True)
class PlanePoint:
    z: complex
    region: Region

    @cached_property
    def root(self) -> complex:
        """sqrt(z**2 - 1) on the package branch."""
        return _sqrt_z2m1(self.z)

    @cached_property
    def beta(self) -> complex:
        if self.z == 1.0 or self.z == -1.0:
            raise BranchError("beta has a pole at z = +-1")
        return self.z / self.root

    @cached_property
    def xi(self) -> complex:
        z = self.z
        if z == 1.0:
            return 0j
        if abs(z - 1.0) < NEAR_ONE:
            return _xi_near_one(z)
        return cmath.log(z + self.root)

    @property
    def zeta(self) -> complex:
        return self.xi * self.xi

    @cached_property
    def theta(self) -> float | None:
        if self.region is not Region.REAL_INTERVAL_01:
            return None
        return math.acos(self.z.real)


def map_point(z: complex, side: int = 1) -> PlanePoint:
    """Attach the conformal variables to ``z`` (Re z >= 0).

    ``side`` selects the upper (+1) or lower (-1) edge when ``z`` sits on
    the cut [0, 1).
    """
    z = complex(z)
    if z.real < 0.0:
        raise DomainError("map_point needs Re(z) >= 0; use reflect_negative")
    on_cut = z.imag == 0.0 and 0.0 <= z.real < 1.0
    if on_cut:
        z = complex(z.real, 0.0 if side > 0 else -0.0)
        return PlanePoint(z, Region.REAL_INTERVAL_01)
    if abs(z - 1.0) < 1.0:
        return PlanePoint(z, Region.DISK_AROUND_ONE)
    return PlanePoint(z, Region.RIGHT_HALF_PLANE)


def map_theta(x: float) -> float:
    """theta = arccos(x) for 0 <= x < 1."""
    x = float(x)
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x must lie in [0, 1), got {x}")
    return math.acos(x)


def reflect_negative(z: complex, which: str, n: int, nu: float = 0.0):
    """Reduce Re(z) < 0 to the right half plane.

    Returns ``(factor, w)`` with ``f(z) = factor * f(w)`` and Re(w) > 0.
    ``which`` is ``"C"`` for the polynomial and ``"D"`` for the companion
    recessive at +infinity; for D the rotation z = w e^{+-pi i} is chosen
    so that arg stays continuous (upper half plane uses +).
    """
    z = complex(z)
    if z.real >= 0.0:
        raise DomainError("reflect_negative needs Re(z) < 0")
    w = -z
    if which == "C":
        return (-1.0) ** n, w
    if which == "D":
        sgn = 1.0 if z.imag >= 0.0 else -1.0
        factor = (-1.0) ** (n + 1) * cmath.exp(-sgn * 2j * math.pi * nu)
        return factor, w
    raise DomainError(f"which must be 'C' or 'D', got {which!r}")


def map_array(z):
    """Vectorized (beta, xi) for an array of points off [-1, 1] and z != 1.

    Same branch as :class:`PlanePoint`; used for contour nodes.
    """
    z = np.asarray(z, dtype=np.complex128)
    root = np.sqrt(z - 1.0) * np.sqrt(z + 1.0)
    return z / root, np.log(z + root)
