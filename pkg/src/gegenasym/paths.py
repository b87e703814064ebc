"""Integration paths for the error bounds and a doubling Gauss quadrature.

A path is a chain of segments, each a map s -> (point, |d point / ds|) on
0 < s < 1.  Bound integrands are smooth along the paths chosen here, so a
composite Gauss-Legendre rule with panel doubling is enough; the bounds
only need a few correct digits.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, PathError

GAUSS_ORDER = 8
START_PANELS = 4
MAX_PANELS = 2048
QUAD_RTOL = 1e-3

_GX, _GW = np.polynomial.legendre.leggauss(GAUSS_ORDER)


class PathKind(enum.Enum):
    STRAIGHT_FROM_BETA_ONE = "StraightFromBetaOne"
    SEGMENT_PLUS_LEVEL_ARC = "SegmentPlusLevelArc"
    HORIZONTAL_FROM_XI_INFINITY = "HorizontalFromXiInfinity"
    COMPOSITE_XI_PATH = "CompositeXiPath"


@dataclass(frozen=True)
class PathSpec:
    kind: PathKind
    nodes: int = 0
    params: dict = field(default_factory=dict, compare=False)


def _nodes(panels):
    edges = np.linspace(0.0, 1.0, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    s = (mid[:, None] + half[:, None] * _GX[None, :]).ravel()
    w = (half[:, None] * _GW[None, :]).ravel()
    return s, w


def integrate(segments, integrand, rtol=QUAD_RTOL):
    """Integrate a vector-valued nonnegative ``integrand`` along a path.

    ``integrand(points)`` returns shape (m, K).  Returns the m totals and
    the node count per segment at convergence.
    """
    if not segments:
        return None, 0
    panels = START_PANELS
    prev = None
    while panels <= MAX_PANELS:
        s, w = _nodes(panels)
        total = 0.0
        for seg in segments:
            pts, jac = seg(s)
            total = total + integrand(pts) @ (w * jac)
        if prev is not None:
            scale = np.maximum(np.abs(total), 1e-300)
            if np.all(np.abs(total - prev) <= rtol * scale):
                return total, s.size
        prev = total
        panels *= 2
    raise ConvergenceError("path quadrature did not settle")


def path_points(segments, count=64):
    """Ordered sample points along the whole path (for monotonicity checks)."""
    s = (np.arange(count) + 0.5) / count
    return np.concatenate([seg(s)[0] for seg in segments])


def check_monotone(values, what):
    """Raise PathError unless ``values`` is monotone up to rounding."""
    d = np.diff(np.asarray(values, dtype=float))
    tol = 1e-9 * max(1.0, float(np.max(np.abs(values))))
    if not (np.all(d <= tol) or np.all(d >= -tol)):
        raise PathError(f"{what} is not monotone along the path")


# -- beta plane ---------------------------------------------------------------

def _line(a, b):
    a, b = complex(a), complex(b)
    length = abs(b - a)

    def seg(s):
        return a + s * (b - a), np.full(s.shape, length)
    return seg


def _arc(center, radius, phi0, phi1):
    span = abs(phi1 - phi0)

    def seg(s):
        phi = phi0 + s * (phi1 - phi0)
        return center + radius * np.exp(1j * phi), np.full(s.shape, radius * span)
    return seg


def beta_path(beta: complex, j: int):
    """Segments of the admissible beta path for j = 0 or j = -1.

    Points in the upper half plane are handled by conjugation, which leaves
    the bound integrands unchanged.
    """
    beta = complex(beta)
    if beta.imag > 0:
        beta = beta.conjugate()
    if j == 0:
        if beta == 1:
            return PathSpec(PathKind.STRAIGHT_FROM_BETA_ONE), []
        segs = [_line(1.0, beta)]
        spec = PathSpec(PathKind.STRAIGHT_FROM_BETA_ONE, params={"end": beta})
    elif j == -1:
        if beta.imag == 0 and -1.0 <= beta.real < 1.0:
            segs = [_line(-1.0, beta)] if beta != -1 else []
            spec = PathSpec(PathKind.SEGMENT_PLUS_LEVEL_ARC, params={"end": beta})
        else:
            if beta.real <= 0:
                raise PathError("no level-arc path for Re(beta) <= 0")
            c = (abs(beta) ** 2 + 1.0) / (2.0 * beta.real)
            r = math.sqrt(max(c * c - 1.0, 0.0))
            foot = c - r
            phi_end = math.atan2(beta.imag, beta.real - c)
            if phi_end > 0:
                phi_end = -phi_end
            segs = [_line(-1.0, foot), _arc(c, r, -math.pi, phi_end)]
            spec = PathSpec(PathKind.SEGMENT_PLUS_LEVEL_ARC,
                            params={"end": beta, "center": c, "radius": r})
    else:
        raise PathError(f"unsupported path index j={j}")
    pts = path_points(segs)
    check_monotone(np.abs((pts + 1.0) / (pts - 1.0)), "|(b+1)/(b-1)|")
    return spec, segs


# -- xi plane -----------------------------------------------------------------

def _ray(start, direction, scale):
    """t = start + direction * scale * x, x = s/(1-s) in [0, inf)."""
    start, direction = complex(start), complex(direction)

    def seg(s):
        x = s / (1.0 - s)
        return start + direction * scale * x, scale / (1.0 - s) ** 2
    return seg


def xi_path(xi: complex, j: int):
    """Segments of the xi path from +inf (j=0) or -inf + i pi/2 (j=-1)."""
    xi = complex(xi)
    if xi == 0:
        raise PathError("xi = 0 is the singular point")
    scale = max(1.0, abs(xi))
    if j == 0:
        if xi.imag == 0 and xi.real <= 0:
            raise PathError("horizontal ray from +inf meets xi = 0")
        segs = [_ray(xi, 1.0, scale)]
        spec = PathSpec(PathKind.HORIZONTAL_FROM_XI_INFINITY, params={"end": xi})
    elif j == -1:
        corner = complex(xi.real, math.pi / 2)
        if xi.real == 0 and xi.imag <= 0 <= math.pi / 2:
            raise PathError("vertical leg meets xi = 0")
        segs = [_ray(corner, -1.0, scale)]
        if corner != xi:
            segs.append(_line(corner, xi))
        spec = PathSpec(PathKind.COMPOSITE_XI_PATH, params={"end": xi})
    else:
        raise PathError(f"unsupported path index j={j}")
    return spec, segs


def inverse_power_integrals(xi: complex, j: int, powers):
    """int |dt| / |t|^p along the xi path, for each p in ``powers``."""
    powers = np.asarray(powers, dtype=float)
    xi = complex(xi)
    spec, segs = xi_path(xi, j)
    if j == 0 and xi.imag == 0:
        return spec, xi.real ** (1.0 - powers) / (powers - 1.0)
    vals, nodes = integrate(segs, lambda t: np.abs(t)[None, :] ** (-powers[:, None]))
    return PathSpec(spec.kind, nodes, spec.params), vals
