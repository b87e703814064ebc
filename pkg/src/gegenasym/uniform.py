"""Slowly varying coefficient functions A(u,z), B(u,z) and the assembled solutions.

Three evaluation routes:

* ``ab_series``: exp/cosh (exp/sinh) of sums of the combined coefficients,
  valid for |z - 1| >= 1 in the right half plane.
* ``ab_hat_series``: the re-expanded sums in A_s(theta), B_s(theta) on
  the oscillatory interval z = cos(theta).
* ``ab_cauchy``: Cauchy's formula on |t - 1| = 1 for points inside the disk.

B(u, z) equals xi times a function analytic at z = 1 (it is odd in xi),
so inside the disk the contour integral is taken of B_N / xi and the
result is multiplied by xi(z) again.  A(u, z) is analytic and is
integrated directly.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from mpmath import mp, mpf

from . import kernels
from .coeffs import build_ab_theta, build_coeff_table
from .domain import Params, PlanePoint, Region, make_params, map_array, map_point
from .errors import ConvergenceError, DomainError, RegionError
from .lg import _bound_eta, omega_varpi_K, _eta_from
from .specfun import bessel_I, bessel_J, bessel_K, elliptic_K, log_gamma, log_prefactor

DELTA_EVAL = 1.0
DEFAULT_N = 5
DEFAULT_N_HAT = 4
NODES_START = 64
NODES_MAX = 4096
CAUCHY_RTOL = 1e-12
SUP_SAMPLES = 64
SUP_SAFETY = 1.1
# rounding allowance of the double-precision assembly, per unit of x = u theta
# (the argument itself is rounded, which matters near Bessel zeros)
ROUNDING = 1e-14


class Method(enum.Enum):
    DIRECT_SERIES = "DirectSeries"
    REAL_INTERVAL_SERIES = "RealIntervalSeries"
    CAUCHY_DISK = "CauchyDisk"


class Certification(enum.Enum):
    EXACT = "exact"
    QUADRATURE = "certified-by-quadrature"
    SAMPLED_SUPREMUM = "sampled-supremum-heuristic"
    TRUNCATION_ESTIMATE = "first-omitted-term-estimate"


@dataclass(frozen=True)
class ABValue:
    A: complex
    B: complex
    method: Method
    bound_A: float
    bound_B: float
    nodes: int = 0


@dataclass(frozen=True)
class DiskContour:
    node_count: int
    center: float = 1.0
    radius: float = 1.0

    def nodes(self) -> np.ndarray:
        k = np.arange(self.node_count)
        return self.center + self.radius * np.exp(2j * np.pi * (k + 0.5) / self.node_count)


@dataclass(frozen=True)
class BoundedValue:
    value: complex
    bound: float
    certification: Certification


def _check_N(N):
    if N < 3 or N % 2 == 0:
        raise DomainError("N must be odd and >= 3")


def _table(params, order):
    return build_coeff_table(float(params.nu), int(order))


@lru_cache(maxsize=256)
def prefactors(params: Params, N: int):
    """(P, P_tr): the gamma-ratio prefactor and its truncated exponential form.

    P_tr = Gamma(u+lam) n! / (Gamma(u) Gamma(u+1)) exp(sum_{s<N} (-1)^(s+1) E_s(1)/u^s)
    differs from P by O(u^-N); bounds carry the difference explicitly.
    """
    table = _table(params, max(N - 1, 1))
    with mp.workdps(30):
        lam = mpf(params.lam)
        u = lam + params.n
        P = mp.exp(log_prefactor(params, dps=30))
        acc = mpf(0)
        for s in range(1, N):
            acc += (-1) ** (s + 1) * table.E_at_1[s] / u**s
        Ptr = mp.exp(log_gamma(u + lam, 30) + log_gamma(mpf(params.n + 1), 30)
                     - log_gamma(u, 30) - log_gamma(u + 1, 30) + acc)
        return float(P), float(Ptr)


def _sums(table, beta, xi, u, N, shifted):
    a = table.arrays["a_shift" if shifted else "a"]
    return kernels.exponent_sums(table.arrays["etilde"], a, beta, xi, u, N - 1)


def ab_truncated(params: Params, beta, xi, N: int):
    """A_N and B_N (without the prefactor) at arrays of (beta, xi)."""
    table = _table(params, N)
    u = params.u
    ea, oa = _sums(table, beta, xi, u, N, True)
    eb, ob = _sums(table, beta, xi, u, N, False)
    return np.exp(ea) * np.cosh(oa), np.exp(eb) * np.sinh(ob)


# -- pointwise bounds for |z - 1| >= 1 ------------------------------------------

def _eta_K(params, a, xi, N, j):
    if all(x == 0.0 for x in a[1:]):
        return 0.0
    omega, varpi = omega_varpi_K(a, params.u, xi, N, j)
    return _eta_from(omega, varpi, params.u, N)


def _a_lists(params, N):
    table = _table(params, N)
    return ([float(x) for x in table.a_shift], [float(x) for x in table.a])


def epsilon_bounds(params: Params, point: PlanePoint, N: int):
    """Bounds on |eps_N^(A)|, |eps_N^(B)| at a point with |z - 1| >= 1."""
    z = point.z
    if z.imag < 0:
        point = map_point(z.conjugate())
    beta, xi = point.beta, point.xi
    table = _table(params, N)
    u = params.u
    eta0 = _bound_eta(params, beta, N, 0)[0]
    etam = _bound_eta(params, beta, N, -1)[0]
    a1, a0 = _a_lists(params, N)
    out = []
    for shifted, a in ((True, a1), (False, a0)):
        k0 = _eta_K(params, a, xi, N, 0)
        km = _eta_K(params, a, xi, N, -1)
        ev, od = _sums(table, np.array([beta]), np.array([xi]), u, N, shifted)
        plus = abs(np.exp(ev[0] + od[0]))
        minus = abs(np.exp(ev[0] - od[0]))
        out.append(0.5 * plus * (eta0 + km + eta0 * km) + 0.5 * minus * (etam + k0 + etam * k0))
    return out[0], out[1]


def ab_series(params: Params, point: PlanePoint, N: int = DEFAULT_N,
              delta_eval: float = DELTA_EVAL, bounds: bool = True) -> ABValue:
    """A(u,z), B(u,z) from the exp/cosh and exp/sinh forms, |z - 1| >= delta_eval."""
    _check_N(N)
    z = point.z
    if z.real < 0:
        raise RegionError("ab_series needs Re(z) >= 0")
    if abs(z - 1.0) < delta_eval:
        raise RegionError(f"|z - 1| < {delta_eval}: use ab_cauchy")
    AN, BN = ab_truncated(params, np.array([point.beta]), np.array([point.xi]), N)
    AN, BN = complex(AN[0]), complex(BN[0])
    P, Ptr = prefactors(params, N)
    bA = bB = 0.0
    if bounds:
        eA, eB = epsilon_bounds(params, point, N)
        bA = float(abs(Ptr) * eA + abs(Ptr - P) * abs(AN))
        bB = float(abs(Ptr) * eB + abs(Ptr - P) * abs(BN))
    return ABValue(P * AN, P * BN, Method.DIRECT_SERIES, bA, bB)


# -- oscillatory interval ----------------------------------------------------------

def ab_hat_coeffs(params: Params, theta: float, N: int):
    """A_0..A_N and B_0..B_{N-1} at theta."""
    table = _table(params, 2 * N)
    return build_ab_theta(table, theta, N)


def ab_hat_series(params: Params, theta: float, N: int = DEFAULT_N_HAT,
                  estimate: bool = True) -> ABValue:
    """hat-A = sum A_s/u^2s, hat-B = sum B_s/u^(2s+1); bounds are next-term estimates."""
    if not 0 <= theta <= math.pi / 2 + 1e-15:
        raise DomainError("theta must lie in [0, pi/2]")
    u = params.u
    M = N + 1 if (estimate and 2 * N + 2 <= 12) else N
    A, B = ab_hat_coeffs(params, theta, M)
    hatA = math.fsum(A[s] / u ** (2 * s) for s in range(N + 1))
    hatB = math.fsum(B[s] / u ** (2 * s + 1) for s in range(N))
    eA = abs(A[N + 1]) / u ** (2 * N + 2) if M > N else 0.0
    eB = abs(B[N]) / u ** (2 * N + 1) if M > N else 0.0
    return ABValue(hatA, hatB, Method.REAL_INTERVAL_SERIES, eA, eB)


def ab_hat_expcos(params: Params, theta: float, N: int):
    """exp/cos and exp/sin forms in the real-interval coefficients (N odd)."""
    from .coeffs import eval_hat_e
    _check_N(N)
    table = _table(params, N)
    u = params.u
    out = []
    for shifted in (True, False):
        ev = sum(eval_hat_e(table, s, theta, shifted) / u**s for s in range(2, N, 2))
        od = sum(eval_hat_e(table, s, theta, shifted) / u**s for s in range(1, N, 2))
        out.append((ev, od))
    (ea, oa), (eb, ob) = out
    return math.exp(ea) * math.cos(oa), math.exp(eb) * math.sin(ob)


# -- Cauchy disk ---------------------------------------------------------------------

def _contour_values(params, N, count):
    contour = DiskContour(count)
    t = contour.nodes()
    beta, xi = map_array(t)
    AN, BN = ab_truncated(params, beta, xi, N)
    return t, AN, BN / xi


def cauchy_integrals(params: Params, z: complex, N: int):
    """Contour averages for A_N and B_N/xi with node doubling; returns (IA, IB, nodes)."""
    count = NODES_START
    prev = None
    while count <= NODES_MAX:
        t, fa, fb = _contour_values(params, N, count)
        IA = kernels.cauchy_sum(t, fa, z)
        IB = kernels.cauchy_sum(t, fb, z)
        if prev is not None:
            dA = abs(IA - prev[0])
            dB = abs(IB - prev[1])
            if dA <= CAUCHY_RTOL * abs(IA) and dB <= CAUCHY_RTOL * max(abs(IB), abs(IA) * 1e-3):
                return IA, IB, count
        prev = (IA, IB)
        count *= 2
    raise ConvergenceError(f"trapezoid rule did not converge by {NODES_MAX} nodes")


def ab_cauchy(params: Params, z: complex, N: int = DEFAULT_N, bounds: bool = True) -> ABValue:
    """A, B inside |z - 1| < 1 from Cauchy's formula on |t - 1| = 1."""
    _check_N(N)
    point = z if isinstance(z, PlanePoint) else map_point(z)
    z = point.z
    if not abs(z - 1.0) < 1.0:
        raise RegionError("ab_cauchy needs |z - 1| < 1")
    IA, IB, count = cauchy_integrals(params, z, N)
    xi = point.xi
    P, Ptr = prefactors(params, N)
    A = P * IA
    B = P * xi * IB
    bA = bB = 0.0
    if bounds:
        eb = error_bounds_AB(params, N)
        bA = float(abs(Ptr) * eb.delta_A(z) + abs(Ptr - P) * abs(IA))
        bB = float(abs(xi) * (abs(Ptr) * eb.delta_B_over_xi(z) + abs(Ptr - P) * abs(IB)))
    return ABValue(A, B, Method.CAUCHY_DISK, bA, bB, count)


def l_factor(z: complex) -> float:
    """\\oint_{|t-1|=1} |dt / (t - z)| for |z - 1| < 1."""
    r = abs(complex(z) - 1.0)
    if r >= 1.0:
        raise RegionError("l(z) needs |z - 1| < 1")
    k = 2.0 * math.sqrt(r) / (r + 1.0)
    return 4.0 * elliptic_K(k) / (r + 1.0)


@dataclass(frozen=True)
class ErrorBoundsAB:
    """Suprema over the upper half of |z - 1| = 1 and the derived disk bounds."""
    N: int
    M_N_shift: float      # M_N(nu+1, u)
    M_N: float            # M_N(nu, u)
    eta_N: float
    eta_N_K_shift: float  # eta_N^(K)(nu+1, u)
    eta_N_K: float        # eta_N^(K)(nu, u)
    xi_min: float
    certification: Certification = Certification.SAMPLED_SUPREMUM

    def delta_A(self, z) -> float:
        e, k = self.eta_N, self.eta_N_K_shift
        return self.M_N_shift * (e + k + e * k) * l_factor(z) / (2 * math.pi)

    def delta_B(self, z) -> float:
        e, k = self.eta_N, self.eta_N_K
        return self.M_N * (e + k + e * k) * l_factor(z) / (2 * math.pi)

    def delta_B_over_xi(self, z) -> float:
        return self.delta_B(z) / self.xi_min

    @property
    def bound_A(self):
        return self.delta_A

    @property
    def bound_B(self):
        return self.delta_B


@lru_cache(maxsize=64)
def error_bounds_AB(params: Params, N: int = DEFAULT_N) -> ErrorBoundsAB:
    """Sampled suprema of the LG, Bessel-K and exponential factors on the contour."""
    _check_N(N)
    table = _table(params, N)
    u = params.u
    phi = np.linspace(0.0, math.pi, SUP_SAMPLES)
    pts = [map_point(1.0 + cmath.exp(1j * p)) for p in phi]
    pts[-1] = map_point(0.0)
    beta = np.array([p.beta for p in pts])
    xi = np.array([p.xi for p in pts])
    M = []
    for shifted in (True, False):
        ev, od = _sums(table, beta, xi, u, N, shifted)
        M.append(float(max(np.max(np.abs(np.exp(ev + od))), np.max(np.abs(np.exp(ev - od))))))
    eta = max(_bound_eta(params, b, N, j)[0] for b in beta for j in (0, -1))
    a1, a0 = _a_lists(params, N)
    kk = []
    for a in (a1, a0):
        kk.append(max(_eta_K(params, a, x, N, j) for x in xi for j in (0, -1)))
    s = SUP_SAFETY
    return ErrorBoundsAB(N, s * M[0], s * M[1], s * eta, s * kk[0], s * kk[1],
                         float(np.min(np.abs(xi))) / s)


# -- assembled solutions -------------------------------------------------------------

def _log_front_C(params: Params):
    """ln[sqrt(u pi / 2) Gamma(u/2 + lam/2) / (Gamma(u/2 - lam/2 + 1) Gamma(lam))]."""
    with mp.workdps(25):
        lam = mpf(params.lam)
        u = lam + params.n
        r = (mp.log(u * mp.pi / 2) / 2 + log_gamma(u / 2 + lam / 2, 25)
             - log_gamma(u / 2 - lam / 2 + 1, 25) - log_gamma(lam, 25))
        return float(r)


def c_at_one(params: Params) -> float:
    """C_n^(lam)(1) = (2 lam)_n / n!."""
    lam, n = params.lam, params.n
    with mp.workdps(25):
        r = mp.exp(log_gamma(2 * mpf(lam) + n, 25) - log_gamma(2 * mpf(lam), 25)
                   - log_gamma(mpf(n + 1), 25))
        return float(r)


def eval_C_real(params: Params, theta: float, N: int = DEFAULT_N_HAT,
                estimate: bool = True) -> BoundedValue:
    """C_n^(lam)(cos theta) from the Bessel-J form with re-expanded coefficients."""
    if not 0 <= theta <= math.pi / 2 + 1e-15:
        raise DomainError("theta must lie in [0, pi/2]")
    if theta == 0:
        return BoundedValue(c_at_one(params), 0.0, Certification.EXACT)
    ab = ab_hat_series(params, theta, N, estimate)
    u, nu = params.u, params.nu
    x = u * theta
    jn = bessel_J(nu, x)
    jn1 = bessel_J(nu + 1, x)
    front = math.exp(_log_front_C(params) + 0.5 * math.log(theta)
                     - params.lam * math.log(math.sin(theta)))
    value = front * (jn * ab.A - jn1 * ab.B)
    rounding = ROUNDING * (1 + x) * (abs(jn) + abs(jn1)) * max(abs(ab.A), abs(ab.B))
    bound = front * (abs(jn) * ab.bound_A + abs(jn1) * ab.bound_B + rounding)
    return BoundedValue(value, bound, Certification.TRUNCATION_ESTIMATE)


def envelope_approx(params: Params, theta: float, N: int = DEFAULT_N_HAT) -> float:
    """Asymptotic envelope sqrt(C^2 + (2 lam/n C_{n-1}^{lam+1})^2) at cos(theta)."""
    c = eval_C_real(params, theta, N, estimate=False).value
    if params.n == 0:
        return abs(c)
    d = eval_C_real(make_params(params.lam + 1, params.n - 1), theta, N, estimate=False).value
    d *= 2 * params.lam / params.n
    return math.hypot(c, d)


def ab_auto(params: Params, point: PlanePoint, N: int = DEFAULT_N) -> ABValue:
    """Series outside the unit disk around z = 1, Cauchy inside."""
    if abs(point.z - 1.0) >= DELTA_EVAL:
        return ab_series(params, point, N)
    return ab_cauchy(params, point, N)


def eval_all_solutions(params: Params, point: PlanePoint, N: int = DEFAULT_N):
    """C, D, D_{+1}, D_{-1} at real z >= 1 (C only on the interval [0, 1)).

    Each entry is a BoundedValue, or None where the solution is not
    assembled (the D family on the cut and at z = 1).
    """
    z = point.z
    if point.region is Region.REAL_INTERVAL_01:
        C = eval_C_real(params, math.acos(z.real), DEFAULT_N_HAT)
        return {"C": C, "D": None, "D_plus": None, "D_minus": None}
    if z.imag != 0 or z.real < 1:
        raise DomainError("eval_all_solutions needs real z >= 0")
    if z.real == 1.0:
        return {"C": BoundedValue(c_at_one(params), 0.0, Certification.EXACT),
                "D": None, "D_plus": None, "D_minus": None}
    ab = ab_auto(params, point, N)
    cert = Certification.SAMPLED_SUPREMUM if ab.method is Method.CAUCHY_DISK \
        else Certification.QUADRATURE
    nu, u = params.nu, params.u
    A, B = ab.A.real, ab.B.real
    with mp.workdps(25):
        lam = mpf(params.lam)
        zz = mpf(z.real)
        xi = mp.log(zz + mp.sqrt(zz * zz - 1))
        x = u * xi
        lpoch = log_gamma(lam + params.n, 25) - log_gamma(lam, 25)
        front = mp.exp(mp.log(u * mp.pi) / 2 + lpoch - (lam - mpf(1) / 2) * mp.log(2)
                       - log_gamma(mpf(params.n + 1), 25) + mp.log(xi) / 2
                       - (2 * (lam - mpf(1) / 2) + 1) / 4 * mp.log(zz * zz - 1))
        I0, I1 = bessel_I(nu, x, 25), bessel_I(nu + 1, x, 25)
        K0, K1 = bessel_K(nu, x, 25), bessel_K(nu + 1, x, 25)
        C = front * (I0 * A + I1 * B)
        bC = front * (I0 * ab.bound_A + I1 * ab.bound_B)
        D = front * (K0 * A - K1 * B)
        bD = front * (K0 * ab.bound_A + K1 * ab.bound_B)
        out = {"C": BoundedValue(float(C), float(bC), cert),
               "D": BoundedValue(float(D), float(bD), cert)}
        for key, sg in (("D_plus", 1), ("D_minus", -1)):
            # K_mu(x e^{+-pi i}) = e^{-+mu pi i} K_mu(x) -+ pi i I_mu(x)
            k0 = mp.expjpi(-sg * (lam - mpf(1) / 2)) * K0 - sg * 1j * mp.pi * I0
            k1 = mp.expjpi(-sg * (lam + mpf(1) / 2)) * K1 - sg * 1j * mp.pi * I1
            val = front * (k0 * A + k1 * B)
            bnd = front * (abs(k0) * ab.bound_A + abs(k1) * ab.bound_B)
            out[key] = BoundedValue(complex(val), float(bnd), cert)
    return out
