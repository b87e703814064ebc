"""Liouville-Green expansions of the companion solutions and their bounds.

D_n (recessive at +infinity) and D_{n,-1}, D_{n,+1} (recessive at -i inf,
+i inf across the cut) are approximated by exponentials of sums of the
beta polynomials.  Each comes with the bound

    |eta| <= u^-N omega exp(varpi/u + omega/u^N)

where omega and varpi are path integrals of |F_s(b)/(1-b^2)| products.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from mpmath import mp, mpf

from . import kernels
from .coeffs import bessel_exponent_coeffs, build_coeff_table
from .domain import Params, PlanePoint
from .errors import DomainError, RegionError
from .paths import PathSpec, beta_path, integrate, inverse_power_integrals
from .specfun import log_gamma


@dataclass(frozen=True)
class LGResult:
    value: complex
    truncation_N: int
    eta_bound: float
    path_descriptor: PathSpec
    log_value: complex = 0j


def log_kn_params(params: Params, dps=None):
    """ln of pi Gamma(2nu+n+1) / (Gamma(nu+1/2) Gamma(nu+n+3/2))."""
    nu, n = params.nu, params.n
    if dps is None:
        return (math.log(math.pi) + log_gamma(2 * nu + n + 1)
                - log_gamma(nu + 0.5) - log_gamma(nu + n + 1.5))
    with mp.workdps(dps):
        nu = mpf(params.lam) - mpf(1) / 2
        return (mp.log(mp.pi) + log_gamma(2 * nu + n + 1, dps)
                - log_gamma(nu + mpf(1) / 2, dps) - log_gamma(nu + n + mpf(3) / 2, dps))


def _table(nu, order):
    return build_coeff_table(float(nu), max(int(order), 1))


def _check_region(point: PlanePoint):
    if point.z.real < 0:
        raise RegionError("LG expansions are evaluated for Re(z) >= 0")
    if abs(point.z - 1.0) < 1.0 - 1e-12:
        raise RegionError("LG expansions are restricted to |z - 1| >= 1")


def _etilde_sum(table, beta, u, N, signs):
    """sum_{s<N} sign_s (E_s(beta) - E_s(ref)) / u^s with ref folded in signs."""
    vals = kernels.poly_eval(table.arrays["etilde"][:N], np.array([beta]))[:, 0]
    e1 = table.arrays["E_at_1"]
    acc = 0j
    for s in range(1, N):
        acc += signs(s, vals[s], e1[s]) / u**s
    return acc


def _log_front(params, point):
    # ln k_n - (2nu+1)/4 ln(4(z^2-1)), principal logs on the cut plane
    z = point.z
    lg4 = math.log(4.0) + cmath.log(z - 1.0) + cmath.log(z + 1.0)
    return log_kn_params(params) - (2 * params.nu + 1) / 4 * lg4


def lg_D(params: Params, point: PlanePoint, N: int) -> LGResult:
    """LG approximation of D_n^(lam)(z), |z - 1| >= 1."""
    if N < 1:
        raise DomainError("N must be >= 1")
    _check_region(point)
    table = _table(params.nu, N)
    u = params.u
    ex = _etilde_sum(table, point.beta, u, N, lambda s, e, e1: (-1) ** s * (e - e1))
    logv = _log_front(params, point) - u * point.xi + ex
    bound, spec = _bound_eta(params, point.beta, N, 0)
    return LGResult(cmath.exp(logv), N, bound, spec, logv)


def lg_D_pm(params: Params, point: PlanePoint, N: int, sign: int) -> LGResult:
    """LG approximation of D_{n,sign}^(lam)(z) (sign = -1: Im z >= 0)."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    if N < 1:
        raise DomainError("N must be >= 1")
    _check_region(point)
    z = point.z
    if sign == -1 and (z.imag < 0 or (z.imag == 0 and math.copysign(1, z.imag) < 0)):
        raise RegionError("D_{n,-1} expansion needs the closed upper half plane")
    if sign == 1 and (z.imag > 0 or (z.imag == 0 and math.copysign(1, z.imag) > 0
                                     and z.real < 1)):
        raise RegionError("D_{n,+1} expansion needs the closed lower half plane")
    table = _table(params.nu, N)
    u = params.u
    # E_s(-1) = (-1)^s E_s(1) by parity
    ex = _etilde_sum(table, point.beta, u, N, lambda s, e, e1: e - (-1) ** s * e1)
    logv = _log_front(params, point) + u * point.xi + ex + complex(0, -sign * math.pi / 2)
    bound, spec = _bound_eta(params, point.beta, N, -1)
    return LGResult(cmath.exp(logv), N, bound, spec, logv)


def gamma_ratio_check(params: Params, N: int, dps: int = 40) -> float:
    """|Gamma-ratio - exp(sum_{s<N} (-1)^(s+1) E_s(1)/u^s)|, expected O(u^-N)."""
    if params.u < 5:
        raise DomainError("gamma-ratio check needs u >= 5")
    table = _table(params.nu, max(N - 1, 1))
    with mp.workdps(dps):
        lam = mpf(params.lam)
        u = lam + params.n
        half = mpf(1) / 2
        lhs = mp.exp((lam - 1) * mp.log(2) + log_gamma(u + 1, dps)
                     + log_gamma(half * u + half * lam, dps)
                     - log_gamma(u + lam, dps)
                     - log_gamma(half * u - half * lam + 1, dps))
        acc = mpf(0)
        for s in range(1, N):
            acc += (-1) ** (s + 1) * table.E_at_1[s] / u**s
        return float(abs(lhs - mp.exp(acc)))


# -- bounds ---------------------------------------------------------------------

def _eta_from(omega, varpi, u, N):
    return u ** (-N) * omega * math.exp(varpi / u + omega * u ** (-N))


def _beta_integrals(table, beta, N, j):
    """Path integrals needed by omega and varpi; None for an empty path."""
    spec, segs = beta_path(beta, j)
    if not segs:
        return spec, None
    fq = table.arrays["fquot"]
    ft = table.arrays["ftilde"]
    # integrand rows: |Fq_N|, |F_k Fq_m| for the pairs, |Fq_{s+1}|
    pairs = sorted({(k, s + N - k - 1) for s in range(1, N) for k in range(s, N)})
    index = {p: i + 1 for i, p in enumerate(pairs)}
    base = 1 + len(pairs)

    def integrand(b):
        fqc = kernels.poly_eval(fq[: N + 1], b)
        f = kernels.poly_eval(ft[:N], b)
        q = np.abs(fqc)
        rows = [q[N]]
        rows += [np.abs(f[k] * fqc[m]) for k, m in pairs]
        rows += [q[s + 1] for s in range(N - 1)]
        return np.array(rows)

    vals, nodes = integrate(segs, integrand)
    return PathSpec(spec.kind, nodes, spec.params), (vals, index, base)


def omega_varpi(table, beta, u, N, j):
    """(omega, varpi, path) of the LG bound at ``beta``."""
    spec, data = _beta_integrals(table, beta, N, j)
    if data is None:
        return 0.0, 0.0, spec
    vals, index, base = data
    omega = 2.0 * vals[0]
    for s in range(1, N):
        omega += u ** (-s) * sum(vals[index[(k, s + N - k - 1)]] for k in range(s, N))
    varpi = 4.0 * sum(u ** (-s) * vals[base + s] for s in range(N - 1))
    return float(omega), float(varpi), spec


def _bound_eta(params, beta, N, j):
    if abs(params.nu * params.nu - 0.25) == 0.0:
        return 0.0, PathSpec(beta_path(beta, j)[0].kind)
    table = _table(params.nu, N)
    omega, varpi, spec = omega_varpi(table, beta, params.u, N, j)
    return _eta_from(omega, varpi, params.u, N), spec


def bound_eta(params: Params, point: PlanePoint, N: int, j: int) -> float:
    """Bound on the relative error eta_{N,j} of the LG expansion at ``point``."""
    if j not in (0, -1):
        raise DomainError("j must be 0 or -1")
    return _bound_eta(params, point.beta, N, j)[0]


def bound_eta_K(nu_eff: float, u: float, xi: complex, N: int, j: int) -> float:
    """Bound on eta^(K)_{N,j} for the exponential form of K_nu(u xi)."""
    if j not in (0, -1):
        raise DomainError("j must be 0 or -1")
    with mp.workdps(30):
        a = [float(x) for x in bessel_exponent_coeffs(nu_eff, N)]
    if all(x == 0.0 for x in a[1:]):
        return 0.0
    omega, varpi = omega_varpi_K(a, u, xi, N, j)
    return _eta_from(omega, varpi, u, N)


def omega_varpi_K(a, u, xi, N, j):
    """omega^(K), varpi^(K) from the coefficient list ``a`` (index 0 unused)."""
    powers = np.arange(2, 2 * N + 1)
    _, ints = inverse_power_integrals(xi, j, powers)
    I = dict(zip(powers.tolist(), np.asarray(ints, dtype=float).tolist()))
    omega = 2.0 * abs(a[N]) * I[N + 1]
    for s in range(1, N):
        inner = sum(abs(a[k] * a[s + N - k - 1]) for k in range(s, N))
        omega += u ** (-s) * inner * I[s + N + 1]
    varpi = 4.0 * sum(u ** (-s) * abs(a[s + 1]) * I[s + 2] for s in range(N - 1))
    return omega, varpi
