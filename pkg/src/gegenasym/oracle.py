"""Extended-precision reference values.

Everything here is summed directly from convergent series or finite sums
in multiprecision arithmetic (default 60 digits) and never touches the
asymptotic machinery.  Parameters are taken at their exact binary values.
"""
from __future__ import annotations

import json
import math

from mpmath import mp, mpc, mpf

from .domain import Params, make_params
from .errors import ConvergenceError, DomainError
from .specfun import bessel_I, bessel_K, log_gamma, rgamma

ORACLE_DPS = 60
MAX_TERMS = 100000
RECURRENCE_ABOVE = 100


def _lam(params):
    return mpf(params.lam)


def oracle_C_sum(params: Params, x, dps: int = ORACLE_DPS):
    """C_n^(lam)(x) from the explicit alternating sum."""
    n = params.n
    with mp.workdps(dps + 10):
        lam, x = _lam(params), mpf(x)
        # (lam)_{n-k} / (k! (n-2k)!) (2x)^(n-2k), built from k = 0 upwards
        poch = mpf(1)
        for j in range(n):
            poch *= lam + j
        fact = mpf(math.factorial(n))
        term = poch / fact * (2 * x) ** n if n > 0 else mpf(1)
        if n > 0 and x == 0:
            # only the k = n/2 term survives
            if n % 2:
                return mpf(0)
            k = n // 2
            poch = mpf(1)
            for j in range(n - k):
                poch *= lam + j
            val = (-1) ** k * poch / math.factorial(k)
            with mp.workdps(dps):
                return +val
        acc = term
        for k in range(1, n // 2 + 1):
            m = n - 2 * k
            # ratio term_k / term_{k-1}
            term *= -(m + 2) * (m + 1) / (k * (lam + n - k) * 4 * x * x)
            acc += term
    with mp.workdps(dps):
        return +acc


def oracle_C_recurrence(params: Params, x, dps: int = ORACLE_DPS):
    """C_n^(lam)(x) from the three-term recurrence in degree."""
    n = params.n
    with mp.workdps(dps + 10):
        lam, x = _lam(params), mpf(x)
        c0, c1 = mpf(1), 2 * lam * x
        if n == 0:
            c1 = c0
        for k in range(1, n):
            c0, c1 = c1, (2 * x * (k + lam) * c1 - (k + 2 * lam - 1) * c0) / (k + 1)
    with mp.workdps(dps):
        return +c1


def oracle_C(params: Params, x, dps: int = ORACLE_DPS):
    """Exact C_n^(lam)(x); recurrence is authoritative above degree 100."""
    if params.n > 500:
        raise DomainError("oracle_C supports n <= 500")
    if params.n > RECURRENCE_ABOVE:
        return oracle_C_recurrence(params, x, dps)
    return oracle_C_sum(params, x, dps)


def log_kn(params: Params, dps: int = ORACLE_DPS):
    with mp.workdps(dps + 10):
        nu = _lam(params) - mpf(1) / 2
        n = params.n
        half = mpf(1) / 2
        r = (mp.log(mp.pi) + log_gamma(2 * nu + n + 1, dps + 10)
             - log_gamma(nu + half, dps + 10) - log_gamma(nu + n + 1 + half, dps + 10))
    return r


def _sum_series(a, b, c, y, dps, scaled):
    """sum (a)_s (b)_s y^s / s! over (c)_s, or over Gamma(c+s) if ``scaled``.

    Needs |y| < 1 and c not a nonpositive integer.  The tail after a term
    is bounded by term * rho / (1 - rho) with rho the larger of the current
    term ratio and its limit |y|; summation stops once that is below
    10^-(dps+5) of the partial sum.
    """
    with mp.workdps(dps + 10):
        tol = mpf(10) ** -(dps + 5)
        term = rgamma(c, dps + 10) if scaled else mpf(1)
        acc = term
        ay = abs(y)
        for s in range(MAX_TERMS):
            ratio = (a + s) * (b + s) / ((c + s) * (s + 1))
            term *= ratio * y
            acc += term
            if term == 0:
                return acc
            rho = max(abs(ratio) * ay, ay)
            if rho < 1 and abs(term) * rho / (1 - rho) <= tol * abs(acc):
                return acc
        raise ConvergenceError("hypergeometric series did not converge")


def oracle_D(params: Params, z, dps: int = ORACLE_DPS):
    """D_n^(lam)(z) for real z > 3 from its hypergeometric series."""
    z = mpf(z)
    if not z > 3:
        raise DomainError("oracle_D needs real z > 3")
    with mp.workdps(dps + 10):
        nu = _lam(params) - mpf(1) / 2
        n = params.n
        a, b, c = 2 * nu + n + 1, nu + n + 1, 2 * nu + 2 * n + 2
        y = 2 / (1 - z)
        F = _sum_series(a, b, c, y, dps, scaled=False)
        r = mp.exp(log_kn(params, dps) - a * mp.log(2 * (z - 1))) * F
    with mp.workdps(dps):
        return +r


def oracle_hatC(params: Params, z, dps: int = ORACLE_DPS):
    """Second solution recessive-free at z = 1 (scaled 2F1 form), real z > -1.

    For (1 - z)/2 < -1/2 the series is summed after a Pfaff transformation,
    which extends the range to every z > 1.  Points 0 <= z < 1 are taken on
    the upper side of the cut and give a complex value.
    """
    with mp.workdps(dps + 10):
        nu = _lam(params) - mpf(1) / 2
        if nu >= 1 and nu == int(nu):
            raise DomainError("integer nu needs the limiting form")
        n = params.n
        z = mpf(z)
        if z <= -1:
            raise DomainError("oracle_hatC needs z > -1")
        a, b, c = -2 * nu - n, mpf(n + 1), 1 - nu
        x = (1 - z) / 2
        if x < -mpf(1) / 2:
            y = x / (x - 1)
            F = (1 - x) ** (-a) * _sum_series(a, c - b, c, y, dps, scaled=True)
        else:
            F = _sum_series(a, b, c, x, dps, scaled=True)
        if z > 1:
            w = (z * z - 1) ** (-nu)
        else:
            w = mp.exp(-nu * (mp.log(mpc(z - 1, 0)) + mp.log(z + 1)))
        r = mp.sqrt(mp.pi) * rgamma(_lam(params), dps + 10) * w * F
    with mp.workdps(dps):
        return +r


def oracle_AB(params: Params, z, dps: int = ORACLE_DPS):
    """Exact (A, B) at real z > 3 from C, D and modified Bessel functions."""
    z = mpf(z)
    C = oracle_C(params, z, dps + 10)
    D = oracle_D(params, z, dps + 10)
    with mp.workdps(dps + 10):
        lam = _lam(params)
        nu = lam - mpf(1) / 2
        n = params.n
        u = lam + n
        xi = mp.log(z + mp.sqrt(z * z - 1))
        x = u * xi
        poch = mpf(1)
        for j in range(n):
            poch *= lam + j
        front = (2 ** nu * math.factorial(n) / poch * mp.sqrt(x / mp.pi)
                 * (z * z - 1) ** ((2 * nu + 1) / 4))
        d = dps + 10
        A = front * (C * bessel_K(nu + 1, x, d) + D * bessel_I(nu + 1, x, d))
        B = front * (C * bessel_K(nu, x, d) - D * bessel_I(nu, x, d))
    with mp.workdps(dps):
        return +A, +B


def oracle_envelope(params: Params, theta, dps: int = ORACLE_DPS):
    """sqrt(C_n^lam(cos t)^2 + (2 lam/n C_{n-1}^{lam+1}(cos t))^2)."""
    with mp.workdps(dps + 10):
        x = mp.cos(mpf(theta))
        c = oracle_C(params, x, dps + 10)
        if params.n == 0:
            d = mpf(0)
        else:
            shifted = make_params(params.lam + 1, params.n - 1)
            d = 2 * _lam(params) / params.n * oracle_C(shifted, x, dps + 10)
        r = mp.sqrt(c * c + d * d)
    with mp.workdps(dps):
        return +r


def _cheb_deriv_direct(n, r, x):
    """d^r T_n / dx^r from the differentiated recurrence."""
    prev = [mpf(1)] + [mpf(0)] * r          # T_0 and derivatives
    cur = [x, mpf(1)] + [mpf(0)] * (r - 1)  # T_1
    cur = cur[: r + 1]
    if n == 0:
        return prev[r]
    for _ in range(1, n):
        nxt = [2 * x * cur[0] - prev[0]]
        for q in range(1, r + 1):
            nxt.append(2 * x * cur[q] + 2 * q * cur[q - 1] - prev[q])
        prev, cur = cur, nxt
    return cur[r]


def oracle_cheb_deriv(n: int, r: int, x, dps: int = ORACLE_DPS):
    """d^r T_n/dx^r = 2^(r-1) (r-1)! n C_{n-r}^(r)(x), checked two ways."""
    if not 1 <= r <= n:
        raise DomainError("need 1 <= r <= n")
    with mp.workdps(dps + 10):
        x = mpf(x)
        a = 2 ** (r - 1) * math.factorial(r - 1) * n * oracle_C(make_params(r, n - r), x, dps + 10)
        b = _cheb_deriv_direct(n, r, x)
        scale = max(abs(a), abs(b), mpf(1))
        if abs(a - b) > mpf(10) ** -40 * scale:
            raise AssertionError(f"Chebyshev derivative mismatch: {a} vs {b}")
    with mp.workdps(dps):
        return +a


def oracle_dump(params: Params, thetas, dps: int = ORACLE_DPS) -> str:
    """JSON (decimal strings) of C and the envelope on a theta grid."""
    rows = []
    with mp.workdps(dps):
        for t in thetas:
            x = mp.cos(mpf(t))
            rows.append({
                "theta": repr(float(t)),
                "C": mp.nstr(oracle_C(params, x, dps), dps),
                "envelope": mp.nstr(oracle_envelope(params, t, dps), dps),
            })
    doc = {"lambda": params.lam, "n": params.n, "dps": dps, "rows": rows}
    return json.dumps(doc, indent=1)
