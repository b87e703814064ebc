"""Small special-function kernel: log-gamma, real-order Bessel J/I/K at
positive real argument, the complete elliptic integral K(k), and the gamma
ratio that normalises the slowly varying coefficient functions.

Everything is evaluated in mpmath multiprecision arithmetic (only its
elementary functions are used).  Passing ``dps=None`` returns a Python
float computed with a few guard digits; passing an integer returns an
``mpf`` correct to roughly that many significant digits.  The same code
path serves both, so the extended precision oracle and the double
precision evaluators agree by construction on method, not just on value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpf

from .domain import Params
from .errors import ConvergenceError, DomainError

FLOAT_DPS = 18
ORDER_MIN, ORDER_MAX = -0.5, 120.0
X_MAX = 1e4
_MAX_TERMS = 200000


def _target(dps):
    return FLOAT_DPS if dps is None else int(dps)


def _out(value, dps):
    return float(value) if dps is None else value


# -- gamma ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_table(m: int) -> tuple:
    b = [Fraction(0)] * (m + 1)
    b[0] = Fraction(1)
    for k in range(1, m + 1):
        acc = Fraction(0)
        binom = 1
        for j in range(k):
            acc += binom * b[j]
            binom = binom * (k + 1 - j) // (j + 1)
        b[k] = -acc / (k + 1)
    return tuple(b)


def _bernoulli(m: int) -> Fraction:
    size = 64
    while size < m:
        size *= 2
    return _bernoulli_table(size)[m]


def _lgamma_pos(x):
    """log Gamma(x) for mpf x > 0 at the ambient precision (Stirling)."""
    eps = mpf(2) ** (-mp.prec - 4)
    shift = max(0, int(math.ceil(0.45 * mp.dps + 10 - float(x))))
    prod = mpf(1)
    for k in range(shift):
        prod *= x + k
    y = x + shift
    s = (y - mpf(0.5)) * mp.log(y) - y + mp.log(2 * mp.pi) / 2
    y2 = y * y
    p = y
    for k in range(1, 400):
        b = _bernoulli(2 * k)
        term = mpf(b.numerator) / (b.denominator * (2 * k) * (2 * k - 1) * p)
        s += term
        if abs(term) < eps * abs(s):
            break
        p *= y2
    else:  # pragma: no cover - shift guarantees convergence
        raise ConvergenceError("Stirling series did not converge")
    return s - mp.log(prod)


def log_gamma(x, dps=None):
    """log Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    with mp.workdps(_target(dps) + 8):
        r = _lgamma_pos(mpf(x))
    return _out(r, dps)


def _is_nonpos_int(x) -> bool:
    return x <= 0 and x == int(x)


def _rgamma(x):
    """1/Gamma(x) for any real mpf x at the ambient precision."""
    if _is_nonpos_int(x):
        return mpf(0)
    if x > 0:
        return mp.exp(-_lgamma_pos(x))
    # reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
    return mp.sin(mp.pi * x) * mp.exp(_lgamma_pos(1 - x)) / mp.pi


def rgamma(x, dps=None):
    with mp.workdps(_target(dps) + 8):
        r = _rgamma(mpf(x))
    return _out(r, dps)


def gamma(x, dps=None):
    """Gamma(x) for real x that is not a nonpositive integer."""
    with mp.workdps(_target(dps) + 8):
        x = mpf(x)
        if _is_nonpos_int(x):
            raise DomainError("Gamma has a pole at nonpositive integers")
        r = 1 / _rgamma(x)
    return _out(r, dps)


# -- Bessel -----------------------------------------------------------------

def _check(order, x, extended):
    if not extended and not ORDER_MIN <= float(order) <= ORDER_MAX:
        raise DomainError(f"order {order} outside [{ORDER_MIN}, {ORDER_MAX}]")
    if not 0 < float(x) <= X_MAX:
        raise DomainError(f"argument {x} outside (0, {X_MAX}]")


def _power_series(nu, x, sign):
    """(x/2)^nu sum (sign x^2/4)^k / (k! Gamma(nu+k+1)); sign=-1 gives J."""
    eps = mpf(2) ** (-mp.prec)
    q = sign * x * x / 4
    t = (x / 2) ** nu * _rgamma(nu + 1)
    if t == 0:
        # nu is a negative integer: start at k = -nu where 1/Gamma is finite
        m = int(-nu)
        t = (x / 2) ** nu * q**m / (mp.factorial(m) * mp.factorial(0))
        k0 = m
    else:
        k0 = 0
    s = t
    k = k0
    while True:
        k += 1
        t *= q / (k * (nu + k))
        s += t
        if abs(t) <= eps * abs(s) and abs(k * (nu + k)) > abs(q):
            return s
        if k > _MAX_TERMS:
            raise ConvergenceError("Bessel power series did not converge")


def _hankel_terms(nu, x, eps):
    """Terms a_k(nu)/x^k of the large-argument expansions, or None when the
    series starts to diverge before reaching ``eps``."""
    mu = 4 * nu * nu
    terms = [mpf(1)]
    t = mpf(1)
    k = 0
    while True:
        k += 1
        t = t * (mu - (2 * k - 1) ** 2) / (8 * k * x)
        if abs(t) < eps and k > nu:
            return terms
        if t == 0:
            return terms
        if k > nu + 1 and abs(t) > abs(terms[-1]):
            return None
        if abs(t) > 100:
            # large terms cancel (J, I) or hide the subdominant exponential
            return None
        terms.append(t)
        if k > 4000:
            return None


def _besselj(nu, x, target):
    with mp.workdps(target + 6):
        nu, x = mpf(nu), mpf(x)
        if nu < 0 and nu == int(nu):
            return (-1) ** int(-nu) * _besselj(-nu, x, target)
        eps = mpf(10) ** (-(target + 4))
        terms = _hankel_terms(nu, x, eps) if x > 8 else None
        if terms is not None:
            p = sum(t * (-1) ** (k // 2) for k, t in enumerate(terms) if k % 2 == 0)
            q = sum(t * (-1) ** (k // 2) for k, t in enumerate(terms) if k % 2 == 1)
            w = x - (nu / 2 + mpf(1) / 4) * mp.pi
            return mp.sqrt(2 / (mp.pi * x)) * (p * mp.cos(w) - q * mp.sin(w))
    guard = int(float(x) / math.log(10)) + 6
    with mp.workdps(target + guard):
        return _power_series(mpf(nu), mpf(x), -1)


def _besseli(nu, x, target):
    with mp.workdps(target + 6):
        nu, x = mpf(nu), mpf(x)
        if nu < 0 and nu == int(nu):
            nu = -nu
        eps = mpf(10) ** (-(target + 4))
        # the recessive e^{-x} part of I is dropped, so require it negligible
        if 2 * x > (target + 4) * math.log(10):
            terms = _hankel_terms(nu, x, eps)
            if terms is not None:
                s = sum(t * (-1) ** k for k, t in enumerate(terms))
                return mp.exp(x) / mp.sqrt(2 * mp.pi * x) * s
        return _power_series(nu, x, 1)


def _besselk_int(n, x):
    """K_n for integer n >= 0 from its logarithmic power series."""
    eps = mpf(2) ** (-mp.prec)
    h = x / 2
    q = h * h
    s1 = mpf(0)
    if n > 0:
        t = mp.factorial(n - 1)
        for k in range(n):
            if k > 0:
                t *= -q / (k * (n - k))
            s1 += t
        s1 = s1 / (2 * h**n)
    # psi(k+1) + psi(n+k+1) via harmonic numbers
    harm_k = mpf(0)
    harm_nk = sum(mpf(1) / j for j in range(1, n + 1))
    t = h**n / mp.factorial(n)
    s2 = (harm_k + harm_nk - 2 * mp.euler) * t
    k = 0
    while True:
        k += 1
        harm_k += mpf(1) / k
        harm_nk += mpf(1) / (n + k)
        t *= q / (k * (n + k))
        term = (harm_k + harm_nk - 2 * mp.euler) * t
        s2 += term
        if abs(term) <= eps * abs(s2) and k > q:
            break
    log_part = mp.log(h) * _power_series(mpf(n), x, 1)
    sgn = (-1) ** n
    return s1 - sgn * log_part + sgn * s2 / 2


def _besselk(nu, x, target):
    with mp.workdps(target + 6):
        nu, x = abs(mpf(nu)), mpf(x)
        eps = mpf(10) ** (-(target + 4))
        if x > 2:
            terms = _hankel_terms(nu, x, eps)
            if terms is not None:
                return mp.sqrt(mp.pi / (2 * x)) * mp.exp(-x) * sum(terms)
        is_int = nu == int(nu)
        sin_nu = 0 if is_int else abs(float(mp.sin(mp.pi * nu)))
    guard = int(2 * float(x) / math.log(10)) + 8
    if not is_int:
        guard += int(max(0.0, -math.log10(sin_nu)))
    with mp.workdps(target + guard):
        nu, x = mpf(nu), mpf(x)
        if is_int:
            return _besselk_int(int(nu), x)
        return mp.pi / (2 * mp.sin(mp.pi * nu)) * (
            _power_series(-nu, x, 1) - _power_series(nu, x, 1)
        )


def bessel_J(order, x, dps=None, extended=False):
    """J_order(x) for real order and 0 < x <= 1e4."""
    _check(order, x, extended)
    target = _target(dps)
    r = _besselj(order, x, target)
    with mp.workdps(target):
        return _out(+r, dps)


def bessel_I(order, x, dps=None, extended=False):
    """I_order(x); ``extended`` admits orders below -1/2 (oracle use)."""
    _check(order, x, extended)
    target = _target(dps)
    r = _besseli(order, x, target)
    with mp.workdps(target):
        return _out(+r, dps)


def bessel_K(order, x, dps=None, extended=False):
    """K_order(x) for 0 < x <= 1e4."""
    _check(order, x, extended)
    target = _target(dps)
    r = _besselk(order, x, target)
    with mp.workdps(target):
        return _out(+r, dps)


# -- elliptic integral ------------------------------------------------------

def elliptic_K(k, dps=None):
    """Complete elliptic integral of the first kind (modulus k) by AGM."""
    if not 0 <= float(k) < 1:
        raise DomainError(f"elliptic_K needs 0 <= k < 1, got {k}")
    if dps is None:
        a, b = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
        for _ in range(64):
            if abs(a - b) <= 4e-16 * a:
                break
            a, b = 0.5 * (a + b), math.sqrt(a * b)
        return math.pi / (a + b)
    with mp.workdps(dps + 5):
        k = mpf(k)
        a, b = mpf(1), mp.sqrt((1 - k) * (1 + k))
        tol = mpf(10) ** (-(dps + 3))
        while abs(a - b) > tol * a:
            a, b = (a + b) / 2, mp.sqrt(a * b)
        r = mp.pi / (a + b)
    with mp.workdps(dps):
        return +r


# -- gamma-ratio prefactor --------------------------------------------------

@dataclass(frozen=True)
class PrefactorSpec:
    params: Params
    value: float


def log_prefactor(params: Params, dps=None):
    """log of 2^(lam-1) Gamma(u/2+lam/2) n! / (Gamma(u) Gamma(u/2-lam/2+1))."""
    target = _target(dps)
    with mp.workdps(target + 8):
        lam, n = mpf(params.lam), params.n
        u = lam + n
        r = (
            (lam - 1) * mp.log(2)
            + _lgamma_pos(u / 2 + lam / 2)
            + _lgamma_pos(mpf(n + 1))
            - _lgamma_pos(u)
            - _lgamma_pos(u / 2 - lam / 2 + 1)
        )
    with mp.workdps(target):
        return _out(+r, dps)


def prefactor(params: Params) -> PrefactorSpec:
    """The common gamma-ratio factor of the slowly varying functions A, B."""
    with mp.workdps(FLOAT_DPS + 8):
        value = mp.exp(log_prefactor(params, dps=FLOAT_DPS + 4))
    return PrefactorSpec(params, float(value))
