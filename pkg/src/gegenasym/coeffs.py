"""Recursive construction of the expansion coefficients.

The exponent coefficients of the Liouville-Green expansions are
polynomials in beta = z / sqrt(z**2 - 1).  They are built per value of nu
in multiprecision arithmetic, then frozen in a :class:`CoeffTable` that
also carries float copies for the double precision kernels.

On the oscillatory interval z = cos(theta) + i0 the coefficients are
re-expanded into the functions A_s(theta), B_s(theta) of
``build_ab_theta``.  Those are analytic at theta = 0 although every
individual term is singular there; below ``THETA_MIN`` they are obtained
from Cauchy's formula on a circle in the complex theta plane.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from mpmath import mp, mpc, mpf

from .domain import PlanePoint
from .errors import DomainError, PoleError, PrecisionError

DEFAULT_DPS = 50
N_CAP = 12
THETA_MIN = 0.05
#: radius and node count of the theta-plane circle used below THETA_MIN
THETA_RADIUS = 0.5
THETA_NODES = 64


# -- polynomial helpers (coefficient lists, index = power) ------------------

def _padd(p, q):
    n = max(len(p), len(q))
    return [(p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(n)]


def _pmul(p, q):
    out = [mpf(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _pscale(p, c):
    return [c * a for a in p]


def _pderiv(p):
    return [k * p[k] for k in range(1, len(p))] or [mpf(0)]


def _div_b2m1(p):
    """Divide by (b**2 - 1); return quotient and the size of the remainder."""
    r = list(p)
    d = len(r) - 1
    if d < 2:
        return [mpf(0)], max(abs(c) for c in r)
    q = [mpf(0)] * (d - 1)
    for k in range(d, 1, -1):
        c = r[k]
        q[k - 2] = c
        r[k] = 0
        r[k - 2] += c
    return q, max(abs(r[0]), abs(r[1]))


def _horner(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class BetaPolynomial:
    """Polynomial in beta with multiprecision coefficients."""

    coeffs: tuple

    def __call__(self, beta):
        return _horner(self.coeffs, beta)

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return 0

    @property
    def parity(self) -> str:
        even = all(c == 0 for c in self.coeffs[1::2])
        odd = all(c == 0 for c in self.coeffs[0::2])
        if even and not odd:
            return "Even"
        if odd and not even:
            return "Odd"
        return "Even" if even else "Mixed"


# -- table ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CoeffTable:
    nu: float
    N: int
    dps: int
    Ftilde: tuple        # BetaPolynomial, index s (entry 0 unused)
    Fquot: tuple         # Ftilde[s] / (1 - b**2)
    Etilde: tuple
    E_at_1: tuple        # Etilde[s](1)
    a: tuple             # a_s(nu), index s
    a_shift: tuple       # a_s(nu + 1)
    arrays: dict = field(repr=False)

    def etilde_array(self) -> np.ndarray:
        return self.arrays["etilde"]


def bessel_exponent_coeffs(nu, N):
    """a_1..a_N of the exponential-form expansion of K_nu (index 0 unused)."""
    a = [mpf(0)] * (N + 1)
    a1 = (4 * mpf(nu) ** 2 - 1) / 8
    a[1] = a1
    if N >= 2:
        a[2] = a1
    for s in range(2, N):
        acc = (s + 1) * a[s] / 2
        for j in range(1, s):
            acc -= a[j] * a[s - j] / 2
        a[s + 1] = acc
    return a


def _frozen(arr):
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=64)
def build_coeff_table(nu: float, N: int, dps: int = DEFAULT_DPS) -> CoeffTable:
    """All beta-polynomial and Bessel-exponent coefficients up to order N."""
    if N < 1:
        raise DomainError("N must be >= 1")
    if N > N_CAP:
        raise DomainError(f"N > {N_CAP} is not supported")
    with mp.workdps(dps):
        nu_m = mpf(nu)
        c = (4 * nu_m**2 - 1) / 8
        F = [None, [-c, mpf(0), c], [mpf(0), -c, mpf(0), c]]
        half = mpf(1) / 2
        b2m1 = [mpf(-1), mpf(0), mpf(1)]
        for s in range(2, N):
            nxt = _pscale(_pmul(b2m1, _pderiv(F[s])), half)
            for j in range(1, s):
                nxt = _padd(nxt, _pscale(_pmul(F[j], F[s - j]), -half))
            F.append(nxt)
        F = F[: N + 1]

        scale = max([mpf(1)] + [abs(x) for p in F[1:] for x in p])
        if not mp.isfinite(scale) or scale > mpf(10) ** 300:
            raise OverflowError(f"coefficients overflow at nu={nu}, N={N}")
        tol = mpf(10) ** (-30) * scale

        Fq, E = [None], [None]
        for s in range(1, N + 1):
            q, rem = _div_b2m1(F[s])
            if rem > tol:
                raise PrecisionError(f"F_{s}(b) not divisible by b^2-1 (residual {rem})")
            Fq.append(_pscale(q, -1))
            # E_s = -int_0^beta q(b) db
            E.append([mpf(0)] + [-q[k] / (k + 1) for k in range(len(q))])

        a = bessel_exponent_coeffs(nu_m, N)
        a1 = bessel_exponent_coeffs(nu_m + 1, N)
        E_at_1 = [mpf(0)] + [_horner(E[s], mpf(1)) for s in range(1, N + 1)]

        width = N + 2
        etab = np.zeros((N + 1, width))
        fq = np.zeros((N + 1, width))
        ftab = np.zeros((N + 1, width + 1))
        for s in range(1, N + 1):
            etab[s, : len(E[s])] = [float(x) for x in E[s]]
            fq[s, : len(Fq[s])] = [float(x) for x in Fq[s]]
            ftab[s, : len(F[s])] = [float(x) for x in F[s]]
        arrays = {
            "etilde": _frozen(etab),
            "fquot": _frozen(fq),
            "ftilde": _frozen(ftab),
            "a": _frozen(np.array([float(x) for x in a])),
            "a_shift": _frozen(np.array([float(x) for x in a1])),
            "E_at_1": _frozen(np.array([float(x) for x in E_at_1])),
        }
        wrap = lambda ps: (None,) + tuple(BetaPolynomial(tuple(p)) for p in ps[1:])
        return CoeffTable(
            nu=float(nu), N=N, dps=dps,
            Ftilde=wrap(F), Fquot=wrap(Fq), Etilde=wrap(E),
            E_at_1=tuple(E_at_1), a=tuple(a), a_shift=tuple(a1),
            arrays=arrays,
        )


def table_to_json(table: CoeffTable) -> str:
    """Decimal-string dump for diffing against other implementations."""
    with mp.workdps(table.dps):
        s = lambda x: mp.nstr(x, table.dps)
        doc = {
            "nu": table.nu,
            "N": table.N,
            "dps": table.dps,
            "Ftilde": [[s(c) for c in p.coeffs] for p in table.Ftilde[1:]],
            "Etilde": [[s(c) for c in p.coeffs] for p in table.Etilde[1:]],
            "E_at_1": [s(x) for x in table.E_at_1[1:]],
            "a": [s(x) for x in table.a[1:]],
            "a_shift": [s(x) for x in table.a_shift[1:]],
        }
    return json.dumps(doc, indent=1)


# -- combined coefficients --------------------------------------------------

def eval_script_e(table: CoeffTable, s: int, point: PlanePoint, shifted: bool = False) -> complex:
    """E_s(beta) + (-1)^(s+1) a_s / (s xi^s), with a_s(nu+1) if ``shifted``."""
    if not 1 <= s <= table.N:
        raise DomainError(f"order {s} outside 1..{table.N}")
    xi = point.xi
    if xi == 0:
        raise PoleError("script E has a pole at z = 1")
    a = table.arrays["a_shift" if shifted else "a"][s]
    poly = table.arrays["etilde"][s]
    beta = point.beta
    val = 0j
    for c in poly[::-1]:
        val = val * beta + c
    return val + (-1) ** (s + 1) * a / (s * xi**s)


def _hat_e_all(table, theta, shifted, smax):
    """hat-E_1..hat-E_smax at (possibly complex) mp theta, ambient precision."""
    a = table.a_shift if shifted else table.a
    icot = mpc(0, 1) * mp.cot(theta)
    out = [None]
    for m in range(1, smax + 1):
        e = table.Etilde[m](icot)
        if m % 2 == 0:
            k = m // 2
            out.append(e + (-1) ** (k + 1) * a[m] / (m * theta**m))
        else:
            k = (m - 1) // 2
            out.append(mpc(0, 1) * e + (-1) ** (k + 1) * a[m] / (m * theta**m))
    return out


def eval_hat_e(table: CoeffTable, s: int, theta: float, shifted: bool = False) -> float:
    """Real-interval coefficient hat-E_s(nu, theta) (nu+1 in the a_s if shifted)."""
    if not 1 <= s <= table.N:
        raise DomainError(f"order {s} outside 1..{table.N}")
    if theta <= 0:
        raise PoleError("hat-E has a pole at theta = 0")
    if theta > math.pi / 2 + 1e-15:
        raise DomainError("theta must lie in (0, pi/2]")
    with mp.workdps(table.dps):
        v = _hat_e_all(table, mpf(theta), shifted, s)[s]
        return float(mp.re(v))


def _cauchy_recursion(hat):
    """Coefficients of exp(sum iota_s hat_s / u^s) = 1 + sum iota_s X_s / u^s."""
    smax = len(hat) - 1
    X = [mpf(1)]
    biggest = mpf(0)
    for s in range(1, smax + 1):
        acc = 0
        for j in range(1, s):
            sign = -1 if (s % 2 == 0 and j % 2 == 1) else 1
            term = sign * j * hat[j] * X[s - j]
            biggest = max(biggest, abs(term) / s)
            acc += term
        X.append(hat[s] + acc / s)
        biggest = max(biggest, abs(hat[s]))
    return X, biggest


def _ab_direct(table, theta, N):
    hat_a = _hat_e_all(table, theta, True, 2 * N)
    hat_b = _hat_e_all(table, theta, False, 2 * N - 1) if N > 0 else [None]
    XA, big_a = _cauchy_recursion(hat_a)
    XB, big_b = _cauchy_recursion(hat_b)
    A = [XA[2 * s] for s in range(N + 1)]
    B = [XB[2 * s + 1] for s in range(N)]
    return A, B, max(big_a, big_b)


@lru_cache(maxsize=128)
def _circle_values(table: CoeffTable, N: int):
    with mp.workdps(table.dps):
        nodes, vals_a, vals_b = [], [], []
        for j in range(THETA_NODES):
            t = THETA_RADIUS * mp.expjpi(mpf(2 * j + 1) / THETA_NODES)
            A, B, _ = _ab_direct(table, t, N)
            nodes.append(t)
            vals_a.append(A)
            vals_b.append(B)
        return nodes, vals_a, vals_b


def _ab_small_theta(table, theta, N):
    nodes, vals_a, vals_b = _circle_values(table, N)
    with mp.workdps(table.dps):
        theta = mpf(theta)
        w = [t / (t - theta) for t in nodes]
        A = [mp.re(sum(w[j] * vals_a[j][s] for j in range(THETA_NODES))) / THETA_NODES
             for s in range(N + 1)]
        B = [mp.re(sum(w[j] * vals_b[j][s] for j in range(THETA_NODES))) / THETA_NODES
             for s in range(N)]
    return A, B


def build_ab_theta(table: CoeffTable, theta: float, N: int):
    """A_0..A_N and B_0..B_{N-1} at 0 <= theta <= pi/2 (floats).

    ``table`` must be built for nu with order at least 2N.
    """
    if 2 * N > table.N:
        raise DomainError(f"table order {table.N} < 2N = {2 * N}")
    if not 0 <= theta <= math.pi / 2 + 1e-15:
        raise DomainError("theta must lie in [0, pi/2]")
    if theta < THETA_MIN:
        A, B = _ab_small_theta(table, theta, N)
    else:
        with mp.workdps(table.dps):
            A, B, big = _ab_direct(table, mpf(theta), N)
            scale = max([abs(x) for x in A + B] + [mpf(1)])
            lost = float(mp.log10(big / scale)) if big > 0 else 0.0
            if lost > table.dps - 20:
                raise PrecisionError(f"{lost:.0f} digits cancelled at theta={theta}")
            A = [mp.re(x) for x in A]
            B = [mp.re(x) for x in B]
    return [float(x) for x in A], [float(x) for x in B]
