"""Pure numpy versions of the hot loops (see ``kernels``)."""
import numpy as np


def poly_eval(table, x):
    """Evaluate every row of ``table`` (coefficients, index = power) at ``x``."""
    table = np.asarray(table, dtype=np.float64)
    x = np.asarray(x, dtype=np.complex128)
    out = np.zeros((table.shape[0], x.shape[0]), dtype=np.complex128)
    for k in range(table.shape[1] - 1, -1, -1):
        out = out * x + table[:, k:k + 1]
    return out


def exponent_sums(etab, a, beta, xi, u, smax):
    """Even and odd partial sums of E_s(beta) + (-1)^(s+1) a_s/(s xi^s), over u^s."""
    beta = np.asarray(beta, dtype=np.complex128)
    xi = np.asarray(xi, dtype=np.complex128)
    vals = poly_eval(np.asarray(etab)[: smax + 1], beta)
    even = np.zeros(beta.shape, dtype=np.complex128)
    odd = np.zeros(beta.shape, dtype=np.complex128)
    inv_xi = 1.0 / xi
    pw = np.ones_like(inv_xi)
    for s in range(1, smax + 1):
        pw = pw * inv_xi
        term = (vals[s] + (-1) ** (s + 1) * a[s] * pw / s) / u**s
        if s % 2:
            odd += term
        else:
            even += term
    return even, odd


def cauchy_sum(t, f, z):
    """Trapezoid value of (2 pi i)^-1 \\oint f(t)/(t - z) dt on |t - 1| = 1."""
    t = np.asarray(t, dtype=np.complex128)
    f = np.asarray(f, dtype=np.complex128)
    w = (t - 1.0) / (t - z)
    return complex(np.sum(f * w) / t.shape[0])
