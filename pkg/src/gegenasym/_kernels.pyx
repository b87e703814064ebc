# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled versions of the hot loops; same signatures as ``_pykernels``."""
import numpy as np


def poly_eval(const double[:, ::1] table, const double complex[::1] x):
    cdef Py_ssize_t S = table.shape[0], D = table.shape[1], K = x.shape[0]
    cdef Py_ssize_t s, k, j
    cdef double complex acc, xv
    out = np.empty((S, K), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    for j in range(K):
        xv = x[j]
        for s in range(S):
            acc = 0
            for k in range(D - 1, -1, -1):
                acc = acc * xv + table[s, k]
            o[s, j] = acc
    return out


def exponent_sums(const double[:, ::1] etab, const double[::1] a, const double complex[::1] beta,
                  const double complex[::1] xi, double u, int smax):
    cdef Py_ssize_t K = beta.shape[0], D = etab.shape[1]
    cdef Py_ssize_t j, k
    cdef int s
    cdef double complex acc, b, inv_xi, pw, term, ev, od
    cdef double us, sign
    even = np.empty(K, dtype=np.complex128)
    odd = np.empty(K, dtype=np.complex128)
    cdef double complex[::1] e = even
    cdef double complex[::1] o = odd
    for j in range(K):
        b = beta[j]
        inv_xi = 1.0 / xi[j]
        pw = 1.0
        us = 1.0
        ev = 0
        od = 0
        for s in range(1, smax + 1):
            acc = 0
            for k in range(D - 1, -1, -1):
                acc = acc * b + etab[s, k]
            pw = pw * inv_xi
            us = us * u
            sign = 1.0 if s % 2 else -1.0
            term = (acc + sign * a[s] * pw / s) / us
            if s % 2:
                od = od + term
            else:
                ev = ev + term
        e[j] = ev
        o[j] = od
    return even, odd


def cauchy_sum(const double complex[::1] t, const double complex[::1] f, double complex z):
    cdef Py_ssize_t K = t.shape[0], j
    cdef double complex acc = 0
    for j in range(K):
        acc = acc + f[j] * (t[j] - 1.0) / (t[j] - z)
    return complex(acc / K)
