import cmath
import math

import numpy as np
import pytest
from mpmath import mp, mpf

from gegenasym.domain import make_params, map_point
from gegenasym.errors import DomainError, RegionError
from gegenasym.oracle import oracle_AB, oracle_C, oracle_D, oracle_hatC
from gegenasym.uniform import (Certification, Method, ab_cauchy, ab_hat_expcos, ab_hat_series,
                               ab_series, c_at_one, envelope_approx, error_bounds_AB,
                               eval_all_solutions, eval_C_real, l_factor, prefactors)

P = make_params(1.7, 10)


def exact_AB(params, z, dps=40):
    """A, B at real z > 1 with D taken from the connection formula."""
    with mp.workdps(dps):
        lam = mpf(params.lam)
        nu, n = lam - mpf(1) / 2, params.n
        z = mpf(z)
        C = oracle_C(params, z, dps)
        D = (oracle_hatC(params, z, dps) - C) * mp.pi / (2 * mp.sin(nu * mp.pi))
        u = lam + n
        xi = mp.acosh(z)
        x = u * xi
        front = (2 ** nu * mp.factorial(n) / mp.rf(lam, n) * mp.sqrt(x / mp.pi)
                 * (z * z - 1) ** ((2 * nu + 1) / 4))
        A = front * (C * mp.besselk(nu + 1, x) + D * mp.besseli(nu + 1, x))
        B = front * (C * mp.besselk(nu, x) - D * mp.besseli(nu, x))
        return float(A), float(B)


def test_exact_helper_matches_oracle():
    a, b = exact_AB(P, 3.5)
    A, B = oracle_AB(P, 3.5)
    assert a == pytest.approx(float(A), rel=1e-14)
    assert b == pytest.approx(float(B), rel=1e-12)


@pytest.mark.parametrize("z", [2.0, 2.6, 3.5])
@pytest.mark.parametrize("N", [3, 5])
def test_series_within_bound(z, N):
    v = ab_series(P, map_point(z), N)
    A, B = exact_AB(P, z)
    assert v.method is Method.DIRECT_SERIES
    assert abs(v.A - A) <= v.bound_A
    assert abs(v.B - B) <= v.bound_B


def test_series_complex_point_bounded():
    z = 1.5 + 1.5j
    v = ab_series(P, map_point(z), 5)
    w = ab_series(P, map_point(z.conjugate()), 5)
    assert w.A == pytest.approx(v.A.conjugate(), rel=1e-14)
    assert w.B == pytest.approx(v.B.conjugate(), rel=1e-14)
    assert w.bound_A == v.bound_A and w.bound_B == v.bound_B
    # across |z - 1| = 1 the two routes join up
    c = ab_cauchy(P, 1.0 + 0.95j, 5)
    s = ab_series(P, map_point(1.0 + 1.05j), 5)
    assert c.nodes > 64
    assert abs(c.A - s.A) < 1e-3 and abs(c.B - s.B) < 1e-2


def test_cauchy_gives_up_near_contour():
    from gegenasym.errors import ConvergenceError
    with pytest.raises(ConvergenceError):
        ab_cauchy(P, 1.0 + 0.99j, 5)


def test_series_guards():
    with pytest.raises(RegionError):
        ab_series(P, map_point(1.5), 5)
    with pytest.raises(DomainError):
        ab_series(P, map_point(3.0), 4)
    with pytest.raises(DomainError):
        ab_series(P, map_point(3.0), 1)


@pytest.mark.parametrize("z", [1.3, 1.9])
def test_cauchy_within_bound(z):
    v = ab_cauchy(P, z, 5)
    A, B = exact_AB(P, z)
    assert v.method is Method.CAUCHY_DISK
    assert v.nodes <= 1024
    assert abs(v.A - A) <= v.bound_A
    assert abs(v.B - B) <= v.bound_B


@pytest.mark.parametrize("z", [0.5, 0.95, 1.02, 1.6])
def test_reality(z):
    v = ab_cauchy(P, z, 5)
    assert abs(v.A.imag) <= 1e-14 * abs(v.A)
    if z > 1:
        assert abs(v.B.imag) <= 1e-14 * abs(v.B)
    else:
        # B = i P hat-B on the cut
        assert abs(v.B.real) <= 1e-14 * abs(v.B)
    s = ab_series(P, map_point(z + 2.5), 5)
    assert s.A.imag == 0 and s.B.imag == 0


def test_cauchy_matches_real_interval_series():
    theta = 0.1
    v = ab_cauchy(P, math.cos(theta), 5)
    h = ab_hat_series(P, theta, 4)
    Pv, _ = prefactors(P, 5)
    assert v.A.real == pytest.approx(Pv * h.A, rel=1e-7)
    assert v.B.imag == pytest.approx(Pv * h.B, rel=1e-5)


def test_cauchy_guards():
    with pytest.raises(RegionError):
        ab_cauchy(P, 2.5, 5)


def test_error_bounds_lambda_one():
    eb = error_bounds_AB(make_params(1.0, 10), 5)
    assert eb.delta_B(1.5) == 0.0
    assert eb.delta_A(1.5) > 0.0
    assert eb.certification is Certification.SAMPLED_SUPREMUM
    assert error_bounds_AB(make_params(1.0, 10), 5) is eb


@pytest.mark.parametrize("z", [1.0, 1.5, 0.3 + 0.2j, 1.9])
def test_l_factor(z):
    phi = 2 * np.pi * (np.arange(20000) + 0.5) / 20000
    t = 1 + np.exp(1j * phi)
    num = np.sum(np.abs(1j * np.exp(1j * phi) / (t - z))) * (2 * np.pi / 20000)
    assert l_factor(z) == pytest.approx(num, rel=1e-6)
    assert l_factor(1.0) == pytest.approx(2 * math.pi)
    with pytest.raises(RegionError):
        l_factor(2.0)


@pytest.mark.parametrize("N", [3, 4])
def test_expcos_consistency_order(N):
    # exp/cos form with 2N+1 terms vs re-expanded sums: A differs O(u^-2N-2)
    diffs = []
    for n in (10, 20):
        q = make_params(1.7, n)
        a, _ = ab_hat_expcos(q, 1.0, 2 * N + 1)
        diffs.append((abs(a - ab_hat_series(q, 1.0, N).A), q.u))
    (d1, u1), (d2, u2) = diffs
    slope = math.log(d1 / d2) / math.log(u1 / u2)
    assert slope <= -(2 * N + 2) + 0.5


def test_hat_series_reference_point():
    h = ab_hat_series(P, 1.0, 4)
    assert h.A == pytest.approx(0.9959153510593396, rel=1e-13)
    assert h.B == pytest.approx(-0.018194981604210146, rel=1e-11)


@pytest.mark.parametrize("lam,n", [(1.7, 10), (0.3, 10), (1.7, 30), (3.3, 20)])
def test_eval_C_real_estimate(lam, n):
    p = make_params(lam, n)
    for theta in np.linspace(0.02, math.pi / 2, 25):
        c = eval_C_real(p, float(theta), 4)
        exact = float(oracle_C(p, mp.cos(mpf(float(theta)))))
        assert abs(c.value - exact) <= 2 * c.bound
        assert c.certification is Certification.TRUNCATION_ESTIMATE


def test_eval_C_real_anchor():
    c = eval_C_real(P, 0.0)
    assert c.value == pytest.approx(float(oracle_C(P, 1)), rel=1e-15)
    assert c.bound == 0 and c.certification is Certification.EXACT
    with pytest.raises(DomainError):
        eval_C_real(P, 2.0)


def test_envelope_close_to_exact():
    assert envelope_approx(P, 0.0) == pytest.approx(392.308374, rel=1e-8)


def test_all_solutions_connection():
    z = 3.25
    r = eval_all_solutions(P, map_point(z), 5)
    nu = P.nu
    hat = float(oracle_hatC(P, z))
    got = r["C"].value + 2 * math.sin(nu * math.pi) / math.pi * r["D"].value
    assert abs(got - hat) <= r["C"].bound + 2 / math.pi * r["D"].bound
    assert abs(r["C"].value - float(oracle_C(P, z))) <= r["C"].bound
    assert abs(r["D"].value - float(oracle_D(P, z))) <= r["D"].bound
    # D_{+-1} = e^{-+nu pi i} D -+ pi i C
    for key, sg in (("D_plus", 1), ("D_minus", -1)):
        want = cmath.exp(-sg * 1j * math.pi * nu) * r["D"].value - sg * 1j * math.pi * r["C"].value
        assert r[key].value == pytest.approx(want, rel=1e-12)
    assert r["D_plus"].value == pytest.approx(r["D_minus"].value.conjugate(), rel=1e-15)


def test_all_solutions_large_z():
    r = eval_all_solutions(P, map_point(50.0), 5)
    lead = -1j * math.pi * float(mp.rf(1.7, 10)) * 100.0 ** 10 / math.factorial(10)
    assert abs(r["D_plus"].value / lead - 1) < 1e-3


def test_all_solutions_inside_disk():
    r = eval_all_solutions(P, map_point(1.5), 5)
    assert r["C"].certification is Certification.SAMPLED_SUPREMUM
    assert abs(r["C"].value - float(oracle_C(P, 1.5))) <= r["C"].bound


def test_all_solutions_special_points():
    r = eval_all_solutions(P, map_point(0.4), 5)
    assert r["D"] is None and r["D_plus"] is None
    assert r["C"].value == pytest.approx(float(oracle_C(P, 0.4)), rel=1e-9)
    r = eval_all_solutions(P, map_point(1.0), 5)
    assert r["C"].value == pytest.approx(c_at_one(P))
    with pytest.raises(DomainError):
        eval_all_solutions(P, map_point(2 + 1j), 5)
