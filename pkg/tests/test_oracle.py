import json
import math

import pytest
from mpmath import mp, mpf

from gegenasym.domain import make_params
from gegenasym.errors import DomainError
from gegenasym.oracle import (oracle_AB, oracle_C, oracle_C_recurrence, oracle_C_sum,
                              oracle_cheb_deriv, oracle_D, oracle_dump, oracle_envelope,
                              oracle_hatC)

P = make_params(1.7, 10)


def close(a, b, digits):
    return abs(a - b) <= mpf(10) ** -digits * max(abs(b), mpf(1) * 10 ** -300)


@pytest.mark.parametrize("lam,n", [(1.7, 10), (0.3, 30), (2.5, 7)])
@pytest.mark.parametrize("x", [0.0, 0.3, 0.99, 2.0])
def test_C_two_ways(lam, n, x):
    p = make_params(lam, n)
    a, b = oracle_C_sum(p, x), oracle_C_recurrence(p, x)
    with mp.workdps(60):
        assert close(a, b, 50) or abs(a - b) < mpf(10) ** -50
        if x != 0:
            assert close(a, mp.gegenbauer(n, mpf(lam), mpf(x)), 45)


def test_C_high_degree_uses_recurrence():
    p = make_params(1.7, 150)
    assert oracle_C(p, 0.4) == oracle_C_recurrence(p, 0.4)
    with pytest.raises(DomainError):
        oracle_C(make_params(1.7, 501), 0.4)


@pytest.mark.parametrize("z", [3.25, 3.5, 10.0])
def test_D_against_hyp2f1(z):
    with mp.workdps(60):
        nu, n = mpf(1.7) - mpf(1) / 2, 10
        k = mp.pi * mp.gamma(2 * nu + n + 1) / (mp.gamma(nu + mpf(1) / 2) * mp.gamma(nu + n + mpf(3) / 2))
        a, b, c = 2 * nu + n + 1, nu + n + 1, 2 * nu + 2 * n + 2
        ref = k * (2 * (z - 1)) ** (-a) * mp.hyp2f1(a, b, c, 2 / (1 - mpf(z)))
        assert close(oracle_D(P, z), ref, 45)
    with pytest.raises(DomainError):
        oracle_D(P, 2.5)


@pytest.mark.parametrize("z", [0.5, 1.8, 3.25])
def test_hatC_against_hyp2f1(z):
    with mp.workdps(60):
        nu, n = mpf(1.7) - mpf(1) / 2, 10
        z = mpf(z)
        f = mp.hyp2f1(-2 * nu - n, n + 1, 1 - nu, (1 - z) / 2) / mp.gamma(1 - nu)
        w = (z * z - 1) ** (-nu) if z > 1 else mp.exp(-nu * (mp.log(mp.mpc(z - 1)) + mp.log(z + 1)))
        ref = mp.sqrt(mp.pi) / mp.gamma(mpf(1.7)) * w * f
        assert close(oracle_hatC(P, z), ref, 45)


def test_connection_formula():
    z = 3.25
    with mp.workdps(60):
        nu = mpf(1.7) - mpf(1) / 2
        rhs = oracle_C(P, z) + 2 * mp.sin(nu * mp.pi) / mp.pi * oracle_D(P, z)
        assert close(oracle_hatC(P, z), rhs, 50)


def test_hatC_integer_nu():
    with pytest.raises(DomainError):
        oracle_hatC(make_params(2.5, 4), 0.5)


def test_AB_lambda_one():
    A, B = oracle_AB(make_params(1.0, 9), 3.5)
    assert abs(A - 1) < mpf(10) ** -40
    assert abs(B) < mpf(10) ** -40


def test_AB_reference_value():
    A, B = oracle_AB(P, 3.5)
    assert float(A) == pytest.approx(1.0509176798756809, rel=1e-15)
    assert float(B) == pytest.approx(-0.028093956070578961, rel=1e-14)


def test_envelope_anchors():
    assert mp.nstr(oracle_envelope(P, 0.0), 6) == "392.308"
    assert mp.nstr(oracle_envelope(P, math.pi / 2), 4) == "3.791"


@pytest.mark.parametrize("fn,args", [
    (oracle_C, (P, 0.37)),
    (oracle_D, (P, 4.2)),
    (oracle_envelope, (P, 0.9)),
])
def test_digit_doubling(fn, args):
    lo = fn(*args, dps=60)
    hi = fn(*args, dps=120)
    with mp.workdps(120):
        assert abs(lo - hi) <= mpf(10) ** -57 * abs(hi)


def test_digit_doubling_AB():
    lo = oracle_AB(P, 4.0, dps=60)
    hi = oracle_AB(P, 4.0, dps=120)
    with mp.workdps(120):
        for x, y in zip(lo, hi):
            assert abs(x - y) <= mpf(10) ** -55


@pytest.mark.parametrize("n,r", [(5, 5), (6, 2), (12, 3)])
def test_cheb_deriv(n, r):
    x = mpf("0.3")
    with mp.workdps(60):
        ref = mp.diff(lambda t: mp.chebyt(n, t), x, r)
        assert close(oracle_cheb_deriv(n, r, x), ref, 40)
    with pytest.raises(DomainError):
        oracle_cheb_deriv(3, 4, x)


def test_dump():
    doc = json.loads(oracle_dump(P, [0.0, 0.5], dps=30))
    assert doc["n"] == 10 and len(doc["rows"]) == 2
    assert doc["rows"][0]["envelope"].startswith("392.308")
