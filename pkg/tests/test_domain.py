import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gegenasym.domain import (Params, Region, make_params, map_array, map_point, map_theta,
                              reflect_negative)
from gegenasym.errors import BranchError, DomainError


def test_params_derived():
    p = make_params(1.7, 10)
    assert p == Params(1.7, 10)
    assert p.nu == pytest.approx(1.2)
    assert p.u == pytest.approx(11.7)


@pytest.mark.parametrize("lam,n", [(0.0, 3), (-1.0, 3), (math.inf, 3), (101.0, 3), (1.0, -1), (1.0, 2.5)])
def test_params_rejected(lam, n):
    with pytest.raises(DomainError):
        make_params(lam, n)


def test_regions():
    assert map_point(0.3).region is Region.REAL_INTERVAL_01
    assert map_point(1.5).region is Region.DISK_AROUND_ONE
    assert map_point(3.0).region is Region.RIGHT_HALF_PLANE
    with pytest.raises(DomainError):
        map_point(-0.5)


@pytest.mark.parametrize("theta", [0.1, 0.7, 1.3])
def test_cut_values(theta):
    up = map_point(math.cos(theta))
    assert up.xi == pytest.approx(1j * theta, abs=1e-14)
    assert up.beta == pytest.approx(-1j / math.tan(theta), rel=1e-13)
    assert up.theta == pytest.approx(theta)
    down = map_point(math.cos(theta), side=-1)
    assert down.xi == pytest.approx(-1j * theta, abs=1e-14)


def test_real_axis_values():
    p = map_point(2.0)
    assert p.root == pytest.approx(math.sqrt(3))
    assert p.xi == pytest.approx(math.log(2 + math.sqrt(3)))
    assert p.beta == pytest.approx(2 / math.sqrt(3))
    assert p.zeta == pytest.approx(p.xi ** 2)


def test_pole_at_one():
    p = map_point(1.0)
    assert p.xi == 0
    with pytest.raises(BranchError):
        p.beta


def test_near_one_series():
    z = 1 + 1e-9 + 2e-9j
    near = map_point(z).xi
    assert near == pytest.approx(cmath.acosh(z), rel=1e-12)


def test_map_theta():
    assert map_theta(0.0) == pytest.approx(math.pi / 2)
    with pytest.raises(DomainError):
        map_theta(1.0)


def test_reflect_negative():
    f, w = reflect_negative(-2.0 + 0.5j, "C", 3)
    assert f == -1 and w == 2.0 - 0.5j
    f, _ = reflect_negative(-2.0 + 0.5j, "D", 2, 0.25)
    assert abs(f) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        reflect_negative(2.0, "C", 1)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.0, 5.0), st.floats(-5.0, 5.0))
def test_xi_inverts_cosh(x, y):
    z = complex(x, y)
    if abs(z - 1) < 1e-3 or (y == 0 and x <= 1):
        return
    p = map_point(z)
    assert cmath.cosh(p.xi) == pytest.approx(z, rel=1e-10, abs=1e-10)
    assert p.xi.real >= -1e-15
    beta, xi = map_array(np.array([z]))
    assert beta[0] == pytest.approx(p.beta, rel=1e-12)
    assert xi[0] == pytest.approx(p.xi, rel=1e-12, abs=1e-14)
