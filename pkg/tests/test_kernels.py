import importlib
import os
import subprocess
import sys

import numpy as np
import pytest

from gegenasym import _pykernels, kernels
from gegenasym.coeffs import build_coeff_table
from gegenasym.domain import map_array

compiled = pytest.importorskip("gegenasym._kernels")


@pytest.fixture(scope="module")
def data():
    table = build_coeff_table(1.2, 7)
    t = 1.0 + np.exp(2j * np.pi * (np.arange(96) + 0.5) / 96)
    beta, xi = map_array(t)
    return table, t, beta, xi


@pytest.mark.skipif(os.environ.get("GEGENASYM_PURE", "") in ("1", "true", "yes"),
                    reason="numpy kernels forced")
def test_backend_selected():
    assert kernels.BACKEND == "cython"


def test_pure_switch():
    code = "from gegenasym import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, GEGENASYM_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True)
    assert out.stdout.strip() == "python"


def test_poly_eval_parity(data):
    table, _, beta, _ = data
    et = np.ascontiguousarray(table.arrays["etilde"])
    a = compiled.poly_eval(et, beta)
    b = _pykernels.poly_eval(et, beta)
    np.testing.assert_allclose(a, b, rtol=1e-13, atol=1e-15)


def test_exponent_sums_parity(data):
    table, _, beta, xi = data
    et = table.arrays["etilde"]
    for key in ("a", "a_shift"):
        a = compiled.exponent_sums(et, table.arrays[key], beta, xi, 11.7, 6)
        b = _pykernels.exponent_sums(et, table.arrays[key], beta, xi, 11.7, 6)
        for x, y in zip(a, b):
            np.testing.assert_allclose(x, y, rtol=1e-13, atol=1e-15)


def test_cauchy_sum_parity(data):
    _, t, _, _ = data
    f = np.exp(t)
    z = 1.2 + 0.3j
    a = compiled.cauchy_sum(t, f, z)
    b = _pykernels.cauchy_sum(t, f, z)
    assert a == pytest.approx(b, rel=1e-14)
    # mean of f(t)(t - 1)/(t - z) reproduces f(z) for analytic f
    assert a == pytest.approx(np.exp(z), rel=1e-12)


def test_wrappers_accept_lists():
    r = kernels.cauchy_sum([2.0, 0.0], [1.0, 1.0], 1.0)
    assert r == pytest.approx(1.0)
