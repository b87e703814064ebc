"""Envelope sweeps, figure data and bound-validity reports."""
from __future__ import annotations

import enum
import io
import math
import platform
from dataclasses import dataclass, field

import mpmath
import numpy as np

from . import __version__
from .domain import make_params, map_point
from .kernels import BACKEND
from .lg import lg_D
from .oracle import ORACLE_DPS, oracle_AB, oracle_D, oracle_envelope
from .uniform import DEFAULT_N_HAT, ab_series, envelope_approx

DELTA_FLOOR = 1e-18
# Float evaluation cannot beat rounding; a zero bound still admits this.
ROUNDOFF = 1e-14


class Spacing(enum.Enum):
    UNIFORM = "uniform"
    CHEBYSHEV = "chebyshev"


@dataclass(frozen=True)
class SweepConfig:
    lam: float = 1.7
    n: int = 10
    N: int = DEFAULT_N_HAT
    count: int = 181
    spacing: Spacing = Spacing.UNIFORM
    output_path: str | None = None
    precision: int = ORACLE_DPS

    def __post_init__(self):
        if self.count < 2:
            raise ValueError("grid needs at least 2 points")
        if self.n < 1:
            raise ValueError("n must be >= 1")

    def grid(self) -> np.ndarray:
        k = np.arange(self.count)
        if self.spacing is Spacing.UNIFORM:
            t = k / (self.count - 1)
        else:
            t = 0.5 * (1.0 - np.cos(np.pi * k / (self.count - 1)))
        g = t * (math.pi / 2)
        g[0], g[-1] = 0.0, math.pi / 2
        return g


@dataclass
class SweepReport:
    config: SweepConfig
    theta: list = field(default_factory=list)
    exact: list = field(default_factory=list)
    approx: list = field(default_factory=list)
    delta: list = field(default_factory=list)

    @property
    def max_delta(self) -> float:
        return max(self.delta)

    @property
    def argmax_theta(self) -> float:
        return self.theta[int(np.argmax(self.delta))]

    def metadata(self) -> dict:
        c = self.config
        return {
            "lambda": repr(c.lam), "n": c.n, "N": c.N, "count": c.count,
            "spacing": c.spacing.value, "precision": c.precision,
            "max_delta": f"{self.max_delta:.17g}", "argmax_theta": f"{self.argmax_theta:.17g}",
            "gegenasym": __version__, "numpy": np.__version__, "mpmath": mpmath.__version__,
            "python": platform.python_version(), "kernels": BACKEND,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        for k, v in self.metadata().items():
            buf.write(f"# {k}: {v}\n")
        buf.write("theta,exact,approx,delta\n")
        for row in zip(self.theta, self.exact, self.approx, self.delta):
            buf.write(",".join(f"{x:.17g}" for x in row) + "\n")
        return buf.getvalue()


def run_sweep(config: SweepConfig) -> SweepReport:
    """Exact and asymptotic envelopes on the grid; writes CSV if a path is set."""
    params = make_params(config.lam, config.n)
    rep = SweepReport(config)
    for th in config.grid():
        th = float(th)
        exact = float(oracle_envelope(params, th, config.precision))
        approx = envelope_approx(params, th, config.N)
        rep.theta.append(th)
        rep.exact.append(exact)
        rep.approx.append(approx)
        rep.delta.append(abs(exact - approx) / exact)
    if config.output_path:
        with open(config.output_path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(rep.to_csv())
    return rep


FIGURES = {
    1: SweepConfig(lam=1.7, n=10),
    2: SweepConfig(lam=1.7, n=10, N=4),
    3: SweepConfig(lam=1.7, n=30, N=4),
}


def figure_rows(figure: int, count: int = 181):
    """(theta, log10 value) pairs: the exact envelope for 1, log10 of delta for 2, 3."""
    if figure not in FIGURES:
        raise ValueError(f"unknown figure {figure}")
    base = FIGURES[figure]
    cfg = SweepConfig(base.lam, base.n, base.N, count)
    if figure == 1:
        params = make_params(cfg.lam, cfg.n)
        return [(float(t), math.log10(float(oracle_envelope(params, float(t)))))
                for t in cfg.grid()]
    rep = run_sweep(cfg)
    return [(t, math.log10(max(d, DELTA_FLOOR))) for t, d in zip(rep.theta, rep.delta)]


def emit_figure_data(figure: int, out: str | None = None, count: int = 181) -> str:
    rows = figure_rows(figure, count)
    text = f"# figure: {figure}\ntheta,log10_value\n"
    text += "".join(f"{t:.17g},{v:.17g}\n" for t, v in rows)
    if out:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    return text


@dataclass(frozen=True)
class BoundRow:
    lam: float
    n: int
    N: int
    z: float
    quantity: str
    actual: float
    bound: float
    scale: float = 1.0

    @property
    def ratio(self) -> float:
        """actual / (bound + rounding allowance); at most 1 when the bound holds."""
        return self.actual / (self.bound + ROUNDOFF * self.scale)

    @property
    def ok(self) -> bool:
        return self.ratio <= 1.0


def run_bound_report(lam, n_list, N_list, z_list):
    """Actual errors of A, B (exp/cosh series) and D (LG form) against their bounds.

    Points need real z > 3 so the oracles apply.
    """
    rows = []
    for n in n_list:
        params = make_params(lam, n)
        for N in N_list:
            for z in z_list:
                pt = map_point(z)
                ab = ab_series(params, pt, N)
                A, B = (float(x) for x in oracle_AB(params, z))
                scale = max(abs(A), abs(B))
                rows.append(BoundRow(lam, n, N, z, "A", abs(ab.A - A), ab.bound_A, scale))
                rows.append(BoundRow(lam, n, N, z, "B", abs(ab.B - B), ab.bound_B, scale))
                d = lg_D(params, pt, N)
                exact = mpmath.mpf(oracle_D(params, z))
                actual = float(abs(exact / mpmath.mpc(d.value) - 1))
                rows.append(BoundRow(lam, n, N, z, "D/D_lg-1", actual, d.eta_bound, 1.0))
    return rows


def format_bound_report(rows) -> str:
    lines = ["lambda,n,N,z,quantity,actual,bound,ratio,ok"]
    for r in rows:
        lines.append(f"{r.lam!r},{r.n},{r.N},{r.z!r},{r.quantity},{r.actual:.6e},"
                     f"{r.bound:.6e},{r.ratio:.4g},{int(r.ok)}")
    return "\n".join(lines) + "\n"
