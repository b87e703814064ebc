import math
import subprocess
import sys

import pytest

from gegenasym import cli, harness
from gegenasym.harness import (BoundRow, Spacing, SweepConfig, emit_figure_data, run_bound_report,
                               run_sweep)


def test_grid_endpoints():
    for sp in Spacing:
        g = SweepConfig(count=7, spacing=sp).grid()
        assert g[0] == 0.0 and g[-1] == math.pi / 2
        assert all(a < b for a, b in zip(g, g[1:]))
    with pytest.raises(ValueError):
        SweepConfig(count=1)


def test_sweep_csv_is_deterministic(tmp_path):
    out = tmp_path / "s.csv"
    cfg = SweepConfig(lam=1.7, n=10, N=4, count=9, output_path=str(out))
    run_sweep(cfg)
    first = out.read_bytes()
    run_sweep(cfg)
    assert out.read_bytes() == first
    lines = first.decode().splitlines()
    head = [l for l in lines if not l.startswith("#")]
    assert head[0] == "theta,exact,approx,delta"
    assert len(head) == 10
    assert any(l.startswith("# max_delta:") for l in lines)
    theta, exact, approx, delta = (float(x) for x in head[1].split(","))
    assert theta == 0.0 and exact == pytest.approx(392.308374, rel=1e-8)
    assert delta == abs(exact - approx) / exact


def test_sweep_collapse_lambda_one():
    rep = run_sweep(SweepConfig(lam=1.0, n=10, N=1, count=31))
    assert rep.max_delta <= 1e-12


def test_grid_doubling_no_aliasing():
    a = run_sweep(SweepConfig(count=46)).max_delta
    b = run_sweep(SweepConfig(count=91)).max_delta
    assert b <= 10 * a


def test_figure_one_anchors():
    text = emit_figure_data(1, count=3)
    rows = [l.split(",") for l in text.splitlines()[2:]]
    # the anchors 392.308 and 3.791 to the printed digits
    assert round(10 ** float(rows[0][1]), 3) == 392.308
    assert round(10 ** float(rows[-1][1]), 3) == 3.791


def test_delta_clip(monkeypatch):
    def fake(cfg):
        rep = harness.SweepReport(cfg)
        rep.theta, rep.exact, rep.approx, rep.delta = [0.0, 1.0], [1.0, 1.0], [1.0, 1.0], [0.0, 1e-30]
        return rep
    monkeypatch.setattr(harness, "run_sweep", fake)
    rows = harness.figure_rows(2, count=2)
    assert [v for _, v in rows] == [-18.0, -18.0]
    with pytest.raises(ValueError):
        harness.figure_rows(4)


def test_bound_report_rows():
    rows = run_bound_report(1.7, [10], [3, 5], [3.5])
    assert len(rows) == 6
    assert all(r.ok and r.ratio <= 1 for r in rows)
    half = run_bound_report(1.0, [10], [5], [3.5])
    b = [r for r in half if r.quantity == "B"][0]
    assert b.bound == 0.0 and b.actual <= 1e-30
    assert BoundRow(1.0, 1, 3, 4.0, "A", 2.0, 1.0).ok is False


def test_cli_bounds_exit_codes(monkeypatch, capsys):
    assert cli.main(["bounds", "--n", "10", "--N", "3", "--z", "3.5"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("lambda,n,N,z,quantity")
    monkeypatch.setattr(cli, "run_bound_report",
                        lambda *a: [BoundRow(1.7, 10, 3, 3.5, "A", 1.0, 1e-3)])
    assert cli.main(["bounds"]) == 2


def test_cli_error_exit(capsys):
    assert cli.main(["sweep", "--lambda", "-1", "--grid", "3"]) == 1
    assert cli.main(["bounds", "--z", "2.0"]) == 1


def test_cli_config_override(tmp_path, capsys):
    ini = tmp_path / "run.ini"
    ini.write_text("[sweep]\nlambda = 1.7\nn = 12\nN = 3\ngrid = 4\nspacing = chebyshev\n")
    out = tmp_path / "o.csv"
    assert cli.main(["sweep", "--config", str(ini), "--n", "10", "--out", str(out)]) == 0
    text = out.read_text()
    assert "# n: 10" in text and "# N: 3" in text and "# spacing: chebyshev" in text
    bad = tmp_path / "bad.ini"
    bad.write_text("[sweep]\ncolour = red\n")
    assert cli.main(["sweep", "--config", str(bad)]) == 1
    assert cli.main(["sweep", "--config", str(tmp_path / "missing.ini")]) == 1


def test_cli_oracle_dump(tmp_path):
    out = tmp_path / "d.json"
    assert cli.main(["oracle-dump", "--grid", "2", "--precision", "30", "--out", str(out)]) == 0
    assert '"dps": 30' in out.read_text()


def test_module_entry_point(tmp_path):
    out = tmp_path / "f1.csv"
    subprocess.run([sys.executable, "-m", "gegenasym", "figure", "1", "--grid", "3",
                    "--out", str(out)], check=True)
    assert out.read_text().splitlines()[1] == "theta,log10_value"
