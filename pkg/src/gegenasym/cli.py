"""Command-line driver: sweep, bounds, figure, oracle-dump.

Exit codes: 0 on success, 2 when a bound is violated, 1 on any error.
Sweep settings may come from an INI file (section ``[sweep]``); flags
given on the command line override it.
"""
from __future__ import annotations

import argparse
import configparser
import logging
import sys

from .errors import GegenError
from .harness import (Spacing, SweepConfig, emit_figure_data, format_bound_report,
                      run_bound_report, run_sweep)
from .oracle import ORACLE_DPS, oracle_dump
from .domain import make_params

log = logging.getLogger("gegenasym")

_SWEEP_KEYS = {"lambda": float, "n": int, "N": int, "grid": int, "spacing": str,
               "out": str, "precision": int}


def _floats(text):
    return [float(x) for x in text.split(",") if x.strip()]


def _ints(text):
    return [int(x) for x in text.split(",") if x.strip()]


def _read_config(path):
    cp = configparser.ConfigParser()
    cp.optionxform = str  # keep "N" and "n" apart
    if not cp.read(path):
        raise OSError(f"cannot read config {path}")
    if not cp.has_section("sweep"):
        return {}
    out = {}
    for key, value in cp.items("sweep"):
        if key not in _SWEEP_KEYS:
            raise ValueError(f"unknown config key {key!r}")
        out[key] = _SWEEP_KEYS[key](value)
    return out


def _sweep_config(args):
    settings = {"lambda": 1.7, "n": 10, "N": 4, "grid": 181, "spacing": "uniform",
                "out": None, "precision": ORACLE_DPS}
    if args.config:
        settings.update(_read_config(args.config))
    for key in _SWEEP_KEYS:
        value = getattr(args, key if key != "lambda" else "lam")
        if value is not None:
            settings[key] = value
    return SweepConfig(lam=settings["lambda"], n=settings["n"], N=settings["N"],
                       count=settings["grid"], spacing=Spacing(settings["spacing"]),
                       output_path=settings["out"], precision=settings["precision"])


def cmd_sweep(args):
    cfg = _sweep_config(args)
    rep = run_sweep(cfg)
    if cfg.output_path is None:
        sys.stdout.write(rep.to_csv())
    print(f"max_delta={rep.max_delta:.3e} at theta={rep.argmax_theta:.6f}", file=sys.stderr)
    return 0


def cmd_bounds(args):
    rows = run_bound_report(args.lam, _ints(args.n), _ints(args.N), _floats(args.z))
    text = format_bound_report(rows)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    bad = [r for r in rows if not r.ok]
    for r in bad:
        log.error("bound violated: %s", r)
    return 2 if bad else 0


def cmd_figure(args):
    text = emit_figure_data(args.figure, args.out, args.grid)
    if not args.out:
        sys.stdout.write(text)
    return 0


def cmd_oracle_dump(args):
    params = make_params(args.lam, args.n)
    cfg = SweepConfig(args.lam, args.n, count=args.grid)
    text = oracle_dump(params, [float(t) for t in cfg.grid()], args.precision)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="gegenasym", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sweep", help="exact vs asymptotic envelope on a theta grid")
    s.add_argument("--config", help="INI file with a [sweep] section")
    s.add_argument("--lambda", dest="lam", type=float)
    s.add_argument("--n", type=int)
    s.add_argument("--N", type=int)
    s.add_argument("--grid", type=int, help="number of theta points")
    s.add_argument("--spacing", choices=[x.value for x in Spacing])
    s.add_argument("--out")
    s.add_argument("--precision", type=int, help="oracle digits")
    s.set_defaults(func=cmd_sweep)

    b = sub.add_parser("bounds", help="actual errors against computed bounds")
    b.add_argument("--lambda", dest="lam", type=float, default=1.7)
    b.add_argument("--n", default="10", help="comma separated degrees")
    b.add_argument("--N", default="3,5", help="comma separated odd truncations")
    b.add_argument("--z", default="3.5", help="comma separated real points > 3")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bounds)

    f = sub.add_parser("figure", help="data for figures 1-3")
    f.add_argument("figure", type=int, choices=(1, 2, 3))
    f.add_argument("--grid", type=int, default=181)
    f.add_argument("--out")
    f.set_defaults(func=cmd_figure)

    o = sub.add_parser("oracle-dump", help="reference values as JSON")
    o.add_argument("--lambda", dest="lam", type=float, default=1.7)
    o.add_argument("--n", type=int, default=10)
    o.add_argument("--grid", type=int, default=11)
    o.add_argument("--precision", type=int, default=ORACLE_DPS)
    o.add_argument("--out")
    o.set_defaults(func=cmd_oracle_dump)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (GegenError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
