"""Command-line front end.

Exit codes: 0 ok, 2 config/validation, 3 unknown term, 4 no rule fires,
5 output I/O, 6 metrics window.
"""
from __future__ import annotations

import argparse
import itertools
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from .config import ControllerDocument, load_controller, load_sim_config, resolve_params
from .defuzz import WablParams, centroid, median_of_maximum, wabl_analytic
from .emit import csv_text, fmt, svg_line_chart, write_atomic
from .errors import (
    ConfigError,
    FuzzyError,
    MetricsWindowError,
    NoRuleFiresError,
    UnknownTermError,
)
from .fuzzy_num import to_level_rep
from .inference import infer
from .scenarios import linear_grid, response_curve
from .thermal_sim import oscillation_metric, run_fuzzy, run_thermostat

EXIT_OK, EXIT_CONFIG, EXIT_TERM, EXIT_NO_RULE, EXIT_IO, EXIT_WINDOW = 0, 2, 3, 4, 5, 6


class OutputError(Exception):
    pass


def _params(doc: ControllerDocument, args) -> WablParams:
    return resolve_params(doc.params, args.c_left, args.c_right, args.m)


def _normalize(doc: ControllerDocument, args) -> bool:
    return doc.normalize if args.normalize is None else args.normalize


def _assignments(items: Sequence[str] | None) -> dict[str, float]:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise ConfigError(f"--set expects NAME=VALUE, got {item!r}")
        try:
            out[name] = float(value)
        except ValueError:
            raise ConfigError(f"--set {name}: {value!r} is not a number") from None
    return out


def _values(spec: str, flag: str) -> list[float]:
    """Comma list ``0,0.5,1`` or inclusive linear range ``lo:hi:n``."""
    try:
        if ":" in spec:
            lo, hi, n = spec.split(":")
            n = int(n)
            if n < 1:
                raise ValueError
            return [float(lo)] if n == 1 else [float(lo) + (float(hi) - float(lo)) * i / (n - 1) for i in range(n)]
        return [float(v) for v in spec.split(",") if v.strip()]
    except ValueError:
        raise ConfigError(f"{flag}: cannot parse {spec!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        write_atomic(out, text)
    except OSError as exc:
        raise OutputError(f"cannot write {out}: {exc.strerror or exc}") from exc


def cmd_defuzz(args) -> int:
    doc = load_controller(args.config)
    rb = doc.rule_base
    var_name, _, term = args.term.rpartition(".")
    variables = {v.name: v for v in (*rb.inputs, rb.output)}
    if var_name and var_name not in variables:
        raise UnknownTermError(f"unknown variable {var_name!r} in {args.term!r}")
    mf = variables[var_name or rb.output.name].term(term)
    params = _params(doc, args)
    value = wabl_analytic(to_level_rep(mf), params)
    if args.compare:
        rows = {"wabl": value, "coa": centroid(mf), "mom": median_of_maximum(mf)}
        if args.json:
            print(json.dumps(rows))
        else:
            for method, v in rows.items():
                print(f"{method:<5}{fmt(v)}")
    elif args.json:
        print(json.dumps({"wabl": value}))
    else:
        print(fmt(value))
    return EXIT_OK


def cmd_infer(args) -> int:
    doc = load_controller(args.config)
    result = infer(doc.rule_base, _assignments(args.set), _params(doc, args), _normalize(doc, args))
    if args.json:
        print(json.dumps(result.to_dict(), indent=2))
        return EXIT_OK
    print(f"{doc.rule_base.output.name} = {fmt(result.crisp_output)}")
    for i, rule in enumerate(doc.rule_base.rules):
        print(f"  rule {i}: {rule}  degree={fmt(result.firing[i])}")
    for w in result.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return EXIT_OK


def cmd_curve(args) -> int:
    doc = load_controller(args.config)
    if args.steps < 1:
        raise ConfigError(f"--steps must be >= 1, got {args.steps}")
    if args.to < args.start:
        raise ConfigError(f"empty grid: --from {args.start} is above --to {args.to}")
    grid = linear_grid(args.start, args.to, args.steps)
    curve = response_curve(doc.rule_base, _params(doc, args), grid, _normalize(doc, args), args.input)
    rb = doc.rule_base
    in_name = args.input or rb.inputs[0].name
    text = csv_text((in_name, rb.output.name) if args.named_header else ("t", "v"), curve.samples)
    svg = None
    if args.svg:
        svg = svg_line_chart(curve.t, curve.v, in_name, rb.output.name, "response curve")
    _emit(text, args.out)
    if svg is not None:
        _emit(svg, args.svg)
    return EXIT_OK


def cmd_sweep(args) -> int:
    doc = load_controller(args.config)
    base = _params(doc, args)
    c_lefts = sorted(_values(args.c_left_grid, "--c-left-grid")) if args.c_left_grid else [base.c_left]
    ms = sorted(_values(args.m_grid, "--m-grid")) if args.m_grid else [base.m]
    if not c_lefts or not ms:
        raise ConfigError("sweep grid is empty")
    if any(not 0.0 <= c <= 1.0 for c in c_lefts):
        raise ConfigError("--c-left-grid values must lie in [0, 1]")
    if any(not m > 0 for m in ms):
        raise ConfigError("--m-grid values must be > 0")
    x = _assignments(args.set)
    normalize = _normalize(doc, args)
    rows = []
    for c, m in itertools.product(c_lefts, ms):
        out = infer(doc.rule_base, x, WablParams(c, 1.0 - c, m), normalize).crisp_output
        rows.append((c, m, out))
    _emit(csv_text(("c_left", "m", "output"), rows), args.out)
    return EXIT_OK


def _trace_csv(trace) -> str:
    return csv_text(("time", "temperature", "fan_speed"),
                    zip(trace.time, trace.temperature, trace.fan_speed))


def cmd_simulate(args) -> int:
    cfg = load_sim_config(args.sim_config)
    doc = load_controller(args.config)
    fuzzy = run_fuzzy(cfg, doc.rule_base, _params(doc, args), _normalize(doc, args))
    thermo = run_thermostat(cfg)
    metrics = {}
    for trace in (fuzzy, thermo):
        p2p, mad = oscillation_metric(trace, args.window)
        metrics[trace.controller] = {
            "peak_to_peak": p2p,
            "mean_abs_dev": mad,
            "mean_fan_speed": trace.mean_fan_speed,
        }
    if args.out:
        out = Path(args.out)
        try:
            out.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise OutputError(f"cannot create {out}: {exc.strerror or exc}") from exc
        _emit(_trace_csv(fuzzy), str(out / "fuzzy_trace.csv"))
        _emit(_trace_csv(thermo), str(out / "thermostat_trace.csv"))
    if args.json:
        print(json.dumps(metrics, indent=2))
    else:
        print(" ".join(f"{tag}_{k}={fmt(v)}" for tag, m in metrics.items() for k, v in m.items()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--c-left", type=float, help="weight of the left sides (default from config)")
    common.add_argument("--c-right", type=float, help="weight of the right sides (default 1 - c-left)")
    common.add_argument("--m", type=float, help="level-weight exponent, p(xi) = m xi^(m-1)")
    common.add_argument("--normalize", action=argparse.BooleanOptionalAction, default=None,
                        help="divide by the total firing degree")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="output file (directory for simulate); stdout if omitted")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="wabl", description="WABL fuzzy inference toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("defuzz", parents=[common], help="defuzzify one term")
    p.add_argument("config")
    p.add_argument("term", help="VAR.TERM, or TERM of the output variable")
    p.add_argument("--compare", action="store_true", help="also print COA and MOM")
    p.set_defaults(func=cmd_defuzz)

    p = sub.add_parser("infer", parents=[common], help="crisp output for given inputs")
    p.add_argument("config")
    p.add_argument("--set", action="append", metavar="NAME=VALUE")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("curve", parents=[common], help="input/output response curve as CSV")
    p.add_argument("config")
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--input", help="input variable (default: the only one)")
    p.add_argument("--svg", help="also write an SVG line chart here")
    p.add_argument("--named-header", action="store_true", help="use variable names as CSV header")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("sweep", parents=[common], help="output over a (c_left, m) grid")
    p.add_argument("config")
    p.add_argument("--set", action="append", metavar="NAME=VALUE")
    p.add_argument("--c-left-grid", help="comma list or lo:hi:n")
    p.add_argument("--m-grid", help="comma list or lo:hi:n")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("simulate", parents=[common], help="fuzzy vs thermostat closed loop")
    p.add_argument("sim_config")
    p.add_argument("config")
    p.add_argument("--window", type=float, default=100.0, help="tail window for metrics, minutes")
    p.set_defaults(func=cmd_simulate)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UnknownTermError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TERM
    except NoRuleFiresError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_RULE
    except MetricsWindowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WINDOW
    except OutputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except FuzzyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
