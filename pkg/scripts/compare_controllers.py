"""Fuzzy-WABL fan control vs a hysteresis thermostat on the shipped room fixtures.

Prints tail oscillation and mean fan speed per fixture; with --out, also
writes the traces as CSV (one pair of files per fixture).
"""
import argparse
from pathlib import Path

from wablfuzz import WablParams, build_conditioner, oscillation_metric, run_fuzzy, run_thermostat
from wablfuzz.config import load_sim_config
from wablfuzz.emit import csv_text, write_atomic

ROOT = Path(__file__).resolve().parents[1]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fixtures", type=Path, default=ROOT / "configs" / "sim")
    ap.add_argument("--window", type=float, default=100.0)
    ap.add_argument("--c-left", type=float, default=0.5)
    ap.add_argument("--m", type=float, default=2.0)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    rb = build_conditioner()
    params = WablParams.from_left(args.c_left, args.m)
    print(f"{'fixture':<14}{'controller':<12}{'p2p [C]':>10}{'MAD [C]':>10}{'mean v':>10}{'final T':>10}")
    for path in sorted(args.fixtures.glob("*.json")):
        cfg = load_sim_config(path)
        for trace in (run_fuzzy(cfg, rb, params), run_thermostat(cfg)):
            p2p, mad = oscillation_metric(trace, args.window)
            print(f"{path.stem:<14}{trace.controller:<12}{p2p:10.4f}{mad:10.4f}"
                  f"{trace.mean_fan_speed:10.1f}{trace.temperature[-1]:10.3f}")
            if args.out:
                args.out.mkdir(parents=True, exist_ok=True)
                rows = zip(trace.time, trace.temperature, trace.fan_speed)
                write_atomic(args.out / f"{path.stem}_{trace.controller}.csv",
                             csv_text(("time", "temperature", "fan_speed"), rows))


if __name__ == "__main__":
    main()
