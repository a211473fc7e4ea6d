"""Fan speed at one temperature over a grid of (c_left, m)."""
import argparse

import numpy as np

from wablfuzz import WablParams, build_conditioner, infer


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=float, default=22.0)
    ap.add_argument("--c-left", type=float, nargs="+", default=list(np.linspace(0, 1, 5)))
    ap.add_argument("--m", type=float, nargs="+", default=[0.5, 1, 2, 5, 20, 100])
    args = ap.parse_args()

    rb = build_conditioner()
    print("c_left \\ m " + "".join(f"{m:>10g}" for m in args.m))
    for c in args.c_left:
        row = [infer(rb, {"temperature": args.t}, WablParams.from_left(c, m)).crisp_output for m in args.m]
        print(f"{c:>10.3f} " + "".join(f"{v:10.2f}" for v in row))


if __name__ == "__main__":
    main()
