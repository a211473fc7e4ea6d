"""Walk through the fan-controller deduction for one room temperature.

    python scripts/worked_example.py --t 22 --c-left 0.5 --m 2
"""
import argparse

from wablfuzz import WablParams, build_conditioner, defuzzify_terms, firing_degrees, infer
from wablfuzz.inference import double_sum_output


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--t", type=float, default=22.0)
    ap.add_argument("--c-left", type=float, default=0.5)
    ap.add_argument("--m", type=float, default=2.0)
    args = ap.parse_args()

    rb = build_conditioner()
    params = WablParams.from_left(args.c_left, args.m)
    x = {"temperature": args.t}

    print(f"temperature = {args.t} degC, c_left = {params.c_left}, m = {params.m}")
    print("\nfiring degrees:")
    for i, d in firing_degrees(rb, x).items():
        print(f"  {rb.rules[i]}: {d:.4f}")
    print("\nWABL value of each speed term:")
    for name, v in defuzzify_terms(rb, params).items():
        print(f"  {name:<7} {v:9.3f} rot/min")
    res = infer(rb, x, params)
    print(f"\nfan speed (rule-paired sum) = {res.crisp_output:.3f} rot/min")
    print(f"all-pairs double sum         = {double_sum_output(rb, x, params):.3f} rot/min")


if __name__ == "__main__":
    main()
