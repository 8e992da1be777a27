"""Errors and orders of the three quasi-interpolants side by side.

    python scripts/compare_operators.py [--function g3] [--n 16,32,64,128]

Prints a Markdown table and the data count each operator consumes.
"""

import argparse
import warnings

from oscspline.experiment import ExperimentConfig, data_count, run_experiment
from oscspline.quasi import KINDS


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--function", default="g3")
    ap.add_argument("--n", default="16,32,64,128")
    ap.add_argument("--phi", default="alternating:3,4")
    args = ap.parse_args()
    ns = tuple(int(x) for x in args.n.split(","))

    results = {}
    for kind in KINDS:
        config = ExperimentConfig(n=ns, phi=args.phi, kind=kind, function=args.function)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            results[kind] = run_experiment(config)
        for c in caught:
            print(f"warning: {c.message}")

    head = ["n"] + [f"{k} {col}" for k in KINDS for col in ("E_n", "NCO", "data")]
    print("| " + " | ".join(head) + " |")
    print("|" + "---|" * len(head))
    for idx, n in enumerate(ns):
        cells = [str(n)]
        for kind in KINDS:
            r = results[kind][idx]
            count = data_count(ExperimentConfig(n=(n,), phi=args.phi, kind=kind))
            rate = "--" if r.nco is None else f"{r.nco:.3f}"
            cells.append(f"{r.error:.4e} | {rate} | {count}")
        print("| " + " | ".join(cells) + " |")


if __name__ == "__main__":
    main()
