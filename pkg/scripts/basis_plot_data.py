"""Sample the B-spline-like basis and the classical Hermite basis for plotting.

    python scripts/basis_plot_data.py [--n 4] [--phi alternating:3,4] [--out basis.csv]

Output columns: family,vertex_index,index,x,value.  For the B-spline-like family
``index`` is ``alpha1-alpha2``; for the classical family it is the derivative order.
"""

import argparse
import csv

import numpy as np

from oscspline.basis import BSplineLikeBasis, classical_hermite_basis
from oscspline.bb import Interval
from oscspline.experiment import parse_phi
from oscspline.space import uniform_refined_partition


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--phi", default="alternating:3,4")
    ap.add_argument("--samples", type=int, default=401)
    ap.add_argument("--out", default="basis.csv")
    args = ap.parse_args()

    part = uniform_refined_partition(Interval(0.0, 1.0), args.n, parse_phi(args.phi, args.n))
    basis = BSplineLikeBasis(part)
    xs = np.linspace(0.0, 1.0, args.samples)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["family", "vertex_index", "index", "x", "value"])
        for i, alpha in basis.indices():
            for x, v in zip(xs, basis.function(i, alpha)(xs)):
                w.writerow(["bspline_like", i, f"{alpha.a1}-{alpha.a2}", repr(float(x)), repr(float(v))])
        for i, p in enumerate(part.phi):
            for j in range(p):
                for x, v in zip(xs, classical_hermite_basis(part, i, j)(xs)):
                    w.writerow(["classical", i, j, repr(float(x)), repr(float(v))])
    print(f"{len(basis)} B-spline-like functions on n={args.n}, phi={part.phi} -> {args.out}")


if __name__ == "__main__":
    main()
