"""Command-line entry point: ``oscspline {interp,qi,convergence,basis-dump,dim}``."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import replace

from .basis import BSplineLikeBasis
from .experiment import (DEFAULT_SAMPLES, ExperimentConfig, build_partition, data_count,
                         render, run_experiment, sample_points)
from .quasi import KINDS, normalize_kind, quasi_interpolate
from .space import RefinedPartition, Spline, dimension, hermite_interpolate
from .testfuncs import FUNCTION_IDS, oracle


def _n_list(text: str) -> tuple:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON file with experiment settings; flags override it")
    p.add_argument("--interval", nargs=2, type=float, metavar=("A", "B"))
    p.add_argument("--n", type=_n_list, metavar="N[,N...]")
    p.add_argument("--phi", help="alternating:3,4 | constant:K | list:p0,p1,...")
    p.add_argument("--kind", choices=[k.replace("_", "-") for k in KINDS] + list(KINDS))
    p.add_argument("--function", choices=FUNCTION_IDS)
    p.add_argument("--samples", type=int, help=f"error/sampling grid size (default {DEFAULT_SAMPLES})")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--format", choices=("csv", "markdown"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscspline",
        description="Hermite osculatory C1 splines on refined partitions and their quasi-interpolants. "
                    "At a shared breakpoint, sampled values come from the piece on its left.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("interp", help="Hermite-interpolate a test function or a data file")
    _add_common(p)
    p.add_argument("--data", help="CSV with header vertex_index,deriv_order,value")

    p = sub.add_parser("qi", help="fit one quasi-interpolant and emit sampled values")
    _add_common(p)

    p = sub.add_parser("convergence", help="error/NCO table over a sequence of n")
    _add_common(p)

    p = sub.add_parser("basis-dump", help="sample every B-spline-like basis function")
    _add_common(p)
    p.add_argument("--ordinates", action="store_true",
                   help="emit piece ordinates instead of sampled values")

    p = sub.add_parser("dim", help="space dimension and data counts per operator")
    _add_common(p)
    return parser


def resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    base = ExperimentConfig.from_json(args.config) if args.config else ExperimentConfig()
    overrides = {}
    for key in ("interval", "n", "phi", "kind", "function", "samples", "out", "format"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = normalize_kind(value) if key == "kind" else value
    return replace(base, **overrides)


def read_hermite_csv(text: str, partition: RefinedPartition) -> list[list[float]]:
    """Parse ``vertex_index,deriv_order,value`` rows into per-vertex data rows."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != [
            "vertex_index", "deriv_order", "value"]:
        raise ValueError("Hermite data file needs the header vertex_index,deriv_order,value")
    seen: dict = {}
    for row in reader:
        key = (int(row["vertex_index"]), int(row["deriv_order"]))
        if key in seen:
            raise ValueError(f"duplicate entry for vertex {key[0]}, order {key[1]}")
        seen[key] = float(row["value"])
    data = []
    for i, p in enumerate(partition.phi):
        need = {(i, j) for j in range(p)}
        missing = need - set(seen)
        if missing:
            raise ValueError(f"vertex {i}: missing derivative orders "
                             f"{sorted(j for _, j in missing)}")
        data.append([seen[(i, j)] for j in range(p)])
    extra = set(seen) - {(i, j) for i, p in enumerate(partition.phi) for j in range(p)}
    if extra:
        raise ValueError(f"entries outside the phi pattern: {sorted(extra)}")
    return data


def _samples_csv(s: Spline, samples: int, f=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "value"] + (["f", "error"] if f is not None else []))
    for x in sample_points(s.partition, samples):
        v = s(x)
        if f is None:
            w.writerow([repr(float(x)), repr(float(v))])
        else:
            fx = f.eval(x)
            w.writerow([repr(float(x)), repr(float(v)), repr(float(fx)), repr(abs(float(v - fx)))])
    return buf.getvalue()


def _single_n(config: ExperimentConfig) -> int:
    if len(config.n) != 1:
        raise ValueError("this command takes a single --n value")
    return config.n[0]


def cmd_interp(args, config: ExperimentConfig) -> str:
    part = build_partition(config, _single_n(config))
    if args.data:
        with open(args.data) as fh:
            data = read_hermite_csv(fh.read(), part)
        return _samples_csv(hermite_interpolate(part, data), config.samples)
    f = oracle(config.function)
    data = [[f.deriv(v, j) for j in range(p)] for v, p in zip(part.vertices, part.phi)]
    return _samples_csv(hermite_interpolate(part, data), config.samples, f)


def cmd_qi(args, config: ExperimentConfig) -> str:
    part = build_partition(config, _single_n(config))
    f = oracle(config.function)
    return _samples_csv(quasi_interpolate(part, config.kind, f), config.samples, f)


def cmd_convergence(args, config: ExperimentConfig) -> str:
    return render(run_experiment(config), config)


def cmd_basis_dump(args, config: ExperimentConfig) -> str:
    part = build_partition(config, _single_n(config))
    basis = BSplineLikeBasis(part)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if args.ordinates:
        w.writerow(["vertex_index", "alpha1", "alpha2", "piece", "k", "ordinate"])
        for i, alpha in basis.indices():
            for pk, piece in enumerate(basis.function(i, alpha).pieces):
                for k, c in enumerate(piece.ordinates):
                    w.writerow([i, alpha.a1, alpha.a2, pk, k, repr(float(c))])
        return buf.getvalue()
    xs = sample_points(part, config.samples)
    w.writerow(["vertex_index", "alpha1", "alpha2", "x", "value"])
    for i, alpha in basis.indices():
        values = basis.function(i, alpha)(xs)
        for x, v in zip(xs, values):
            w.writerow([i, alpha.a1, alpha.a2, repr(float(x)), repr(float(v))])
    return buf.getvalue()


def cmd_dim(args, config: ExperimentConfig) -> str:
    lines = ["n,dimension,differential,point_value,polarization"]
    for n in config.n:
        part = build_partition(config, n)
        counts = [data_count(replace(config, kind=k), n) for k in KINDS]
        lines.append(",".join(str(x) for x in [n, dimension(part)] + counts))
    return "\n".join(lines) + "\n"


COMMANDS = {
    "interp": cmd_interp,
    "qi": cmd_qi,
    "convergence": cmd_convergence,
    "basis-dump": cmd_basis_dump,
    "dim": cmd_dim,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = resolve_config(args)
        text = COMMANDS[args.command](args, config)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"oscspline: error: {exc}", file=sys.stderr)
        return 2
    if config.out:
        with open(config.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
