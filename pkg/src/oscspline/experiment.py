"""Convergence experiments: error estimates, NCOs and table output."""

from __future__ import annotations

import csv
import io
import json
import math
import warnings
from dataclasses import asdict, dataclass, replace
from typing import Sequence

import numpy as np

from .bb import Interval
from .quasi import as_oracle, evaluation_points, normalize_kind, quasi_interpolate
from .space import RefinedPartition, Spline, alternating_phi, uniform_refined_partition
from .testfuncs import oracle

DEFAULT_SAMPLES = 201


@dataclass(frozen=True)
class ExperimentConfig:
    interval: tuple = (0.0, 1.0)
    n: tuple = (16, 32, 64, 128, 256)
    phi: str = "alternating:3,4"
    split: str = "midpoint"
    kind: str = "differential"
    function: str = "f1"
    samples: int = DEFAULT_SAMPLES
    out: str | None = None
    format: str = "csv"

    def __post_init__(self):
        object.__setattr__(self, "interval", tuple(float(x) for x in self.interval))
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        if not self.n or any(x < 1 for x in self.n):
            raise ValueError("n values must be positive")
        if any(b <= a for a, b in zip(self.n, self.n[1:])):
            raise ValueError("n values must be strictly increasing")
        if self.split != "midpoint":
            raise ValueError(f"unsupported split rule {self.split!r}")
        if self.samples < 2:
            raise ValueError("need at least two samples")
        if self.format not in ("csv", "markdown"):
            raise ValueError(f"unknown format {self.format!r}")
        normalize_kind(self.kind)

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        known = {k: v for k, v in d.items() if k in cls.__dataclass_fields__}
        unknown = set(d) - set(known)
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
        if isinstance(known.get("n"), int):
            known["n"] = (known["n"],)
        return cls(**known)

    @classmethod
    def from_json(cls, path: str) -> "ExperimentConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ResultRow:
    n: int
    error: float
    nco: float | None = None


def parse_phi(spec: str, n: int) -> tuple:
    """``alternating:3,4`` | ``constant:K`` | ``list:p0,p1,...`` -> phi for ``n`` sub-intervals."""
    kind, _, rest = spec.partition(":")
    try:
        values = [int(x) for x in rest.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"bad phi specification {spec!r}")
    if kind == "alternating" and values:
        return alternating_phi(n, values)
    if kind == "constant" and len(values) == 1:
        return (values[0],) * (n + 1)
    if kind == "list":
        if len(values) != n + 1:
            raise ValueError(f"phi list has {len(values)} entries, n = {n} needs {n + 1}")
        return tuple(values)
    raise ValueError(f"bad phi specification {spec!r}")


def build_partition(config: ExperimentConfig, n: int) -> RefinedPartition:
    return uniform_refined_partition(Interval(*config.interval), n, parse_phi(config.phi, n))


def sample_points(partition: RefinedPartition, samples: int = DEFAULT_SAMPLES) -> np.ndarray:
    """``samples`` equally spaced points covering ``[v_0, v_n]`` including both ends."""
    return np.linspace(partition.vertices[0], partition.vertices[-1], samples)


def estimate_error(q: Spline, f, samples: int = DEFAULT_SAMPLES) -> float:
    """``max |q(x) - f(x)|`` over the sample grid."""
    if samples < 2:
        raise ValueError("need at least two samples")
    f = as_oracle(oracle(f) if isinstance(f, str) else f)
    xs = sample_points(q.partition, samples)
    return float(max(abs(q(x) - f.eval(x)) for x in xs))


def nco(e1: float, n1: int, e2: float, n2: int) -> float:
    """Numerical convergence order ``log(e1/e2) / log(n2/n1)``."""
    if e1 <= 0 or e2 <= 0:
        raise ValueError("convergence order undefined for zero errors")
    if not 0 < n1 < n2:
        raise ValueError("need 0 < n1 < n2")
    return math.log(e1 / e2) / math.log(n2 / n1)


def run_experiment(config: ExperimentConfig, f=None) -> list[ResultRow]:
    """One row per ``n``; ``f`` overrides the named test function."""
    target = oracle(config.function) if f is None else as_oracle(f)
    rows: list[ResultRow] = []
    for n in config.n:
        part = build_partition(config, n)
        q = quasi_interpolate(part, config.kind, target)
        err = float(estimate_error(q, target, config.samples))
        rate = nco(rows[-1].error, rows[-1].n, err, n) if rows and rows[-1].error > 0 and err > 0 else None
        rows.append(ResultRow(n, err, rate))
    if any(b.error >= a.error for a, b in zip(rows, rows[1:])):
        warnings.warn(f"{config.function}/{config.kind}: error is not strictly decreasing in n")
    return rows


def data_count(config: ExperimentConfig, n: int | None = None) -> int:
    """Number of scalar inputs the operator reads for one ``n``.

    Derivatives count individually; evaluation points are deduplicated.
    """
    part = build_partition(config, config.n[0] if n is None else n)
    kind = normalize_kind(config.kind)
    if kind == "differential":
        return sum(part.phi)
    return len(evaluation_points(part, kind))


def to_csv(rows: Sequence[ResultRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "error", "nco"])
    for r in rows:
        w.writerow([r.n, repr(float(r.error)), "" if r.nco is None else repr(float(r.nco))])
    return buf.getvalue()


def _g(x: float | None) -> str:
    return "--" if x is None else f"{x:.6g}"


def to_markdown(rows: Sequence[ResultRow], config: ExperimentConfig) -> str:
    ref = reference_columns(config)
    head = ["n", f"E_n({config.function})", "NCO"]
    if ref:
        head += ["published E_n", "published NCO"]
        head += [f"{name} E_n", f"{name} NCO"] if (name := ref.get("third_party_name")) else []
    lines = [
        f"{config.kind} quasi-interpolant, phi {config.phi}, {config.samples} samples",
        "",
        "| " + " | ".join(head) + " |",
        "|" + "---|" * len(head),
    ]
    for r in rows:
        cells = [str(r.n), _g(r.error), _g(r.nco)]
        if ref:
            pub = ref["rows"].get(r.n)
            cells += [_g(pub[0]) if pub else "", _g(pub[1]) if pub else ""]
            if ref.get("third_party_name"):
                other = ref["third_party"].get(r.n)
                cells += [_g(other[0]) if other else "", _g(other[1]) if other else ""]
        lines.append("| " + " | ".join(cells) + " |")
    if ref:
        lines += ["", "Columns labelled 'published' and the third-party columns are transcribed from "
                      "the published tables, not computed."]
    return "\n".join(lines) + "\n"


def render(rows: Sequence[ResultRow], config: ExperimentConfig) -> str:
    return to_csv(rows) if config.format == "csv" else to_markdown(rows, config)


def reference_columns(config: ExperimentConfig) -> dict | None:
    """Published values for this (kind, function), if the configuration is the published one."""
    if config.phi != "alternating:3,4" or tuple(config.interval) != (0.0, 1.0):
        return None
    return REFERENCE.get((normalize_kind(config.kind), config.function))


# Transcribed from the published tables: {n: (E_n, NCO)}; NCO is None on the first row.
REFERENCE = {
    ("differential", "f1"): {"rows": {
        16: (1.4305e-3, None), 32: (6.11325e-5, 4.54843), 64: (6.48491e-6, 3.23678),
        128: (3.66472e-7, 4.14531), 256: (2.48645e-8, 3.88154)}},
    ("differential", "f2"): {"rows": {
        16: (1.84729e-3, None), 32: (1.46037e-4, 3.661), 64: (8.3046e-6, 4.13628),
        128: (5.02361e-7, 4.04712), 256: (2.79162e-8, 4.16955)}},
    ("differential", "f3"): {"rows": {
        16: (1.78188e-6, None), 32: (1.05981e-7, 4.07153), 64: (7.00157e-9, 3.91998),
        128: (4.26038e-10, 4.03862), 256: (2.73356e-11, 3.96213)}},
    ("polarization", "f1"): {
        "rows": {16: (6.25902e-4, None), 32: (3.10344e-5, 4.334), 64: (2.42724e-6, 3.67648),
                 128: (1.76285e-7, 3.78334), 256: (9.5628e-9, 4.20433)},
        "third_party_name": "cubic C1 QI (3 data/vertex)",
        "third_party": {16: (3.2851e-3, None), 32: (3.8209e-4, 3.10), 64: (2.1478e-5, 4.15),
                        128: (9.9300e-7, 4.43), 256: (7.5323e-8, 3.72)}},
    ("polarization", "f2"): {
        "rows": {16: (7.09872e-4, None), 32: (5.58036e-5, 3.66913), 64: (3.8982e-6, 3.83948),
                 128: (1.83669e-7, 4.40763), 256: (1.29283e-8, 3.8285)},
        "third_party_name": "cubic C1 QI (3 data/vertex)",
        "third_party": {16: (8.3227e-3, None), 32: (5.1442e-4, 4.01), 64: (2.9507e-5, 4.12),
                        128: (1.8595e-6, 3.98), 256: (1.1592e-7, 4.00)}},
    ("polarization", "g1"): {
        "rows": {16: (1.85742e-9, None), 32: (1.16097e-10, 3.99989), 64: (7.25608e-12, 4.00),
                 128: (4.53415e-13, 4.00029)},
        "third_party_name": "cubic C1 QI (3 data/vertex)",
        "third_party": {16: (2.1352e-8, None), 32: (1.3627e-9, 3.96), 64: (8.6021e-11, 3.98),
                        128: (5.4025e-12, 3.99)}},
    ("polarization", "g2"): {
        "rows": {64: (1.80915e-8, None), 128: (1.1413e-9, 3.98656), 256: (7.13407e-11, 3.99981),
                 512: (4.46058e-12, 3.99942)},
        "third_party_name": "cubic C1 QI (3 data/vertex)",
        "third_party": {64: (2.1282e-7, None), 128: (1.3140e-8, 4.01), 256: (7.3024e-10, 4.16),
                        512: (5.2902e-11, 3.78)}},
    ("polarization", "g3"): {
        "rows": {16: (2.71919e-7, None), 32: (1.69909e-8, 4.00034), 64: (1.06187e-9, 4.00008),
                 128: (6.6366e-11, 4.00002)},
        "third_party_name": "cubic spline QI (6n-1 data)",
        "third_party": {16: (3.2526e-7, None), 32: (2.2001e-8, 3.88593), 64: (1.4290e-9, 3.94444),
                        128: (9.1028e-11, 3.97262)}},
}

# Published data counts for the alternating 3/4 setup, as functions of n.
REFERENCE_DATA_COUNTS = {
    "differential": lambda n: 7 * n / 2,
    "polarization": lambda n: 9 * n - 1,
}


def published_config(kind: str, function: str, **overrides) -> ExperimentConfig:
    """Configuration reproducing one published column."""
    ref = REFERENCE[(normalize_kind(kind), function)]
    return replace(ExperimentConfig(kind=normalize_kind(kind), function=function,
                                    n=tuple(sorted(ref["rows"]))), **overrides)


def published_columns() -> list[tuple[str, str]]:
    return list(REFERENCE)
