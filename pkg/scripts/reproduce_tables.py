"""Recompute every published convergence column and write CSV + Markdown.

    python scripts/reproduce_tables.py [--out results]

One pair of files per (operator, function), plus summary.md with all tables.
"""

import argparse
import time
from dataclasses import replace
from pathlib import Path

from oscspline.experiment import published_columns, published_config, run_experiment, to_csv, to_markdown


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--samples", type=int, default=201)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    summary = []
    for kind, fid in published_columns():
        config = published_config(kind, fid, samples=args.samples)
        t0 = time.perf_counter()
        rows = run_experiment(config)
        dt = time.perf_counter() - t0
        stem = f"{kind}_{fid}"
        (out / f"{stem}.csv").write_text(to_csv(rows))
        md = to_markdown(rows, replace(config, format="markdown"))
        (out / f"{stem}.md").write_text(md)
        summary.append(f"## {kind} / {fid}\n\n{md}")
        print(f"{stem:20s} {len(rows)} rows  {dt:5.2f}s")
    (out / "summary.md").write_text("\n".join(summary))
    print(f"wrote {out}/")


if __name__ == "__main__":
    main()
