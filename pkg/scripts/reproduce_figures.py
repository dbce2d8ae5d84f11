"""Write the data behind the defect-free, single-defect and multi-defect figures.

    python scripts/reproduce_figures.py --out out/figures

Produces run/, field/ and sweep/ subdirectories plus a short text summary.
Rendering is left to whatever plotting tool reads the CSV files.
"""

import argparse
from pathlib import Path

from solfdtd.config import parse_config
from solfdtd.experiments import execute

HERE = Path(__file__).resolve().parent.parent / "configs"


def load(name):
    return parse_config((HERE / name).read_text())


def main():
    ap = argparse.ArgumentParser(description="regenerate figure data")
    ap.add_argument("--out", default="out/figures")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    out = Path(args.out)

    reports = [
        execute(load("defect_free.cfg"), "run", out / "defect_free"),
        execute(load("defect_free.cfg"), "field", out / "defect_free_field"),
        execute(load("single_defect.cfg"), "run", out / "single_defect"),
        execute(load("single_defect.cfg"), "field", out / "single_defect_field"),
        execute(load("sweep.cfg"), "sweep", out / "sweep", jobs=args.jobs),
    ]
    lines = []
    for r in reports:
        lines.append(f"[{r.command}] {r.output_dir}")
        for k, v in r.summary.items():
            lines.append(f"  {k}: {v}")
    (out / "summary.txt").write_text("\n".join(lines) + "\n")
    print("\n".join(lines))


if __name__ == "__main__":
    main()
