"""Largest stable dz for each series truncation M on a given grid.

Bisects on dz by running the defect-free soliton to z_end and checking
whether the divergence guard trips. Prints one line per M.

    python scripts/stability_scan.py --n-y 200 --m 0 1 2
"""

import argparse

from solfdtd.config import parse_config
from solfdtd.errors import NumericsError
from solfdtd.experiments import simulate


def stable(n_y, m, dz, z_end):
    steps = max(1, round(z_end / dz))
    cfg = parse_config(f"grid.n_y = {n_y}\ngrid.dz = {z_end / steps!r}\nscheme.m_terms = {m}\nrun.z_end = {z_end!r}")
    try:
        simulate(cfg)
    except NumericsError:
        return False
    return True


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-y", type=int, default=200)
    ap.add_argument("--m", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--z-end", type=float, default=2.0)
    args = ap.parse_args()
    for m in args.m:
        lo, hi = 1e-4, 0.2
        for _ in range(30):
            mid = (lo * hi) ** 0.5
            if stable(args.n_y, m, mid, args.z_end):
                lo = mid
            else:
                hi = mid
        print(f"n_y={args.n_y} M={m}: stable up to dz ~ {lo:.4g} (unstable at {hi:.4g})")


if __name__ == "__main__":
    main()
