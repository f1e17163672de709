"""Track the normalized aggregate progression error as x grows.

For a set with positive density the summed worst-class errors over moduli
q <= Q, divided by x, should decrease; a flat or growing column is the
first sign that the residue classes are drifting.

    python3 scripts/bv_decay_scan.py --eps 0.5 --Q 30 --x-max 1e7 --points 5
"""

import argparse

import numpy as np

from heckegaps.equidist_stats import all_primes_set, bv_decay, peps_set


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--set", choices=("primes", "peps"), default="peps")
    ap.add_argument("--eps", type=float, default=0.5)
    ap.add_argument("--Q", type=int, default=30)
    ap.add_argument("--x-min", type=float, default=1e5)
    ap.add_argument("--x-max", type=float, default=1e7)
    ap.add_argument("--points", type=int, default=5)
    args = ap.parse_args()

    spec = all_primes_set() if args.set == "primes" else peps_set(args.eps)
    xs = [int(x) for x in np.geomspace(args.x_min, args.x_max, args.points)]
    print(f"set {spec.label}  Q={args.Q}")
    print(f"{'x':>12} {'aggregate/x':>14}")
    for x, value in bv_decay(spec, xs, args.Q):
        print(f"{x:>12} {value:>14.4e}")


if __name__ == "__main__":
    main()
