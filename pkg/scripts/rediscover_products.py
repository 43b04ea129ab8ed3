#!/usr/bin/env python3
"""Grid-search experiment: scan offset vectors b over the first candidate
family and report every sum whose exponent profile is a bounded, eventually
periodic integer sequence (i.e. looks like q^delta * prod (1-q^n)^(a_n)).

The half-integer first coordinate sweeps x/2 for x in [-4, 4]; the second
coordinate sweeps [-2, 4].  Hits are printed as JSON lines.
"""

import argparse
import json
import time
from fractions import Fraction as F

from nahm_forge.recognizer import hunt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=121)
    ap.add_argument("--max-n", type=int, default=120)
    ap.add_argument("--max-exp", type=int, default=4)
    args = ap.parse_args()

    A = ((2, 1), (2, 2))
    d = (1, 2)
    grid = [(F(x, 2), F(y)) for x in range(-4, 5) for y in range(-2, 5)]
    t0 = time.time()
    hits = hunt(A, d, grid, order=args.order, max_n=args.max_n,
                max_abs=args.max_exp)
    for h in hits:
        print(json.dumps(h.to_json()))
    print(f"# {len(hits)} hits / {len(grid)} grid points "
          f"in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
