#!/usr/bin/env python3
"""Run every modular transformation check at the default sample points and
emit one JSON report line per (relation, point)."""

import argparse
import json
import sys

from nahm_forge import modular


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()

    ok = True
    for tau in modular.TAU_DEFAULT:
        for rel in modular.relations():
            rep = modular.check_transformation(rel, tau, tol=args.tol)
            ok = ok and rep.passed
            print(json.dumps(rep.to_json()))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
