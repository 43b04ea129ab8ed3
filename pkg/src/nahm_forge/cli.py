"""Command-line front end: verification, lattice-sum evaluation, duality,
product hunting, and numeric modular checks, with machine-readable output.

Exit codes: 0 when every requested check passes, 1 when a verification or
deviation check fails, 2 for usage errors and invalid inputs (unknown ids,
bad matrices, tolerances below the certifiable tail, tau outside the upper
half-plane).  Exact rationals are printed as p/q strings; JSON output is
deterministic regardless of the worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import NahmForgeError, TailTooLarge, UnknownId
from .nahm import NahmQuadruple, dual_quadruple, nahm_sum, quadruple
from .recognizer import hunt
from .series import QSeries
from . import modular, registry


def _frac(text) -> Fraction:
    return Fraction(str(text))


def _parse_matrix(text: str):
    data = json.loads(text)
    return tuple(tuple(_frac(x) for x in row) for row in data)


def _parse_vector(text: str):
    return tuple(_frac(x) for x in json.loads(text))


def _parse_parity(text: str, rank: int):
    mask = [None] * rank
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        idx, res = part.split(":")
        i = int(idx)
        if not 0 <= i < rank:
            raise ValueError(f"parity coordinate {i} out of range")
        mask[i] = int(res)
        if mask[i] not in (0, 1):
            raise ValueError("parity residues must be 0 or 1")
    return tuple(mask) if any(p is not None for p in mask) else None


def _parse_grid(text: str):
    """Per-coordinate ranges lo:hi:step joined by ';', inclusive ends."""
    axes = []
    for part in text.split(";"):
        lo_s, hi_s, step_s = part.split(":")
        lo, hi, step = _frac(lo_s), _frac(hi_s), _frac(step_s)
        if step <= 0 or hi < lo:
            raise ValueError("grid ranges need lo <= hi and step > 0")
        vals = []
        x = lo
        while x <= hi:
            vals.append(x)
            x += step
        axes.append(vals)
    grid = [[]]
    for axis in axes:
        grid = [g + [v] for g in grid for v in axis]
    return [tuple(g) for g in grid]


def _load_quadruple(args) -> tuple[NahmQuadruple, tuple | None]:
    if args.quadruple:
        with open(args.quadruple, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        quad, mask = NahmQuadruple.from_json(data)
    else:
        if not (args.A and args.b and args.d):
            raise ValueError("need either --quadruple FILE or --A, --b and --d")
        quad = quadruple(_parse_matrix(args.A), _parse_vector(args.b),
                         _frac(args.c), [int(x) for x in json.loads(args.d)])
        mask = None
    if getattr(args, "parity", None):
        mask = _parse_parity(args.parity, quad.rank)
    return quad, mask


def _emit(args, payload, human: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def _series_lines(s: QSeries) -> str:
    lines = [f"{e}\t{c}" for e, c in s.items()]
    lines.append(f"# exact below order {s.order}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    rep = registry.verify(args.id, args.order)
    human = f"{rep.id}: {rep.result} (order {rep.order}, {rep.ms} ms)"
    if rep.first_mismatch:
        e, lv, rv = rep.first_mismatch
        human += f"; first mismatch at q^{e}: {lv} vs {rv}"
    _emit(args, rep.to_json(), human)
    return 0 if rep.result in ("pass", "conjecture_pass") else 1


def cmd_verify_all(args) -> int:
    reports = registry.verify_all(args.order, status_filter=args.status_filter,
                                  jobs=args.jobs, param_order=args.param_order)
    payload = [r.to_json() for r in reports]
    lines = [f"{r.id}: {r.result} (order {r.order}, {r.ms} ms)" for r in reports]
    n_fail = sum(1 for r in reports if r.result == "fail")
    lines.append(f"# {len(reports)} records, {n_fail} failures")
    _emit(args, payload, "\n".join(lines))
    return 1 if n_fail else 0


def cmd_nahm(args) -> int:
    quad, mask = _load_quadruple(args)
    s = nahm_sum(quad, _frac(args.order), mask=mask)
    payload = {"den": s.den, "order": str(s.order),
               "terms": [[str(e), str(c)] for e, c in s.items()]}
    _emit(args, payload, _series_lines(s))
    return 0


def cmd_dual(args) -> int:
    quad, mask = _load_quadruple(args)
    dq = dual_quadruple(quad)
    payload = dq.to_json(mask)
    human = json.dumps(payload, indent=2)
    _emit(args, payload, human)
    return 0


def cmd_hunt(args) -> int:
    A = _parse_matrix(args.A)
    d = [int(x) for x in json.loads(args.d)]
    grid = _parse_grid(args.b_grid)
    hits = hunt(A, d, grid, _frac(args.order), max_n=args.max_n,
                max_abs=args.max_exp)
    payload = [h.to_json() for h in hits]
    lines = [json.dumps(h.to_json()) for h in hits]
    lines.append(f"# {len(hits)} hits out of {len(grid)} grid points")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_modular_check(args) -> int:
    re_s, im_s = args.tau.split(",")
    tau = complex(float(re_s), float(im_s))
    names = modular.relations() if args.relation == "all" else [args.relation]
    reports = [modular.check_transformation(name, tau, tol=args.tol)
               for name in names]
    payload = [r.to_json() for r in reports]
    lines = [f"{r.theorem}: max_dev={r.max_dev:.3e} tail={r.tail_bound:.3e} "
             f"{'pass' if r.passed else 'FAIL'}" for r in reports]
    _emit(args, payload if len(payload) > 1 else payload[0], "\n".join(lines))
    return 0 if all(r.passed for r in reports) else 1


def _positive_order(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("order must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    jobs_default = int(os.environ.get("NAHM_FORGE_JOBS", "1"))
    p = argparse.ArgumentParser(
        prog="nahm-forge",
        description="exact q-series identity verification and modular checks")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one registered identity")
    v.add_argument("--id", required=True)
    v.add_argument("--order", type=_positive_order, required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    va = sub.add_parser("verify-all", help="verify the whole registry")
    va.add_argument("--order", type=_positive_order, required=True)
    va.add_argument("--status-filter", choices=["theorem", "known", "conjecture", "all"],
                    default=None)
    va.add_argument("--jobs", type=int, default=jobs_default)
    va.add_argument("--param-order", type=_positive_order, default=None,
                    help="order used for parameter-carrying records")
    va.add_argument("--json", action="store_true")
    va.set_defaults(func=cmd_verify_all)

    for name, fn, with_order in (("nahm", cmd_nahm, True), ("dual", cmd_dual, False)):
        c = sub.add_parser(name, help=f"{name} of a quadruple")
        c.add_argument("--quadruple", help="JSON file with A, b, c, d, parity")
        c.add_argument("--A", help='matrix JSON, e.g. [["2","1"],["2","2"]]')
        c.add_argument("--b", help='vector JSON, e.g. ["0","1"]')
        c.add_argument("--c", default="0")
        c.add_argument("--d", help="symmetrizer JSON, e.g. [1,2]")
        if with_order:
            c.add_argument("--order", type=_positive_order, required=True)
            c.add_argument("--parity", help="restrictions like 0:1 or 0:0,1:1")
        c.add_argument("--json", action="store_true")
        c.set_defaults(func=fn)

    h = sub.add_parser("hunt", help="grid search for bounded periodic product forms")
    h.add_argument("--A", required=True)
    h.add_argument("--d", required=True)
    h.add_argument("--b-grid", required=True,
                   help="per-coordinate lo:hi:step ranges joined by ';'")
    h.add_argument("--order", type=_positive_order, required=True)
    h.add_argument("--max-exp", type=int, default=4,
                   help="boundedness threshold on the peeled exponents")
    h.add_argument("--max-n", type=int, default=None,
                   help="number of exponents to peel")
    h.add_argument("--json", action="store_true")
    h.set_defaults(func=cmd_hunt)

    m = sub.add_parser("modular-check", help="numeric transformation check")
    m.add_argument("--relation", required=True,
                   help=f"one of {', '.join(modular.relations())}, or 'all'")
    m.add_argument("--tau", required=True, help="RE,IM with IM > 0")
    m.add_argument("--tol", type=float, default=1e-9)
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_modular_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnknownId, TailTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NahmForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
