"""Command-line interface.

Usage examples::

    concbounds bound --family ghz --n 3 --noise 0.3
    concbounds bound --file state.json --json
    concbounds scan ghz --xmin 0 --xmax 1 --steps 100 --out ghz.csv
    concbounds threshold ghz eq12
    concbounds selftest

``bound`` exits 0 when entanglement is certified, 1 when it is not, and 2 on
bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, selftest, sweep
from .config import DEFAULT_TOLERANCES, Tolerances
from .partition import PartitionError
from .qstate import StateError, white_noise_mix
from .statefile import StateFileError, load_state

EXIT_ENTANGLED, EXIT_UNDETECTED, EXIT_ERROR = 0, 1, 2


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=3, help="number of qubits for ghz/product (default 3)")
    p.add_argument(
        "--weights",
        type=float,
        nargs=5,
        metavar=("L0P", "L0M", "L1", "L2", "L3"),
        help="dct weights lam0+ lam0- lam1 lam2 lam3 (lam0+ + lam0- + 2(lam1+lam2+lam3) = 1)",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="concbounds", description="Bounds on multipartite concurrence.")
    ap.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOLERANCES.verdict,
        help="verdict threshold a lower bound must exceed to certify entanglement (default %(default)g)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="print all bounds for one state")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="JSON state file with dims and matrix")
    src.add_argument("--family", choices=sweep.FAMILIES)
    _family_args(p)
    p.add_argument("--noise", type=float, help="mix with white noise: (1-x) I/D + x rho")
    p.add_argument("--json", action="store_true", help="emit a JSON report instead of text")

    p = sub.add_parser("scan", help="sweep the white-noise weight and write CSV")
    p.add_argument("family", choices=sweep.FAMILIES)
    _family_args(p)
    p.add_argument("--xmin", type=float, default=0.0)
    p.add_argument("--xmax", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--out", default="-", help="output CSV path, '-' for stdout")

    p = sub.add_parser("threshold", help="smallest noise weight at which a lower bound detects entanglement")
    p.add_argument("family", choices=sweep.FAMILIES)
    p.add_argument("bound", choices=sweep.BOUND_NAMES)
    _family_args(p)
    p.add_argument("--xtol", type=float, default=1e-4)

    p = sub.add_parser("selftest", help="run the built-in property checks")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=2024)
    return ap


def format_report(rep: bounds.BoundReport) -> str:
    lines = [f"{'cut':<16}{'M':>3}{'N':>4}{'||T_A||':>12}{'||R||':>12}{'B1':>12}{'B2':>12}{'B3':>12}"]
    for c in rep.per_cut:
        lines.append(
            f"{str(c.cut):<16}{c.m:>3}{c.n_big:>4}{c.ppt_norm:>12.6f}{c.realign_norm:>12.6f}"
            f"{c.b1:>12.6f}{c.b2:>12.6f}{c.b3:>12.6f}"
        )
    lines.append("")
    for name in ("lower_eq12", "lower_eq13", "upper_eq13", "upper_eq14", "best_lower", "best_upper"):
        lines.append(f"{name:<12} {getattr(rep, name):.10f}")
    lines.append(f"{'entangled':<12} {'yes' if rep.entangled else 'not detected'}")
    return "\n".join(lines)


def cmd_bound(args, tol: Tolerances) -> int:
    if args.file:
        state = load_state(args.file, tol)
    else:
        state = sweep.family_state(args.family, args.n, args.weights)
    if args.noise is not None:
        state = white_noise_mix(state, args.noise)
    rep = bounds.report(state, tol)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(format_report(rep))
    return EXIT_ENTANGLED if rep.entangled else EXIT_UNDETECTED


def cmd_scan(args, tol: Tolerances) -> int:
    base = sweep.family_state(args.family, args.n, args.weights)
    rows = sweep.scan(base, args.xmin, args.xmax, args.steps, tol)
    text = sweep.rows_to_csv(rows)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise sweep.SweepError(f"cannot write {args.out}: {exc.strerror}") from None
    return 0


def cmd_threshold(args, tol: Tolerances) -> int:
    base = sweep.family_state(args.family, args.n, args.weights)
    try:
        x = sweep.threshold(base, args.bound, xtol=args.xtol, tol=tol)
    except sweep.SweepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDETECTED
    print(f"{x:.6f}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    tol = DEFAULT_TOLERANCES.with_verdict(args.tol)
    try:
        if args.command == "bound":
            return cmd_bound(args, tol)
        if args.command == "scan":
            return cmd_scan(args, tol)
        if args.command == "threshold":
            return cmd_threshold(args, tol)
        return 0 if selftest.run(args.samples, args.seed) else 1
    except (StateFileError, StateError, PartitionError, sweep.SweepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
