"""Command line front end.

Subcommands:
  verify   run the whole verification suite
  wigner   Wigner-rotation checks only
  table    matrix-element table checks only

All output is deterministic for a fixed seed: reports are emitted in a
fixed order as JSON lines or RFC-4180 CSV.  Exit status is 0 when every
gated check passes, 1 when any gate fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .verify import Config, VerificationReport, run_all

_FIELDS = ("check", "status", "max_residual", "tolerance", "samples", "seed", "notes")

_WIGNER_CHECKS = frozenset({
    "wigner_R_fixes_rest_momentum", "spinor_transform_law",
    "expectation_rotation", "little_group_cocycle",
    "d2_trace_angle_consistency", "two_boost_analytic_angle",
    "wigner_closed_form_su2_residual", "expectation_rotation_with_wigner_spin",
})
_TABLE_CHECKS = frozenset({
    "matrix_element_hermiticity", "matrix_element_diagonality",
    "u_v_orthogonality", "u_norm_2E_over_m",
})


def emit_json(reports: list[VerificationReport], stream) -> None:
    for r in reports:
        stream.write(json.dumps(r.as_dict(), sort_keys=False) + "\n")


def emit_csv(reports: list[VerificationReport], stream) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_FIELDS, lineterminator="\r\n")
    writer.writeheader()
    for r in reports:
        row = r.as_dict()
        if row["tolerance"] is None:
            row["tolerance"] = ""
        writer.writerow(row)
    stream.write(buf.getvalue())


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="covspin",
                                 description="covariant spin operator checks")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, helptext in (("verify", "run every check"),
                           ("wigner", "Wigner rotation checks"),
                           ("table", "matrix element table checks")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--mass", type=float, default=1.0)
        sp.add_argument("--pmax", type=float, default=5.0)
        sp.add_argument("--samples", type=int, default=500)
        sp.add_argument("--seed", type=int, default=42)
        sp.add_argument("--tol", type=float, default=1e-10)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.mass <= 0 or args.pmax <= 0 or args.samples <= 0 or args.tol <= 0:
        print("mass, pmax, samples, and tol must be positive", file=sys.stderr)
        return 2

    cfg = Config(args.mass, args.pmax, args.samples, args.seed, args.tol)
    reports = run_all(cfg)
    if args.command == "wigner":
        reports = [r for r in reports if r.check in _WIGNER_CHECKS]
    elif args.command == "table":
        reports = [r for r in reports if r.check in _TABLE_CHECKS]

    if args.format == "json":
        emit_json(reports, sys.stdout)
    else:
        emit_csv(reports, sys.stdout)
    return 1 if any(r.status == "fail" for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
