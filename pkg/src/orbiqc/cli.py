"""Command-line frontend.

Three subcommands: ``coeffs`` prints one series, ``verify`` runs a named
consistency check, ``table`` prints a whole cubic-coefficient catalog.
Output formats are plain (exponent coefficient per line), csv and json; the
two machine formats carry identical records and parse back losslessly.
Rationals render as ``p/q`` with q > 1, integers bare.

Exit codes: 0 success; 1 a verify check found a discrepancy; 2 unknown
series or check name; 3 invalid order.  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .checks import CHECK_NAMES, run_check
from .gw import CATALOG_NAMES, correlator_by_name
from .modforms import eta_series, theta2, theta3, theta_F, theta_G
from .qseries import QSeries

__all__ = ["main"]

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_UNKNOWN_NAME = 2
EXIT_INVALID_ORDER = 3

DEFAULT_ORDER = 100

# Series available without an orbifold.
_BUILDING_BLOCKS = {
    "F": theta_F,
    "G": theta_G,
    "eta": eta_series,
    "theta2": theta2,
    "theta3": theta3,
}

# Catalog name prefixes resolve the orbifold when --orbifold is omitted.
_PREFIX_ORBIFOLD = {"f": "333", "h": "236", "g": "244"}


@dataclass(frozen=True)
class EmitRecord:
    exponent: str
    coefficient: str
    series: str
    status: str


def _format_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _records(series: QSeries, name: str, status: str, order: int) -> list[EmitRecord]:
    out = [
        EmitRecord(_format_rat(exp), _format_rat(c), name, status)
        for exp, c in series.nonzero_terms()
        if exp < order
    ]
    return out


def _emit(records: list[EmitRecord], fmt: str, out) -> None:
    if fmt == "plain":
        for r in records:
            out.write(f"{r.exponent} {r.coefficient}\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["exponent", "coefficient", "series", "status"])
        for r in records:
            writer.writerow([r.exponent, r.coefficient, r.series, r.status])
    elif fmt == "json":
        json.dump([vars(r) for r in records], out, indent=1)
        out.write("\n")
    else:
        raise AssertionError(f"unhandled format {fmt}")


def _emit_table_plain(records: list[EmitRecord], out) -> None:
    for r in records:
        out.write(f"{r.series} {r.exponent} {r.coefficient} {r.status}\n")


def _invalid_order(order: int, err) -> bool:
    if order < 1:
        print(f"error: --order must be at least 1, got {order}", file=err)
        return True
    return False


def _resolve_catalog(name: str, orbifold: Optional[str], err) -> Optional[str]:
    """Orbifold owning a catalog series name, or None (with a message)."""
    if orbifold is not None:
        if name in CATALOG_NAMES[orbifold]:
            return orbifold
        print(
            f"error: unknown series {name!r} for orbifold {orbifold}; "
            f"expected one of {', '.join(CATALOG_NAMES[orbifold])} "
            f"or a named building block ({', '.join(_BUILDING_BLOCKS)})",
            file=err,
        )
        return None
    inferred = _PREFIX_ORBIFOLD.get(name[:1])
    if inferred and name in CATALOG_NAMES[inferred]:
        return inferred
    print(
        f"error: unknown series {name!r}; expected one of "
        f"{', '.join(_BUILDING_BLOCKS)} or a catalog name (f*, h*, g*)",
        file=err,
    )
    return None


def _cmd_coeffs(args, out, err) -> int:
    if _invalid_order(args.order, err):
        return EXIT_INVALID_ORDER
    name = args.series
    if name in _BUILDING_BLOCKS:
        series = _BUILDING_BLOCKS[name](args.order)
        status = "proven"
    else:
        orbifold = _resolve_catalog(name, args.orbifold, err)
        if orbifold is None:
            return EXIT_UNKNOWN_NAME
        row = correlator_by_name(orbifold, name, args.order, args.include_degree_zero)
        series, status = row.series, row.status
    records = _records(series, name, status, args.order)
    _emit(records, args.format, out)
    if args.format == "plain":
        out.write(f"# exact below q^{args.order}\n")
    print(
        f"series {name}: status {status}; {len(records)} nonzero coefficients; "
        f"exact below q^{args.order}",
        file=err,
    )
    return EXIT_OK


def _cmd_verify(args, out, err) -> int:
    if _invalid_order(args.order, err):
        return EXIT_INVALID_ORDER
    try:
        outcome = run_check(args.check, args.order)
    except KeyError:
        print(
            f"error: unknown check {args.check!r}; expected one of {', '.join(CHECK_NAMES)}",
            file=err,
        )
        return EXIT_UNKNOWN_NAME
    for line in outcome.lines:
        out.write(line + "\n")
    return EXIT_OK if outcome.holds else EXIT_DISCREPANCY


def _cmd_table(args, out, err) -> int:
    if _invalid_order(args.order, err):
        return EXIT_INVALID_ORDER
    from .gw import potential_cubic_table

    orbifolds = [args.orbifold] if args.orbifold else ["333", "236", "244"]
    records: list[EmitRecord] = []
    for orbifold in orbifolds:
        for row in potential_cubic_table(orbifold, args.order, args.include_degree_zero):
            rows = _records(row.series, row.name, row.status, args.order)
            if not rows:
                # A vanishing series still gets one row so the table shows it.
                rows = [EmitRecord("0", "0", row.name, row.status)]
            records.extend(rows)
    if args.format == "plain":
        _emit_table_plain(records, out)
    else:
        _emit(records, args.format, out)
    print(
        f"table for {', '.join(orbifolds)}: {len(records)} rows; exact below q^{args.order}",
        file=err,
    )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbiqc",
        description=(
            "Exact cubic Gromov-Witten coefficients of the elliptic orbifold "
            "projective lines, by lattice-point counting, with closed-form "
            "cross checks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_format=True):
        p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="exponents below this are exact (default 100)")
        if with_format:
            p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p_coeffs = sub.add_parser("coeffs", help="print one series' nonzero coefficients")
    p_coeffs.add_argument("--orbifold", choices=("333", "236", "244"))
    p_coeffs.add_argument("--series", required=True, help="f0/f1, h0..h9, g0..g4, or F, G, eta, theta2, theta3")
    p_coeffs.add_argument("--include-degree-zero", action="store_true", help="add the degree-0 constant to g2")
    common(p_coeffs)
    p_coeffs.set_defaults(func=_cmd_coeffs)

    p_verify = sub.add_parser("verify", help="run one named consistency check")
    p_verify.add_argument("--check", required=True, help=", ".join(CHECK_NAMES))
    common(p_verify, with_format=False)
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="print a full cubic-coefficient catalog")
    p_table.add_argument("--orbifold", choices=("333", "236", "244"), help="default: all three")
    p_table.add_argument("--include-degree-zero", action="store_true")
    common(p_table)
    p_table.set_defaults(func=_cmd_table)
    return parser


def main(argv: Optional[list[str]] = None, out=None, err=None) -> int:
    args = _build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
