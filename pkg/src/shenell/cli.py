"""Command line front end.

Usage:
    shenell invariants --k 0.5 [--json]
    shenell periods --k 0.5 [--json]
    shenell eval --k 0.5 --fn d --real 0.4 --imag 0.2 [--json]
    shenell verify --k 0.1,0.5,0.9 --suite all [--tol 1e-9] [--json]
    shenell sample --k 0.5 --fn d --real 0:0.1:1 [--imag 0:0.2:1] [--out grid.csv]

Grid specs are ``start:step:stop`` (inclusive) or a single number; specs
with a negative start need the ``--real=-1:0.5:1`` form so the shell
parser does not read them as flags. Numeric output uses the shortest
representation that round-trips a double, so re-emitting parsed output
reproduces it byte for byte.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
The SHEN_DEFAULT_TOL environment variable overrides the generic default
tolerance (1e-9) of ``verify``; an explicit --tol overrides everything.
"""

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from .exceptions import PoleError, ShenError
from .field import (ShenContext, c_squared, d_complex, s_squared, sc_product)
from .verify import VerificationReport, available_suites, run_suites
from .weierstrass import invariants_of_modulus, lattice_of_invariants, wp

_FUNCTIONS = {
    "d": d_complex,
    "s2": s_squared,
    "c2": c_squared,
    "sc": sc_product,
    "wp": lambda ctx, z: wp(z, ctx.inv, ctx.lat),
}


class UsageError(ValueError):
    """Malformed command-line input; maps to exit code 2."""


def fmt(x: float) -> str:
    """Shortest round-trip decimal form of a double."""
    return repr(float(x))


def parse_k_list(text):
    try:
        values = [float(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise UsageError(f"bad modulus list {text!r}") from exc
    if not values:
        raise UsageError("empty modulus list")
    return values


def parse_grid(spec):
    """``start:step:stop`` inclusive of both ends, or a single number."""
    if spec is None or spec == "":
        raise UsageError("empty grid spec")
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) != 3:
            raise UsageError(f"grid spec {spec!r} is not start:step:stop")
        start, step, stop = (float(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"bad number in grid spec {spec!r}") from exc
    if step == 0.0:
        if start == stop:
            return [start]
        raise UsageError(f"zero step in grid spec {spec!r}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    if count < 1:
        raise UsageError(f"grid spec {spec!r} produces no points")
    return [start + i * step for i in range(count)]


@dataclass
class SampleGrid:
    """Function samples over a separable complex grid.

    ``rows`` holds (re_z, im_z, re_f, im_f, is_pole) tuples in row-major
    order with the real axis fastest; pole rows carry None in the value
    slots. The row count always equals len(re_axis) * len(im_axis).
    """

    k: float
    function: str
    re_axis: list
    im_axis: list
    rows: list


def build_sample_grid(k, function, re_axis, im_axis) -> SampleGrid:
    if function not in _FUNCTIONS:
        raise UsageError(f"unknown function {function!r}; choose from "
                         f"{', '.join(sorted(_FUNCTIONS))}")
    ctx = ShenContext.from_modulus(k)
    fn = _FUNCTIONS[function]
    rows = []
    for im in im_axis:
        for re in re_axis:
            z = complex(re, im)
            try:
                value = complex(fn(ctx, z))
                if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                    raise PoleError(f"non-finite value at z={z!r}")
                rows.append((re, im, value.real, value.imag, 0))
            except PoleError:
                rows.append((re, im, None, None, 1))
    return SampleGrid(k=k, function=function, re_axis=list(re_axis),
                      im_axis=list(im_axis), rows=rows)


def sample_grid_to_csv(grid: SampleGrid) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["re_z", "im_z", "re_f", "im_f", "is_pole"])
    for re, im, ref, imf, pole in grid.rows:
        if pole:
            writer.writerow([fmt(re), fmt(im), "", "", "1"])
        else:
            writer.writerow([fmt(re), fmt(im), fmt(ref), fmt(imf), "0"])
    return out.getvalue()


def sample_grid_rows_from_csv(text: str):
    """Parse rows emitted by :func:`sample_grid_to_csv` back into numbers."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["re_z", "im_z", "re_f", "im_f", "is_pole"]:
        raise UsageError(f"unexpected CSV header {header!r}")
    rows = []
    for record in reader:
        re, im, ref, imf, pole = record
        if pole == "1":
            rows.append((float(re), float(im), None, None, 1))
        else:
            rows.append((float(re), float(im), float(ref), float(imf), 0))
    return rows


def rows_to_csv(rows) -> str:
    grid = SampleGrid(k=0.0, function="", re_axis=[], im_axis=[], rows=rows)
    return sample_grid_to_csv(grid)


def sample_grid_to_json(grid: SampleGrid) -> str:
    payload = {
        "k": grid.k,
        "fn": grid.function,
        "re_axis": list(grid.re_axis),
        "im_axis": list(grid.im_axis),
        "rows": [list(row) for row in grid.rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def sample_grid_from_json(text: str) -> SampleGrid:
    payload = json.loads(text)
    return SampleGrid(k=payload["k"], function=payload["fn"],
                      re_axis=payload["re_axis"], im_axis=payload["im_axis"],
                      rows=[tuple(row) for row in payload["rows"]])


def reports_to_json(reports) -> str:
    payload = [
        {
            "identity": r.identity_name,
            "k": r.k,
            "samples": r.samples,
            "max_residual": r.max_residual,
            "tolerance": r.tolerance,
            "passed": r.passed,
        }
        for r in reports
    ]
    return json.dumps(payload, indent=2) + "\n"


def reports_from_json(text: str):
    return [
        VerificationReport(identity_name=item["identity"], k=item["k"],
                           samples=item["samples"],
                           max_residual=item["max_residual"],
                           tolerance=item["tolerance"], passed=item["passed"])
        for item in json.loads(text)
    ]


def reports_to_text(reports) -> str:
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.identity_name:<20} k={fmt(r.k):<22} "
                     f"samples={r.samples:<4} max_residual={fmt(r.max_residual)} "
                     f"tol={fmt(r.tolerance)}")
    return "\n".join(lines) + "\n"


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _single_k(args):
    ks = parse_k_list(args.k)
    if len(ks) != 1:
        raise UsageError("this subcommand takes exactly one --k value")
    return ks[0]


def cmd_invariants(args) -> int:
    k = _single_k(args)
    inv = invariants_of_modulus(k)
    if args.json:
        text = json.dumps({"g2": inv.g2, "g3": inv.g3, "delta": inv.delta},
                          indent=2) + "\n"
    else:
        text = (f"g2    = {fmt(inv.g2)}\n"
                f"g3    = {fmt(inv.g3)}\n"
                f"delta = {fmt(inv.delta)}\n")
    _emit(text, args.out)
    return 0


def cmd_periods(args) -> int:
    k = _single_k(args)
    lat = lattice_of_invariants(invariants_of_modulus(k))
    fields = {"K": lat.K, "K_prime": lat.K_prime,
              "e1": lat.e1, "e2": lat.e2, "e3": lat.e3}
    if args.json:
        text = json.dumps(fields, indent=2) + "\n"
    else:
        text = "".join(f"{name:<8}= {fmt(value)}\n" for name, value in fields.items())
    _emit(text, args.out)
    return 0


def cmd_eval(args) -> int:
    k = _single_k(args)
    if args.fn not in _FUNCTIONS:
        raise UsageError(f"unknown function {args.fn!r}; choose from "
                         f"{', '.join(sorted(_FUNCTIONS))}")
    re_axis = parse_grid(args.real if args.real is not None else "0")
    im_axis = parse_grid(args.imag if args.imag is not None else "0")
    if len(re_axis) != 1 or len(im_axis) != 1:
        raise UsageError("eval takes a single point; use sample for grids")
    grid = build_sample_grid(k, args.fn, re_axis, im_axis)
    re, im, ref, imf, pole = grid.rows[0]
    if args.json:
        text = json.dumps({"re_z": re, "im_z": im, "re_f": ref, "im_f": imf,
                           "is_pole": pole}, indent=2) + "\n"
    elif pole:
        text = f"{args.fn}({fmt(re)} + {fmt(im)}i) = pole\n"
    else:
        text = f"{args.fn}({fmt(re)} + {fmt(im)}i) = {fmt(ref)} + {fmt(imf)}i\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    ks = parse_k_list(args.k)
    if args.suite == "all":
        names = available_suites()
    else:
        names = [part for part in args.suite.split(",") if part != ""]
        unknown = [n for n in names if n not in available_suites()]
        if unknown or not names:
            raise UsageError(f"unknown suite {','.join(unknown) or args.suite!r}; "
                             f"choose from all, {', '.join(available_suites())}")
    reports = run_suites(names, ks, tol=args.tol)
    text = reports_to_json(reports) if args.json else reports_to_text(reports)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_sample(args) -> int:
    k = _single_k(args)
    if args.real is None and args.imag is None:
        raise UsageError("sample needs --real and/or --imag grid specs")
    re_axis = parse_grid(args.real if args.real is not None else "0")
    im_axis = parse_grid(args.imag if args.imag is not None else "0")
    grid = build_sample_grid(k, args.fn, re_axis, im_axis)
    text = sample_grid_to_json(grid) if args.json else sample_grid_to_csv(grid)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shenell",
        description="Shen's hypergeometric elliptic functions, modulus k in (0, 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fn=False, tol=False, suite=False):
        p.add_argument("--k", required=True,
                       help="modulus in (0, 1); comma list for verify")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--out", default=None, help="write output to a file")
        if fn:
            p.add_argument("--fn", default="d",
                           help="function: d, s2, c2, sc or wp")
            p.add_argument("--real", default=None,
                           help="real axis: start:step:stop or a number")
            p.add_argument("--imag", default=None,
                           help="imaginary axis: start:step:stop or a number")
        if tol:
            p.add_argument("--tol", type=float, default=None,
                           help="tolerance override for every selected suite")
        if suite:
            p.add_argument("--suite", default="all",
                           help=f"all or a comma list of: {', '.join(available_suites())}")

    common(sub.add_parser("invariants", help="print g2, g3, delta"))
    common(sub.add_parser("periods", help="print K, K', e1, e2, e3"))
    common(sub.add_parser("eval", help="evaluate one function at one point"), fn=True)
    common(sub.add_parser("verify", help="run identity suites"), tol=True, suite=True)
    common(sub.add_parser("sample", help="sample a function over a grid"), fn=True)
    return parser


_COMMANDS = {
    "invariants": cmd_invariants,
    "periods": cmd_periods,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "sample": cmd_sample,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ShenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
