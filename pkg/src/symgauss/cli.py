"""Command-line interface.

Verbs: validate, spectrum, negativity, hierarchy, sweep, verify.  Exit
codes: 0 success, 1 semantic failure (unphysical state, verification
failure), 2 usage or parse error.  All output is deterministic given the
flags; files are written atomically (temp file + rename).
"""

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile

from .core import (
    CovarianceMatrix,
    log_negativity_numeric,
    partial_transpose,
    symplectic_spectrum_numeric,
    validate,
)
from .entanglement import LN2
from .exceptions import SymGaussError
from .ghz import GhzSpec, ghz_hierarchy, ghz_limit, scaling_table, sweep_records
from .verify import DEFAULT_TOLERANCE, cross_validate

HIERARCHY_FIELDS = ("k", "E_N", "n_tilde_minus", "limit")
SWEEP_FIELDS = ("n", "e_1x1", "e_1xNm1", "e_1xN")
GRID_FIELDS = ("b", "n_total", "k", "E_N", "n_tilde_minus")


def _sanitize(obj):
    """Make values JSON-safe; infinities become the string 'inf'."""
    if isinstance(obj, dict):
        return {key: _sanitize(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(val) for val in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "inf" if obj > 0 else "-inf"
    return obj


def _render(rows, fields, fmt):
    if fmt == "json":
        return json.dumps(_sanitize(rows), indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([row[name] for name in fields])
    return buf.getvalue()


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_cell(text):
    try:
        return float(text)
    except ValueError:
        return text


def load_records(path, fmt=None):
    """Read back a rows file produced by hierarchy/sweep (JSON or CSV)."""
    if fmt is None:
        fmt = "csv" if str(path).endswith(".csv") else "json"
    with open(path, "r", encoding="utf-8") as fh:
        if fmt == "json":
            rows = json.loads(fh.read())
        else:
            rows = [dict(row) for row in csv.DictReader(fh)]
            rows = [{k: _parse_cell(v) for k, v in row.items()} for row in rows]
    for row in rows:
        for key, val in row.items():
            if val == "inf":
                row[key] = float("inf")
            elif val == "-inf":
                row[key] = float("-inf")
    return rows


def _cmd_validate(args):
    report = validate(CovarianceMatrix.load(args.cm_file))
    print(json.dumps(_sanitize(report.to_dict()), indent=2))
    return 0 if report.is_physical else 1


def _cmd_spectrum(args):
    spectrum = symplectic_spectrum_numeric(CovarianceMatrix.load(args.cm_file))
    print(json.dumps({"n_modes": spectrum.n_modes, "values": list(spectrum.values)}, indent=2))
    return 0


def _cmd_negativity(args):
    cm = CovarianceMatrix.load(args.cm_file)
    value = log_negativity_numeric(cm, args.transposed)
    n_min = symplectic_spectrum_numeric(partial_transpose(cm, args.transposed)).min
    shown = value / LN2 if args.bits else value
    print(
        json.dumps(
            {
                "E_N": shown,
                "units": "bits" if args.bits else "nats",
                "n_tilde_minus": n_min,
                "entangled": bool(n_min < 1.0),
            },
            indent=2,
        )
    )
    return 0


def _cmd_hierarchy(args):
    spec = GhzSpec(b=args.b, total_modes=args.modes)
    scale = 1.0 / LN2 if args.bits else 1.0
    rows = []
    for k, res in ghz_hierarchy(spec):
        limit = ghz_limit(k, spec.total_modes - 1)
        rows.append(
            {
                "k": k,
                "E_N": res.value * scale,
                "n_tilde_minus": res.n_tilde_minus,
                "limit": limit * scale if math.isfinite(limit) else limit,
            }
        )
    _emit(_render(rows, HIERARCHY_FIELDS, args.format), args.out)
    return 0


def _cmd_sweep(args):
    if not 2 <= args.n_min <= args.n_max <= 50:
        raise ValueError(
            f"need 2 <= n-min <= n-max <= 50, got [{args.n_min}, {args.n_max}]"
        )
    if args.full_grid:
        rows = sweep_records(
            b_values=[args.b], n_totals=range(args.n_min + 1, args.n_max + 2)
        )
        fields = GRID_FIELDS
    else:
        rows = [
            row.to_dict()
            for row in scaling_table(args.b, range(args.n_min, args.n_max + 1))
        ]
        fields = SWEEP_FIELDS
    _emit(_render(rows, fields, args.format), args.out)
    return 0


def _cmd_verify(args):
    tolerance = float(os.environ.get("NEG_TOL", DEFAULT_TOLERANCE))
    report = cross_validate(
        corpus_size=args.corpus,
        seed=args.seed,
        tolerance=tolerance,
        replay_path=args.replay,
    )
    for name, residual in report.max_residuals.items():
        print(f"{name:32s} max residual {residual:.3e}")
    if report.passed:
        print(f"PASS (corpus={report.corpus_size}, seed={report.seed}, tol={tolerance:g})")
        return 0
    print(
        f"FAIL ({len(report.failures)} failures; replay written to {args.replay})",
        file=sys.stderr,
    )
    return 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symgauss",
        description=(
            "Symplectic spectra and exact 1xK logarithmic negativity for "
            "symmetric multimode Gaussian states."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check a covariance-matrix JSON file")
    p.add_argument("cm_file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("spectrum", help="numeric symplectic spectrum of a CM file")
    p.add_argument("cm_file")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("negativity", help="numeric log-negativity of a CM file")
    p.add_argument("cm_file")
    p.add_argument(
        "--transposed",
        type=int,
        nargs="+",
        default=[0],
        help="mode indices to partially transpose (default: 0)",
    )
    p.add_argument("--bits", action="store_true", help="display in bits instead of nats")
    p.set_defaults(func=_cmd_negativity)

    p = sub.add_parser(
        "hierarchy", help="1xK entanglement cascade of a pure symmetric state"
    )
    p.add_argument("--b", type=float, required=True, help="single-mode parameter, >= 1")
    p.add_argument("--modes", type=int, required=True, help="total mode count, >= 2")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--bits", action="store_true", help="display in bits instead of nats")
    p.set_defaults(func=_cmd_hierarchy)

    p = sub.add_parser(
        "sweep", help="scaling of the 1x1 / 1x(N-1) / 1xN negativities with N"
    )
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--n-min", type=int, required=True, dest="n_min")
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument(
        "--full-grid",
        action="store_true",
        help="emit every (N, K) hierarchy row instead of the three-column table",
    )
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="cross-validate closed forms on a random corpus")
    p.add_argument("--corpus", type=int, default=1000)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument(
        "--replay",
        default="symgauss-replay.jsonl",
        help="where to write failing states (JSON lines)",
    )
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SymGaussError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
