"""Command-line front end.

Values are printed with 12 significant digits; magnitudes below 1e-12 print
as ``0``. Exit codes: 0 success, 1 suite failure, 2 bad flags, 3 bad input.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import divergences as dv
from .channels import KrausChannel, classify
from .coherence import Measure, MeasureId, coherence, dephase_alpha
from .errors import CoherenceError
from .fileformats import parse_kraus, parse_matrix
from .harness.figures import FIGURES, QUOTED_ALPHA, reproduce_figure, scan_to_csv
from .harness.oracle import closest_incoherent_oracle
from .harness.suites import SUITES, run_suite
from .linalg import validate_density

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    """Unreadable or invalid input file; reported on one line with exit 3."""


def fmt(x: float) -> str:
    x = float(x)
    if np.isfinite(x) and abs(x) < 1e-12:
        return "0"
    return f"{x:.12g}"


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_state(path: str, tol: float):
    try:
        return validate_density(parse_matrix(_read_text(path)), tol)
    except CoherenceError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_channel(path: str, tol: float) -> KrausChannel:
    try:
        return KrausChannel(tuple(parse_kraus(_read_text(path))), tol)
    except CoherenceError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _catalog_f(name: str | None, alpha: float):
    if name is None or name == "neg_log":
        return dv.neg_log()
    return dv.tsallis_f(alpha)


def cmd_entropy(args, out):
    rho = _load_state(args.inp, args.tol)
    if args.family == "vn":
        v = dv.von_neumann_entropy(rho)
    elif args.family == dv.TSALLIS:
        v = dv.tsallis_entropy(rho, args.alpha)
    else:
        v = dv.renyi_entropy(rho, args.alpha)
    print(fmt(v), file=out)
    return EXIT_OK


def cmd_coherence(args, out):
    rho = _load_state(args.inp, args.tol)
    tag = Measure(args.measure)
    if tag is Measure.C_F:
        mid = MeasureId(tag, f=_catalog_f(args.f, args.alpha), variant=args.variant)
    elif tag in (Measure.C_REL, Measure.C_HS):
        mid = MeasureId(tag)
    else:
        mid = MeasureId(tag, alpha=args.alpha)
    print(fmt(coherence(rho, mid)), file=out)
    return EXIT_OK


def cmd_closest(args, out):
    rho = _load_state(args.inp, args.tol)
    dv.check_alpha(args.alpha, args.family)
    state, n = dephase_alpha(rho, args.alpha)
    rel = dv.tsallis_relative_entropy if args.family == dv.TSALLIS else dv.renyi_relative_entropy
    value = rel(rho, state.matrix(), args.alpha)
    print("delta_alpha " + " ".join(fmt(p) for p in state.probs), file=out)
    print(f"normalization {fmt(n)}", file=out)
    print(f"divergence {fmt(value)}", file=out)
    if args.oracle:
        best, best_val = closest_incoherent_oracle(rho, args.alpha, args.family, args.resolution, seed=args.seed)
        print("oracle " + " ".join(fmt(p) for p in best.probs), file=out)
        print(f"oracle_divergence {fmt(best_val)}", file=out)
        print(f"gap {fmt(np.sum(np.abs(best.probs - state.probs)))}", file=out)
        print(f"value_gap {fmt(abs(best_val - value))}", file=out)
    return EXIT_OK


def cmd_channel(args, out):
    ch = _load_channel(args.inp, args.tol)
    alphas = [] if args.alpha is None else [args.alpha]
    cls = classify(ch, alphas, trials=args.trials, seed=args.seed)
    for key in ("is_io", "is_sio", "is_dio", "is_gio"):
        print(f"{key} {str(getattr(cls, key)).lower()}", file=out)
    if args.alpha is not None:
        status = "n/a" if not cls.is_gio else str(cls.alpha_gio[float(args.alpha)]).lower()
        print(f"alpha_gio[{args.alpha:g}] {status}", file=out)
    return EXIT_OK


def cmd_check(args, out):
    result = run_suite(args.suite, args.trials, args.dim, args.seed)
    print("\n".join(result.lines()), file=out)
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_figure(args, out):
    grid = None
    if args.grid is not None:
        if args.grid < 2:
            raise CoherenceError("--grid needs at least 2 points")
        grid = np.linspace(0.05, 1.95, args.grid)
        grid = np.union1d(grid[np.abs(grid - 1.0) > 1e-3], [QUOTED_ALPHA[args.which]])
    records = reproduce_figure(args.which, grid, b=args.b)
    if args.out == "-":
        scan_to_csv(records, out)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            scan_to_csv(records, fh)
        n_viol = sum(r.violated for r in records)
        print(f"wrote {len(records)} rows to {args.out} ({n_viol} violated)", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--tol", type=float, default=1e-9, help="validation tolerance for input matrices")

    p = argparse.ArgumentParser(prog="qcoherence", description="Alpha-coherence numerics and counterexample checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("entropy", parents=[common], help="entropy of a density matrix")
    s.add_argument("--in", dest="inp", default="-")
    s.add_argument("--family", choices=(dv.TSALLIS, dv.RENYI, "vn"), default="vn")
    s.add_argument("--alpha", type=float, default=0.5)
    s.set_defaults(func=cmd_entropy)

    s = sub.add_parser("coherence", parents=[common], help="coherence measure of a density matrix")
    s.add_argument("--in", dest="inp", default="-")
    s.add_argument("--measure", choices=[m.value for m in Measure], default=Measure.CT_NEW.value)
    s.add_argument("--alpha", type=float, default=0.5)
    s.add_argument("--f", choices=("neg_log", "tsallis_f"), default="neg_log",
                   help="catalog function for c_f; tsallis_f uses --alpha")
    s.add_argument("--variant", type=int, choices=(1, 2), default=1)
    s.set_defaults(func=cmd_coherence)

    s = sub.add_parser("closest", parents=[common], help="closest incoherent state")
    s.add_argument("--in", dest="inp", default="-")
    s.add_argument("--alpha", type=float, default=0.5)
    s.add_argument("--family", choices=(dv.TSALLIS, dv.RENYI), default=dv.TSALLIS)
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--resolution", type=float, default=1e-3)
    s.set_defaults(func=cmd_closest)

    s = sub.add_parser("channel", help="channel utilities")
    csub = s.add_subparsers(dest="action", required=True)
    c = csub.add_parser("classify", parents=[common], help="IO/SIO/DIO/GIO flags of a Kraus file")
    c.add_argument("--in", dest="inp", default="-")
    c.add_argument("--alpha", type=float, default=None)
    c.add_argument("--trials", type=int, default=100)
    c.set_defaults(func=cmd_channel)

    s = sub.add_parser("check", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=tuple(SUITES))
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--dim", type=int, default=3)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("figure", parents=[common], help="alpha scan of a counterexample setup as CSV")
    s.add_argument("which", choices=FIGURES)
    s.add_argument("--b", type=float, default=0.9)
    s.add_argument("--grid", type=int, default=None, help="number of uniform alpha points (default 101)")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_figure)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "trials", 1) < 1 or getattr(args, "dim", 2) < 2:
        print("qcoherence: error: --trials must be >= 1 and --dim >= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"qcoherence: {exc}".replace("\n", " "), file=sys.stderr)
        return EXIT_INPUT
    except CoherenceError as exc:
        print(f"qcoherence: error: {exc}".replace("\n", " "), file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
