"""Command-line front end.

    numrad radius A.json
    numrad bounds A.json --json report.json
    numrad diagnose A.json --tol 1e-7
    numrad commutator A.json B.json [--x X.json --y Y.json]
    numrad range A.json --points 360 > boundary.csv
    numrad fuzz --kind gaussian --dims 2..8 --count 200 --seed 42

Exit status is 0 on success, 1 when a checked invariant fails (or a
computation cannot be trusted), and 2 for usage or input errors.
"""

import argparse
import csv
import dataclasses
import json
import math
import sys

import numpy as np

from . import __version__, config
from .bounds import bounds_report, cartesian_data
from .commutator import commutator_report
from .diagnostics import check_half_norm_equality, check_kittaneh_equality, circular_disk_report
from .ensembles import KINDS, EnsembleSpec
from .fuzz import run as run_fuzz
from .linalg import ConvergenceError, InvariantViolation, LinalgError
from .matrixfile import MatrixFileError, parse_matrix
from .numrange import crawford_number, numerical_radius, range_boundary

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

KIND_ALIASES = {"nilpotent": "nilpotent-jordan", "normal": "normal-random", "skew": "skew-hermitian"}


class UsageError(Exception):
    pass


def fmt(x):
    """9 significant digits for human-readable output."""
    if isinstance(x, bool) or x is None:
        return str(x)
    if isinstance(x, complex):
        return f"{x.real:.9g}{x.imag:+.9g}i"
    return f"{x:.9g}"


def jsonable(obj):
    """Plain JSON types; complex numbers become [re, im] pairs."""
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, tuple) and hasattr(obj, "_fields"):
        return {k: jsonable(v) for k, v in zip(obj._fields, obj)}
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def write_json(path, doc):
    if path is None:
        return
    text = json.dumps(jsonable(doc), sort_keys=True, indent=2, allow_nan=False)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")


def table(rows, out=None):
    out = out or sys.stdout
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"  {key:<{width}}  {value if isinstance(value, str) else fmt(value)}", file=out)


def load(path):
    try:
        return parse_matrix(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except MatrixFileError as exc:
        raise UsageError(str(exc)) from None


def parse_dims(text):
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError(f"bad dimension range {text!r}")
    return lo, hi


def positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError("must be positive and finite")
    return value


def grid_size(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 16:
        raise argparse.ArgumentTypeError("must be at least 16")
    return value


def seed_value(text):
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def kinds(values):
    if not values:
        return list(KINDS)
    out = []
    for value in values:
        for name in filter(None, (v.strip() for v in value.split(","))):
            name = KIND_ALIASES.get(name, name)
            if name == "all":
                return list(KINDS)
            if name not in KINDS:
                raise UsageError(f"unknown kind {name!r}; choose from {', '.join(KINDS)}")
            if name not in out:
                out.append(name)
    return out


# subcommands


def cmd_radius(args):
    A = load(args.matrix)
    res = numerical_radius(A, grid=args.grid)
    d = cartesian_data(A)
    slack = config.CHAIN_SLACK
    problems = []
    if not d.norm / 2.0 <= res.w + slack * max(1.0, res.w):
        problems.append("||A||/2 <= w")
    if not res.w <= d.norm + slack * max(1.0, d.norm):
        problems.append("w <= ||A||")
    rho = float(np.max(np.abs(np.linalg.eigvals(A))))
    normal = d.diff_norm <= args.tol * max(1.0, d.norm**2)
    if normal and abs(res.w - rho) > args.tol * max(1.0, rho):
        problems.append("w = spectral radius for normal A")
    print(f"numerical radius of {args.matrix} ({A.shape[0]}x{A.shape[0]})")
    table([
        ("w", res.w),
        ("theta_star", res.theta_star),
        ("norm", d.norm),
        ("norm/2", d.norm / 2.0),
        ("spectral_radius", rho),
        ("normal", str(normal)),
    ])
    doc = dict(jsonable(res), norm=d.norm, spectral_radius=rho, normal=normal, violations=problems)
    write_json(args.json, doc)
    return _verdict(problems)


def cmd_bounds(args):
    A = load(args.matrix)
    rep = bounds_report(A, grid=args.grid)
    print(f"lower bounds for w(A), A = {args.matrix} ({A.shape[0]}x{A.shape[0]})")
    rows = [
        ("norm", rep.norm),
        ("w", rep.w),
        ("re_norm", rep.re_norm),
        ("im_norm", rep.im_norm),
        ("c_re", rep.c_re),
        ("c_im", rep.c_im),
        ("classical_lo", rep.classical_lo),
        ("b_gap", rep.b_gap),
    ]
    for name in ("kittaneh_sq", "b_sq_gap", "b_bp", "b_crawford"):
        v = getattr(rep, name)
        rows.append((name, f"{fmt(v)}  (sqrt {fmt(math.sqrt(v))})"))
    for name in ("b4_first", "b4_second", "b4_bag5", "b4_bhunia"):
        v = getattr(rep, name)
        rows.append((name, f"{fmt(v)}  (4th root {fmt(v ** 0.25)})"))
    rows.append(("chain_ok", str(rep.chain_ok)))
    table(rows)
    for name in rep.violations:
        print(f"  VIOLATION: {name}")
    doc = jsonable(rep)
    doc["rooted"] = {
        **{n: math.sqrt(getattr(rep, n)) for n in ("kittaneh_sq", "b_sq_gap", "b_bp", "b_crawford")},
        **{n: getattr(rep, n) ** 0.25 for n in ("b4_first", "b4_second", "b4_bag5", "b4_bhunia")},
    }
    write_json(args.json, doc)
    return _verdict(rep.violations)


def cmd_diagnose(args):
    A = load(args.matrix)
    half = check_half_norm_equality(A, args.tol)
    kit = check_kittaneh_equality(A, args.tol)
    problems = []
    try:
        disk = circular_disk_report(A, args.tol, grid=args.grid)
    except InvariantViolation as exc:
        disk = None
        problems.append(str(exc))
    crawford = crawford_number(A, grid=args.grid)
    print(f"equality-case diagnostics for {args.matrix}, tol={fmt(args.tol)}")
    for label, rep, case in (("w = ||A||/2", half, half.case_half_norm),
                             ("w^2 = ||A*A + AA*||/4", kit, kit.case_kittaneh)):
        print(f" {label}: {'holds' if case else 'does not hold'}")
        if case:
            table([
                ("theta_profile_ok", str(rep.theta_profile_ok)),
                ("norms_match", str(rep.norms_match)),
                ("norm_identity_ok", str(rep.norm_identity_ok)),
                ("disk_ok", str(rep.disk_ok)),
                ("witnesses_ok", str(rep.witnesses_ok)),
            ])
            if not rep.consistent:
                problems.append(f"consequences of {label} fail")
    if disk is not None:
        print(" disk test:")
        table([
            ("disk", str(disk.disk)),
            ("radius", disk.radius),
            ("matches_half_norm", str(disk.matches_half_norm)),
            ("matches_kittaneh", str(disk.matches_kittaneh)),
        ])
    print(f" crawford number: {fmt(crawford.c)}")
    for p in problems:
        print(f"  VIOLATION: {p}")
    write_json(args.json, {
        "half_norm": half,
        "kittaneh": kit,
        "disk": disk,
        "crawford": crawford,
        "violations": problems,
    })
    return _verdict(problems)


def cmd_commutator(args):
    if (args.x is None) != (args.y is None):
        raise UsageError("--x and --y must be given together")
    A, B = load(args.a), load(args.b)
    X = load(args.x) if args.x else None
    Y = load(args.y) if args.y else None
    rep = commutator_report(A, B, X, Y, grid=args.grid)
    print(f"upper bounds for w(AB +/- BA), A = {args.a}, B = {args.b}")
    print(f"  {'':<14}{'bound':>16}{'true w(+)':>16}{'true w(-)':>16}")
    rows = [("corth2", rep.b_corth2), ("corth3_first", rep.b_corth3_first),
            ("corth3_second", rep.b_corth3_second), ("hk", rep.b_hk), ("fong", rep.b_fong)]
    if X is not None:
        print(f"  {'th2 (X, Y)':<14}{fmt(rep.b_th2):>16}{fmt(rep.w_th2_plus):>16}{fmt(rep.w_th2_minus):>16}")
    for name, bound in rows:
        print(f"  {name:<14}{fmt(bound):>16}{fmt(rep.w_true_plus):>16}{fmt(rep.w_true_minus):>16}")
    print(f"  nu = {fmt(rep.nu)}, chain_ok = {rep.chain_ok}")
    for name in rep.violations:
        print(f"  VIOLATION: {name}")
    write_json(args.json, rep)
    return _verdict(rep.violations)


def cmd_range(args):
    A = load(args.matrix)
    prof = range_boundary(A, args.points)
    out = open(args.output, "w", newline="", encoding="utf-8") if args.output else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["theta", "re", "im", "part_norm"])
        for s in prof.samples:
            z = s.boundary_point
            writer.writerow([repr(s.theta), repr(z.real), repr(z.imag), repr(s.part_norm)])
    finally:
        if out is not sys.stdout:
            out.close()
    if args.output:
        print(f"wrote {len(prof.samples)} boundary samples of W({args.matrix}) to {args.output}")
    write_json(args.json, prof)
    return EXIT_OK


def cmd_fuzz(args):
    specs = [EnsembleSpec(k, args.dims, args.count, args.seed) for k in kinds(args.kind)]

    def progress(kind, dim, done, failures):
        print(f"  {kind:<17} n={dim:<3} matrices={done:<6} failures={failures}", flush=True)

    print(f"fuzz: kinds={','.join(s.kind for s in specs)} dims={args.dims[0]}..{args.dims[1]} "
          f"count={args.count} seed={args.seed}")
    res = run_fuzz(specs, grid=args.grid, tol=args.tol, th2_every=args.th2_every,
                   jobs=args.jobs, progress=progress)
    for f in res.failures:
        print(f.artifact())
    verdict = "ok" if res.ok else "FAILED"
    print(f"{verdict}: {res.matrices} matrices, {res.checks} checks, "
          f"{len(res.failures)} failures in {res.elapsed:.1f} s")
    write_json(args.json, {
        "kinds": [s.kind for s in specs],
        "dims": list(args.dims),
        "count": args.count,
        "seed": args.seed,
        "matrices": res.matrices,
        "checks": res.checks,
        "failures": [
            {"kind": f.kind, "dim": f.dim, "index": f.index, "check": f.check, "detail": f.detail,
             "matrices": {role: M for role, M in f.matrices}}
            for f in res.failures
        ],
    })
    return EXIT_OK if res.ok else EXIT_VIOLATION


def _verdict(problems):
    return EXIT_VIOLATION if problems else EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=positive_float, default=config.CHECK_TOL,
                        help="relative tolerance for equality checks (default 1e-8)")
    common.add_argument("--grid", type=grid_size, default=config.RADIUS_GRID,
                        help="theta grid size (default 720)")
    common.add_argument("--json", metavar="PATH", help="also write a JSON report to PATH")

    p = argparse.ArgumentParser(prog="numrad", description="Numerical radius, numerical range and related bounds.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("radius", parents=[common], help="numerical radius w(A)")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_radius)

    s = sub.add_parser("bounds", parents=[common], help="all lower bounds for w(A)")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("diagnose", parents=[common], help="equality cases and disk test")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_diagnose)

    s = sub.add_parser("commutator", parents=[common], help="upper bounds for w(AB +/- BA)")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--x", metavar="PATH", help="X for the w(AXB +/- BYA) bound")
    s.add_argument("--y", metavar="PATH", help="Y for the w(AXB +/- BYA) bound")
    s.set_defaults(func=cmd_commutator)

    s = sub.add_parser("range", parents=[common], help="boundary of W(A) as CSV")
    s.add_argument("matrix")
    s.add_argument("--points", type=grid_size, default=config.BOUNDARY_POINTS,
                   help="number of boundary samples (default 360)")
    s.add_argument("-o", "--output", metavar="PATH", help="write the CSV here instead of stdout")
    s.set_defaults(func=cmd_range)

    s = sub.add_parser("fuzz", parents=[common], help="random-ensemble invariant sweep")
    s.add_argument("--kind", action="append", help=f"ensemble kind(s), repeatable or comma-separated: "
                                                   f"{', '.join(KINDS)} (default: all)")
    s.add_argument("--dims", type=parse_dims, default=(2, 8), help="dimension range a..b (default 2..8)")
    s.add_argument("--count", type=int, default=200, help="matrices per dimension (default 200)")
    s.add_argument("--seed", type=seed_value, default=0, help="64-bit seed (default 0)")
    s.add_argument("--th2-every", type=int, default=4,
                   help="draw X, Y for the w(AXB +/- BYA) check on every k-th sample; 0 disables")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    s.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "count", 0) < 0 or getattr(args, "jobs", 1) < 1 or getattr(args, "th2_every", 0) < 0:
        parser.error("--count and --th2-every must be nonnegative, --jobs at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"numrad: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LinalgError as exc:
        print(f"numrad: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvariantViolation, ConvergenceError) as exc:
        print(f"numrad: invariant violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except OSError as exc:
        print(f"numrad: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
