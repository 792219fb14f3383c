"""Command-line interface.

Subcommands: decompose, boundary, cloud, verify, extremal, sweep.
Exit codes: 0 success, 1 config or I/O error, 2 invalid state,
3 internal soundness violation (a generated state breaking a bound).
"""

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds, extremal, fileio, imaginarity, sampling, state, transform
from . import verify as verify_mod
from .errors import SpecViolation, StateValidationError

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INVALID_STATE = 2
EXIT_SOUNDNESS = 3


class ConfigError(Exception):
    pass


def _env_seed():
    raw = os.environ.get("QBG_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"QBG_SEED must be an integer, got {raw!r}") from exc


def _common_flags(p):
    p.add_argument("--seed", type=int, default=None,
                   help="random seed (default: QBG_SEED env var, then 0)")
    p.add_argument("--psd-tol", type=float, default=state.DEFAULT_PSD_TOL)
    p.add_argument("--herm-tol", type=float, default=state.DEFAULT_HERM_TOL)
    p.add_argument("--out", type=Path, default=None, help="output path")
    p.add_argument("--format", choices=("csv", "json", "svg"), default=None)
    p.add_argument("--plot", type=Path, nargs="?", const=True, default=None,
                   metavar="PNG",
                   help="also render a matplotlib figure (default: <out>.png)")


def _tolerances(args):
    return state.Tolerances(herm_tol=args.herm_tol, psd_tol=args.psd_tol)


def _seed(args):
    if args.seed is not None:
        if args.seed < 0:
            raise ConfigError("seed must be nonnegative")
        return args.seed
    return _env_seed()


def _require_out(args):
    if args.out is None:
        raise ConfigError("--out is required for this command")
    return args.out


def _plot_path(args):
    if args.plot is None:
        return None
    if args.plot is True:
        if args.out is None:
            raise ConfigError("--plot without a path requires --out")
        return args.out.with_suffix(".png")
    return args.plot


def _check_format(args, allowed, default):
    fm = args.format or default
    if fm not in allowed:
        raise ConfigError(
            f"format {fm!r} not supported here (choose from {', '.join(allowed)})"
        )
    return fm


def cmd_decompose(args):
    rho = state.validate_density(fileio.read_matrix(args.input), _tolerances(args))
    parts = state.decompose(rho)
    coords = state.coordinates(parts)
    verdict = bounds.evaluate_bounds(coords)
    _check_format(args, ("json",), "json")
    doc = {
        "parts": fileio.parts_to_json(parts),
        "coordinates": fileio.coordinates_to_json(coords),
        "verdict": fileio.verdict_to_json(verdict),
    }
    payload = json.dumps(doc, indent=2) + "\n"
    if args.out is None:
        sys.stdout.write(payload)
    else:
        args.out.write_text(payload)
    return EXIT_OK


def cmd_boundary(args):
    if args.dim < 2:
        raise ConfigError("--dim must be at least 2")
    if args.samples < 2:
        raise ConfigError("--samples must be at least 2")
    curve = bounds.boundary_samples(args.dim, args.samples)
    fm = _check_format(args, ("csv", "json", "svg"), "csv")
    out = _require_out(args)
    if fm == "csv":
        fileio.write_boundary_csv(out, curve)
    elif fm == "json":
        out.write_text(json.dumps(fileio.boundary_to_json(curve), indent=2) + "\n")
    else:
        out.write_text(fileio.boundary_to_svg(curve))
    lm = bounds.landmarks(args.dim)
    sidecar = out.with_suffix(out.suffix + ".landmarks.json")
    sidecar.write_text(json.dumps(fileio.landmarks_to_json(lm), indent=2) + "\n")
    plot = _plot_path(args)
    if plot is not None:
        from . import plots

        plots.plot_boundary(curve, plot, landmarks=lm)
    return EXIT_OK


_MEASURE_NAMES = {"haar-pure": sampling.HAAR_PURE, "hs-mixed": sampling.HS_MIXED}


def cmd_cloud(args):
    if args.dim < 2:
        raise ConfigError("--dim must be at least 2")
    if args.samples < 1:
        raise ConfigError("--samples must be at least 1")
    if args.workers < 1:
        raise ConfigError("--workers must be at least 1")
    measure = _MEASURE_NAMES[args.measure]
    seed = _seed(args)
    fm = _check_format(args, ("csv",), "csv")
    out = _require_out(args)
    header = (
        fileio.CLOUD_HEADER_ROBUSTNESS if args.robustness else fileio.CLOUD_HEADER
    )
    kept = [] if args.plot is not None else None
    with open(out, "w") as fh:
        fh.write(header + "\n")
        for rec in sampling.iter_coordinate_cloud(
            args.dim, args.samples, measure, seed, workers=args.workers
        ):
            coords = state.Coordinates(
                dim=rec.dim, s_d=rec.s_d, s_x=rec.s_x, s_i=rec.s_i, s_r=rec.s_r
            )
            if not bounds.evaluate_bounds(coords).all_satisfied:
                sys.stderr.write(
                    f"soundness violation at record {rec.seed_index}: {coords}\n"
                )
                return EXIT_SOUNDNESS
            rob = None
            if args.robustness:
                rho = (
                    sampling.haar_pure(rec.dim, seed, rec.seed_index)
                    if measure == sampling.HAAR_PURE
                    else sampling.hs_mixed(rec.dim, seed, rec.seed_index)
                )
                rob = imaginarity.robustness(rho)
            fh.write(fileio.cloud_row(rec, rob) + "\n")
            if kept is not None:
                kept.append(rec)
    plot = _plot_path(args)
    if plot is not None:
        from . import plots

        plots.plot_cloud(kept, args.dim, plot)
    return EXIT_OK


def cmd_verify(args):
    dims = sorted(set(args.dims))
    if not dims:
        raise ConfigError("need at least one dimension")
    if any(d < 2 for d in dims):
        raise ConfigError("dimensions must all be at least 2")
    if args.samples < 1:
        raise ConfigError("--samples must be at least 1")
    ok = verify_mod.run_all(dims, args.samples, _seed(args))
    print("verify: all checks passed" if ok else "verify: FAILURES above")
    return EXIT_OK if ok else EXIT_SOUNDNESS


def cmd_extremal(args):
    spec = fileio.read_extremal_spec(args.spec)
    try:
        rho = extremal.build_state(spec)
    except SpecViolation as exc:
        sys.stderr.write(f"invalid family spec: {exc}\n")
        return EXIT_CONFIG
    report = extremal.saturation_report(rho)
    out = _require_out(args)
    fileio.write_matrix(out, rho.entries)
    sidecar = out.with_suffix(out.suffix + ".report.json")
    sidecar.write_text(
        json.dumps(fileio.saturation_to_json(report), indent=2) + "\n"
    )
    return EXIT_OK


def cmd_sweep(args):
    rho = state.validate_density(fileio.read_matrix(args.input), _tolerances(args))
    before = state.state_coordinates(rho)
    swept, steps = transform.sweep_uniform_diagonal(rho, diag_tol=args.diag_tol)
    after = state.state_coordinates(swept)
    out = _require_out(args)
    fileio.write_matrix(out, swept.entries)
    fileio.write_step_log(out.with_suffix(out.suffix + ".steps.jsonl"), steps)
    summary = {
        "before": fileio.coordinates_to_json(before),
        "after": fileio.coordinates_to_json(after),
        "steps": len(steps),
    }
    out.with_suffix(out.suffix + ".coords.json").write_text(
        json.dumps(summary, indent=2) + "\n"
    )
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qbg",
        description="Qudit Bloch geometry: decompose states, check bounds, "
        "build extremal families, sample coordinate clouds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="split a state and check its bounds")
    p.add_argument("input", type=Path, help="matrix JSON file")
    _common_flags(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("boundary", help="sample the analytic boundary curve")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    _common_flags(p)
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("cloud", help="sample a coordinate cloud")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--measure", choices=sorted(_MEASURE_NAMES), default="hs-mixed")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--robustness", action="store_true",
                   help="append robustness columns")
    _common_flags(p)
    p.set_defaults(func=cmd_cloud)

    p = sub.add_parser("verify", help="run the invariant checks")
    p.add_argument("--dims", type=lambda s: [int(x) for x in s.split(",")],
                   default=[2, 3, 4, 5, 6, 7])
    p.add_argument("--samples", type=int, default=10_000)
    _common_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extremal", help="build an extremal-family state")
    p.add_argument("spec", type=Path, help="family spec JSON file")
    _common_flags(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("sweep", help="flatten a state's diagonal")
    p.add_argument("input", type=Path, help="matrix JSON file")
    p.add_argument("--diag-tol", type=float, default=transform.DEFAULT_DIAG_TOL)
    _common_flags(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StateValidationError as exc:
        sys.stderr.write(f"invalid state: {exc}\n")
        return EXIT_INVALID_STATE
    except (ConfigError, SpecViolation) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
