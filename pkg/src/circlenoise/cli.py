"""Command-line interface: path sampling, verification suites, spectra, and benchmarks.

Exit codes: 0 when all requested work succeeded (and every check
passed), 1 when a verification or benchmark assertion failed, 2 for
configuration or usage errors.  Every output file embeds its full
configuration as a leading `# config:` comment (CSV) or a config block
(JSON).
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
import time

import numpy as np

from .noise import SeedSpec, sample_noise
from .processes import (GridSpec, Kernel, gram_matrix, synthesize_ensemble,
                        synthesize_path_fft, synthesize_path_naive, write_paths_csv)
from .verify import SUITE_NAMES, SuiteConfig, run_suite

_DEFAULTS = {"trunc": 1024, "grid": 2048, "reps": 20000, "seed": 42, "tol_ratio": 1e-10}


def _add_common(p: argparse.ArgumentParser, *names: str) -> None:
    if "trunc" in names:
        p.add_argument("--trunc", type=int, default=_DEFAULTS["trunc"],
                       help="frequency truncation N (default %(default)s)")
    if "grid" in names:
        p.add_argument("--grid", type=int, default=_DEFAULTS["grid"],
                       help="uniform grid size M (default %(default)s)")
    if "reps" in names:
        p.add_argument("--reps", type=int, default=_DEFAULTS["reps"],
                       help="Monte Carlo replicates R (default %(default)s)")
    p.add_argument("--seed", type=int, default=_DEFAULTS["seed"],
                   help="master seed (default %(default)s)")
    p.add_argument("--fresh-seed", action="store_true",
                   help="draw a random master seed instead of --seed (printed for replay)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlenoise",
        description="White noise, Brownian bridge, and Levy's Brownian motion on the circle.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="synthesize sample paths and write a wide CSV")
    p.add_argument("--process", required=True, choices=["bridge", "levy", "white-noise"])
    p.add_argument("--method", choices=["fft", "naive"], default="fft",
                   help="synthesis route (default fft; requires grid >= 2*trunc+1)")
    p.add_argument("--out", default="paths.csv", help="output CSV path")
    _add_common(p, "trunc", "grid", "reps")

    p = sub.add_parser("verify", help="run a verification suite and write a JSON report")
    p.add_argument("--suite", required=True, choices=list(SUITE_NAMES) + ["all"])
    p.add_argument("--tol-ratio", type=float, default=_DEFAULTS["tol_ratio"],
                   help="near-zero eigenvalue ratio (default %(default)s)")
    p.add_argument("--out", default=None, help="report path (default: stdout)")
    _add_common(p, "trunc", "grid", "reps")

    p = sub.add_parser("spectrum", help="eigenvalues of a kernel Gram matrix on a grid")
    p.add_argument("--kernel", required=True, choices=["levy", "bridge", "min"])
    p.add_argument("--points", default=None,
                   help="comma-separated evaluation points overriding the uniform grid")
    p.add_argument("--drop-zero", action="store_true", help="exclude t=0 from the uniform grid")
    p.add_argument("--origin", type=float, default=0.0, help="origin of the levy kernel")
    p.add_argument("--tol-ratio", type=float, default=_DEFAULTS["tol_ratio"])
    p.add_argument("--out", default="spectrum.csv", help="output CSV path")
    _add_common(p, "grid")

    p = sub.add_parser("bench", help="time naive vs FFT synthesis and check agreement")
    p.add_argument("--sizes", default="8:32,64:256,256:1024,1024:4096,4096:16384",
                   help="comma-separated N:M pairs")
    _add_common(p)

    return parser


def _resolve_seed(args: argparse.Namespace) -> int:
    if getattr(args, "fresh_seed", False):
        seed = secrets.randbits(63)
        print(f"fresh master seed: {seed}")
        return seed
    return args.seed


def run_sample(args: argparse.Namespace) -> int:
    if args.process == "white-noise":
        print("error: white noise is not an ordinary process and has no pointwise path; "
              "pair it against test functions (circlenoise.noise.pair) instead.",
              file=sys.stderr)
        return 2
    if args.method == "fft" and args.grid < 2 * args.trunc + 1:
        print(f"error: FFT synthesis needs --grid >= 2*trunc+1 = {2 * args.trunc + 1} "
              f"(got {args.grid}); enlarge --grid or use --method naive.", file=sys.stderr)
        return 2
    seed_val = _resolve_seed(args)
    ens = synthesize_ensemble(args.process, args.trunc, GridSpec(args.grid), args.reps,
                              SeedSpec(seed_val), method=args.method)
    config = {"command": "sample", "process": args.process, "N": args.trunc, "M": args.grid,
              "R": args.reps, "seed": seed_val, "method": args.method}
    try:
        with open(args.out, "w") as fp:
            write_paths_csv(ens, fp, config)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    var = ens.paths.var(axis=0, ddof=1) if args.reps > 1 else np.zeros(args.grid)
    print(f"wrote {args.reps} paths on {args.grid} points to {args.out}")
    print(f"endpoint variance (t=0): {var[0]:.6e}")
    print(f"mean gridpoint variance: {var.mean():.6e}")
    return 0


def run_verify(args: argparse.Namespace) -> int:
    seed_val = _resolve_seed(args)
    cfg = SuiteConfig(max_freq=args.trunc, grid=args.grid, reps=args.reps,
                      master_seed=seed_val, tol_ratio=args.tol_ratio)
    try:
        report = run_suite(args.suite, cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = report.to_json()
    if args.out:
        try:
            with open(args.out, "w") as fp:
                fp.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
        n_pass = sum(c.passed for c in report.checks)
        print(f"{args.suite}: {n_pass}/{len(report.checks)} checks passed -> {args.out}")
    else:
        print(text, end="")
    return 0 if report.overall_pass else 1


def run_spectrum(args: argparse.Namespace) -> int:
    if args.points:
        try:
            pts = np.array([float(v) for v in args.points.split(",")])
        except ValueError:
            print(f"error: cannot parse --points {args.points!r}", file=sys.stderr)
            return 2
    else:
        if args.grid > 4096:
            print("error: dense spectra are limited to --grid <= 4096", file=sys.stderr)
            return 2
        pts = np.arange(args.grid) / args.grid
        if args.drop_zero:
            pts = pts[pts > 0.0]
    if pts.size > 4096:
        print("error: dense spectra are limited to 4096 points", file=sys.stderr)
        return 2
    try:
        kernel = Kernel(args.kernel, origin=args.origin)
        gram = gram_matrix(kernel, pts)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    eig = np.linalg.eigvalsh(gram)
    lam_max = float(eig[-1])
    near_zero = int(np.sum(eig < args.tol_ratio * lam_max)) if lam_max > 0 else pts.size
    config = {"command": "spectrum", "kernel": args.kernel, "origin": args.origin,
              "points": pts.size, "tol_ratio": args.tol_ratio, "seed": args.seed}
    try:
        with open(args.out, "w") as fp:
            fp.write("# config: " + json.dumps(config, sort_keys=True) + "\n")
            fp.write("index,eigenvalue\n")
            for i, v in enumerate(eig):
                fp.write(f"{i},{v:.17g}\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    print(f"{pts.size} eigenvalues written to {args.out}")
    print(f"lambda_max={lam_max:.6e} lambda_min={eig[0]:.6e} "
          f"near_zero(<{args.tol_ratio:g}*max)={near_zero}")
    return 0


def run_bench(args: argparse.Namespace) -> int:
    try:
        sizes = []
        for item in args.sizes.split(","):
            n_str, m_str = item.split(":")
            sizes.append((int(n_str), int(m_str)))
    except ValueError:
        print(f"error: cannot parse --sizes {args.sizes!r} (expected N:M,N:M,...)",
              file=sys.stderr)
        return 2
    seed_val = _resolve_seed(args)
    seed = SeedSpec(seed_val)
    print(f"{'N':>6} {'M':>7} {'naive_s':>10} {'fft_s':>10} {'speedup':>9} {'max_dev':>11}")
    ok = True
    for n, m in sizes:
        if m < 2 * n + 1:
            print(f"error: size {n}:{m} violates M >= 2N+1", file=sys.stderr)
            return 2
        x = sample_noise(n, seed, 0)
        grid = GridSpec(m)
        t0 = time.perf_counter()
        p_naive = synthesize_path_naive("bridge", x, grid)
        t1 = time.perf_counter()
        p_fft = synthesize_path_fft("bridge", x, grid)
        t2 = time.perf_counter()
        dev = float(np.max(np.abs(p_naive - p_fft)))
        speedup = (t1 - t0) / max(t2 - t1, 1e-12)
        print(f"{n:>6} {m:>7} {t1 - t0:>10.4f} {t2 - t1:>10.4f} {speedup:>9.1f} {dev:>11.3e}")
        if dev > 1e-9:
            ok = False
    if not ok:
        print("error: naive and FFT synthesis disagree beyond 1e-9", file=sys.stderr)
        return 1
    return 0


_RUNNERS = {"sample": run_sample, "verify": run_verify, "spectrum": run_spectrum,
            "bench": run_bench}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return _RUNNERS[args.command](args)


def entrypoint() -> None:
    sys.exit(main())
