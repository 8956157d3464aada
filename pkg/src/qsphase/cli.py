"""Command-line front end: solve, validate, generate, bench.

Exit codes are stable: 0 success, 2 margin violation (the target breaks
its |f| <= 1 - eta promise), 3 solver degeneracy, 4 dimension mismatch
between files, 64 usage or parameter errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

import numpy as np

from . import io as qio
from .errors import (
    DimensionMismatchError,
    DomainError,
    InvariantViolationError,
    MarginViolationError,
    NumericalDegeneracyError,
    PhaseSolveError,
    PoleError,
    SingularFactorizationError,
    SizingError,
)
from .nlft import plancherel_residual, reconstruct_f, roundtrip_error
from .riemann_hilbert import all_phases
from .target import eval_f, jacobi_anger_target, random_phase_target, to_laurent_b
from .weiss import weiss_coefficients

EXIT_OK = 0
EXIT_MARGIN = 2
EXIT_DEGENERATE = 3
EXIT_MISMATCH = 4
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="qsphase",
                     description="Phase factors for even targets via "
                                 "spectral factorization and per-index "
                                 "Hankel solves.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p_solve = sub.add_parser("solve", help="compute phases for a target file")
    p_solve.add_argument("target")
    p_solve.add_argument("--eta", type=float, default=None,
                         help="margin override (default: the target's)")
    p_solve.add_argument("--eps", type=float, default=1e-8,
                         help="per-phase accuracy budget")
    p_solve.add_argument("--grid-size", type=int, default=None,
                         help="explicit power-of-two FFT size")
    p_solve.add_argument("--workers", type=int, default=None,
                         help="parallel phase solves (default: all cores)")
    p_solve.add_argument("--format", choices=("json", "csv"), default="json")
    p_solve.add_argument("--out", required=True)
    p_solve.add_argument("--coeffs-out", default=None,
                         help="optionally dump the b/a coefficients")

    p_val = sub.add_parser("validate", help="roundtrip and identity checks")
    p_val.add_argument("target")
    p_val.add_argument("phases")
    p_val.add_argument("--nodes", type=int, default=500)
    p_val.add_argument("--out", default=None, help="report file (json)")
    p_val.add_argument("--table", default=None, help="per-node CSV table")

    p_gen = sub.add_parser("generate", help="produce target files")
    gsub = p_gen.add_subparsers(dest="kind", required=True,
                                parser_class=_Parser)

    g_ja = gsub.add_parser("jacobi-anger",
                           help="truncated expansion of scale*cos(tau*x)")
    g_ja.add_argument("--tau", type=float, required=True)
    g_ja.add_argument("--scale", type=float, required=True)
    g_ja.add_argument("--eps0", type=float, required=True)
    g_ja.add_argument("--out", required=True)

    g_rnd = gsub.add_parser("random",
                            help="target generated from random phases")
    g_rnd.add_argument("--length", type=int, required=True)
    g_rnd.add_argument("--seed", type=int, required=True)
    g_rnd.add_argument("--norm-cap", type=float, required=True)
    g_rnd.add_argument("--damp-factor", type=float, default=1.0)
    g_rnd.add_argument("--damp-ranges", default="",
                       help='inclusive index ranges, e.g. "1:333,667:1000"')
    g_rnd.add_argument("--out", required=True)
    g_rnd.add_argument("--phases-out", default=None,
                       help="ground-truth phase file (default: <out>.phases.json)")

    g_echo = gsub.add_parser("file-echo", help="parse and rewrite a target file")
    g_echo.add_argument("src")
    g_echo.add_argument("--out", required=True)

    p_bench = sub.add_parser("bench", help="stage timings over degrees")
    p_bench.add_argument("--degrees", default="25,50,100",
                         help="comma-separated ascending list (may be empty)")
    p_bench.add_argument("--eta", type=float, default=0.1)
    p_bench.add_argument("--eps", type=float, default=1e-8)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--workers", type=int, default=1)
    p_bench.add_argument("--out", default=None, help="CSV output (default stdout)")
    return parser


def _parse_ranges(text: str):
    ranges = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        lo, _, hi = chunk.partition(":")
        ranges.append((int(lo), int(hi)))
    return ranges


def _cmd_solve(args) -> int:
    target = qio.load_target(args.target)
    eta = target.eta if args.eta is None else args.eta
    workers = args.workers if args.workers else (os.cpu_count() or 1)
    b = to_laurent_b(target)
    t0 = time.perf_counter()
    coeffs = weiss_coefficients(b, eta, args.eps, N_override=args.grid_size)
    phases = all_phases(coeffs, workers=workers)
    wall = time.perf_counter() - t0
    qio.dump_phases(phases, args.out, fmt=args.format)
    if args.coeffs_out:
        qio.dump_coefficients(coeffs, args.coeffs_out)
    print(f"d={target.half_degree} N={coeffs.grid_size} "
          f"wall={wall:.3f}s max_psi={np.max(np.abs(phases.values)):.17g}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    target = qio.load_target(args.target)
    phases = qio.load_phases(args.phases)
    if phases.d != target.half_degree:
        raise DimensionMismatchError(
            f"phase file has d = {phases.d}, target has d = {target.half_degree}"
        )
    max_err = roundtrip_error(phases, target, args.nodes)
    residual = plancherel_residual(phases, target)
    print(f"roundtrip_max_err={max_err:.17g} "
          f"plancherel_residual={residual:.17g} nodes={args.nodes}")
    if args.out:
        qio.dump_validation_report(max_err, residual, args.nodes, args.out)
    if args.table:
        n = int(args.nodes)
        xs = np.cos(np.pi * (2 * np.arange(n) + 1) / (4 * n))
        qio.write_node_table(args.table, xs, eval_f(target, xs),
                             reconstruct_f(phases, xs))
    return EXIT_OK


def _cmd_generate(args) -> int:
    if args.kind == "jacobi-anger":
        target = jacobi_anger_target(args.tau, args.scale, args.eps0)
        qio.dump_target(target, args.out)
        print(f"d={target.half_degree} eta={target.eta:.17g} out={args.out}")
    elif args.kind == "random":
        phases, target = random_phase_target(
            args.length, args.seed, args.norm_cap,
            damp_factor=args.damp_factor,
            damp_ranges=_parse_ranges(args.damp_ranges),
        )
        qio.dump_target(target, args.out)
        phases_out = args.phases_out or (args.out + ".phases.json")
        meta = dict(phases.meta)
        meta.setdefault("eta", target.eta)
        meta.setdefault("eps", 0.0)  # exact by construction
        meta.setdefault("N", 0)
        qio.dump_phases(
            type(phases)(phases.values, meta), phases_out, fmt="json")
        print(f"d={target.half_degree} eta={target.eta:.17g} "
              f"out={args.out} phases={phases_out}")
    else:  # file-echo
        target = qio.load_target(args.src)
        qio.dump_target(target, args.out)
        print(f"d={target.half_degree} out={args.out}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    degrees = [int(c) for c in args.degrees.split(",") if c.strip()]
    if degrees != sorted(degrees):
        raise DomainError("degrees must be ascending")
    lines = ["d,N,weiss_seconds,solve_seconds"]
    for d in degrees:
        _, target = random_phase_target(d + 1, args.seed + d, norm_cap=0.5)
        b = to_laurent_b(target)
        t0 = time.perf_counter()
        coeffs = weiss_coefficients(b, args.eta, args.eps)
        t1 = time.perf_counter()
        all_phases(coeffs, workers=args.workers)
        t2 = time.perf_counter()
        lines.append(f"{d},{coeffs.grid_size},{t1 - t0:.6f},{t2 - t1:.6f}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


_DISPATCH = {
    "solve": _cmd_solve,
    "validate": _cmd_validate,
    "generate": _cmd_generate,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (MarginViolationError, SingularFactorizationError) as exc:
        print(f"qsphase: margin violation: {exc}", file=sys.stderr)
        return EXIT_MARGIN
    except (NumericalDegeneracyError, InvariantViolationError,
            PhaseSolveError) as exc:
        print(f"qsphase: solver degeneracy: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except DimensionMismatchError as exc:
        print(f"qsphase: dimension mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (DomainError, SizingError, PoleError, OSError, ValueError) as exc:
        print(f"qsphase: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
