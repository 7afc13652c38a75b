"""Command-line front end.

Reads a CSV matrix, applies one operator, writes the solution as CSV and,
optionally, a JSON report. Exit codes: 0 ok, 2 usage/parse error,
3 dimension or parameter error, 4 SVD non-convergence, 5 oracle failure.
"""

import argparse
import os
import sys

import numpy as np

from . import oracle
from .dense_linalg import as_matrix, svd
from .errors import ConvergenceError, DimensionError, DomainError, ParseError
from .io import RunReport, format_float, read_csv, write_csv, write_report
from .matrix_prox import nuclear_ball_nearest, numerical_rank, svt
from .params import PenaltyParams
from .scalar_prox import keep_threshold
from .vector_prox import l0_approx, soft_threshold

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CONVERGENCE = 4
EXIT_ORACLE = 5

OPERATIONS = ("shrink", "sparse", "svt", "nuclear-project")
REQUIRED = {
    "shrink": ("lam",),
    "sparse": ("mode", "beta"),
    "svt": ("beta",),
    "nuclear-project": ("tau",),
    "svd": (),
}
FLAG = {"lam": "--lambda", "beta": "--beta", "tau": "--tau", "mode": "--mode"}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", default="-", help="CSV matrix (default: stdin)")
    common.add_argument("-o", "--output", default="-", help="solution CSV (default: stdout)")
    common.add_argument("--report", help="write a JSON run report here")
    common.add_argument("--lambda", dest="lam", type=float, help="threshold lambda > 0")
    common.add_argument("--beta", type=float, help="balancing weight beta > 0 (threshold 1/beta)")
    common.add_argument("--tau", type=float, help="nuclear/l1 budget tau > 0")
    common.add_argument("--mode", choices=("l0", "l1"), help="sparse penalty")
    common.add_argument("--seed", type=int, default=0, help="oracle seed (check only)")

    parser = argparse.ArgumentParser(prog="shrinkage", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    sub.add_parser("shrink", parents=[common], help="entry-wise soft threshold by --lambda")
    sub.add_parser("sparse", parents=[common], help="l0 or l1 sparse approximation with --beta")
    sub.add_parser("svt", parents=[common], help="singular value thresholding by 1/--beta")
    sub.add_parser("nuclear-project", parents=[common],
                   help="nearest matrix with nuclear norm <= --tau")
    sub.add_parser("svd", parents=[common], help="print singular values, one per line")
    check = sub.add_parser("check", parents=[common],
                           help="run --op and verify it with a brute-force oracle")
    check.add_argument("--op", choices=OPERATIONS, required=True)
    return parser


def _entrywise_report(name, params, a, x, lam, objective):
    sig_in = svd(a).sigma
    sig_out = svd(x).sigma
    return RunReport(
        operation=name,
        params=params,
        effective_lambda=lam,
        objective=objective,
        sigma_in=sig_in.tolist(),
        sigma_out=sig_out.tolist(),
        rank_out=numerical_rank(sig_out, sig_in),
        cardinality_out=int(np.count_nonzero(x)),
    )


def _spectral_report(name, params, sol):
    return RunReport(
        operation=name,
        params=params,
        effective_lambda=sol.effective_lambda,
        objective=sol.objective,
        sigma_in=sol.sigma_in.tolist(),
        sigma_out=sol.sigma_out.tolist(),
        rank_out=sol.rank_out,
        cardinality_out=sol.cardinality_out,
    )


def run_operation(op, a, args):
    """Apply ``op`` to matrix ``a``; return ``(solution, RunReport)``."""
    a = as_matrix(a)
    if op == "shrink":
        p = PenaltyParams(lam=args.lam)
        x = soft_threshold(a, p.lam)
        obj = p.lam * np.sum(np.abs(x)) + 0.5 * np.sum((x - a) ** 2)
        return x, _entrywise_report("shrink", p.as_dict(), a, x, p.lam, obj)
    if op == "sparse":
        p = PenaltyParams(beta=args.beta)
        fit = lambda x: 0.5 * p.beta * np.sum((x - a) ** 2)  # noqa: E731
        if args.mode == "l1":
            x = soft_threshold(a, 1.0 / p.beta)
            return x, _entrywise_report("sparse-l1", p.as_dict(), a, x, 1.0 / p.beta,
                                        np.sum(np.abs(x)) + fit(x))
        x = l0_approx(a, p.beta)
        return x, _entrywise_report("sparse-l0", p.as_dict(), a, x, keep_threshold(p.beta),
                                    np.count_nonzero(x) + fit(x))
    if op == "svt":
        p = PenaltyParams(beta=args.beta)
        sol = svt(a, p.beta)
        return sol.solution, _spectral_report("svt", p.as_dict(), sol)
    if op == "nuclear-project":
        p = PenaltyParams(tau=args.tau)
        sol = nuclear_ball_nearest(a, p.tau)
        return sol.solution, _spectral_report("nuclear-project", p.as_dict(), sol)
    raise UsageError(f"unknown operation {op!r}")


def run_oracle(op, a, x, args):
    """Check ``x`` against the brute-force oracle matching ``op``.

    Tolerances are fixed here on purpose: a user-tunable tolerance would let
    any candidate pass.
    """
    seed = args.seed
    if op == "shrink":
        return oracle.merge_reports(
            oracle.coordinate_grid_check(x, a, args.lam, 1.0),
            oracle.perturbation_check(x, oracle.l1_objective(args.lam, 1.0, a), seed=seed),
        )
    if op == "sparse" and args.mode == "l1":
        return oracle.merge_reports(
            oracle.coordinate_grid_check(x, a, 1.0, args.beta),
            oracle.perturbation_check(x, oracle.l1_objective(1.0, args.beta, a), seed=seed),
        )
    if op == "sparse":
        return oracle.support_enum_l0(a, args.beta, x)
    if op == "svt":
        return oracle.merge_reports(
            oracle.perturbation_check(x, oracle.svt_objective(a, args.beta), seed=seed,
                                      tolerance=oracle.SPECTRAL_TOL),
            oracle.spectral_family_check(x, a, args.beta),
        )
    return oracle.nuclear_ball_check(x, a, args.tau, seed=seed)


def _validate(args):
    needed = REQUIRED[args.op if args.command == "check" else args.command]
    missing = [FLAG[name] for name in needed if getattr(args, name) is None]
    if missing:
        raise UsageError(f"{args.command} requires {', '.join(missing)}")
    if args.input != "-" and args.output != "-":
        if os.path.realpath(args.input) == os.path.realpath(args.output):
            raise UsageError("output path must differ from input path")


def _read_input(path, stdin):
    if path == "-":
        return read_csv(stdin.buffer if hasattr(stdin, "buffer") else stdin, "stdin")
    with open(path, "rb") as fh:
        return read_csv(fh, path)


def _write(path, stdout, writer):
    if path == "-":
        writer(stdout)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            writer(fh)


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def fail(code, message):
        print(f"shrinkage: error: {message}", file=stderr)
        return code

    try:
        _validate(args)
        doc = _read_input(args.input, stdin)
        a = doc.matrix
        if args.command == "svd":
            sigma = svd(a).sigma
            _write(args.output, stdout,
                   lambda fh: fh.write("".join(format_float(s) + "\n" for s in sigma)))
            if args.report:
                rep = RunReport(operation="svd", params={}, effective_lambda=0.0,
                                objective=float(np.sum(sigma)), sigma_in=sigma.tolist(),
                                sigma_out=sigma.tolist(),
                                rank_out=numerical_rank(sigma, sigma),
                                cardinality_out=int(np.count_nonzero(a)))
                _write(args.report, stdout, lambda fh: write_report(rep, fh))
            return EXIT_OK
        op = args.op if args.command == "check" else args.command
        x, report = run_operation(op, a, args)
        if args.command == "check":
            report.oracle = run_oracle(op, a, x, args)
        _write(args.output, stdout, lambda fh: write_csv(x, fh))
        if args.report:
            _write(args.report, stdout, lambda fh: write_report(report, fh))
        if report.oracle is not None:
            o = report.oracle
            print(f"oracle {o.verdict}: margin {o.margin:.3e} over {o.competitors_tested} "
                  f"competitors (tolerance {o.tolerance:g})", file=stderr)
            if not o.passed:
                return EXIT_ORACLE
        return EXIT_OK
    except (UsageError, ParseError) as exc:
        return fail(EXIT_USAGE, exc)
    except (DomainError, DimensionError) as exc:
        return fail(EXIT_DOMAIN, exc)
    except ConvergenceError as exc:
        return fail(EXIT_CONVERGENCE, exc)
    except OSError as exc:
        return fail(EXIT_USAGE if isinstance(exc, FileNotFoundError) else 1, exc)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
