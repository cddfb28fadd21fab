"""Command-line driver.

Three subcommands:

  verify-axioms --dim N [--degree D] [--trials T] [--seed S]
      run the bracket axiom suite on seeded random sections
  check FILE [--report OUT] [--format json|text] [--timings] [--parallel]
      run the suites selected by a structure file
  examples NAME [--emit FILE]
      write a built-in example structure document

Exit codes: 0 all checks passed, 1 a mathematical check failed (or the
equivalence pattern was violated), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .courant import verify_axioms
from .errors import EngineError, InconsistentEquivalence
from .runfile import RunReport, SuiteReport, emit, exit_code, parse_structure, run
from .structures import EXAMPLE_NAMES, structure_file


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercourant",
        description="Exact verification of quaternionic structures on TM (+) T*M.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ax = sub.add_parser("verify-axioms", help="check the bracket axioms on random sections")
    ax.add_argument("--dim", type=int, required=True, help="chart dimension n >= 1")
    ax.add_argument("--degree", type=int, default=2, help="degree bound for random sections")
    ax.add_argument("--trials", type=int, default=20, help="number of random triples")
    ax.add_argument("--seed", type=int, default=0, help="seed for the random sections")
    ax.add_argument("--format", choices=("json", "text"), default="text")
    ax.add_argument("--report", metavar="FILE", help="write the report here instead of stdout")
    ax.add_argument("--parallel", action="store_true", help="run trials concurrently")
    # test-only hook; deliberately absent from --help
    ax.add_argument("--corrupt-bracket", action="store_true", help=argparse.SUPPRESS)

    ck = sub.add_parser("check", help="run the suites selected by a structure file")
    ck.add_argument("file", help="structure document (JSON)")
    ck.add_argument("--format", choices=("json", "text"), default="text")
    ck.add_argument("--report", metavar="FILE", help="write the report here instead of stdout")
    ck.add_argument("--timings", action="store_true", help="include wall time per suite")
    ck.add_argument("--parallel", action="store_true", help="run trials concurrently")

    ex = sub.add_parser("examples", help="write a built-in example structure document")
    ex.add_argument("name", choices=EXAMPLE_NAMES)
    ex.add_argument("--emit", metavar="FILE", help="write here instead of stdout")
    return parser


def _write(data: bytes, path: str | None) -> None:
    if path:
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _cmd_verify_axioms(args) -> int:
    checks = verify_axioms(
        args.dim,
        args.degree,
        args.trials,
        args.seed,
        _corrupt_bracket=args.corrupt_bracket,
        parallel=args.parallel,
    )
    status = "pass" if all(c.passed for c in checks) else "fail"
    report = RunReport(
        version=__version__,
        input_digest="-",
        structure_id="axioms-only",
        options={
            "dim": args.dim,
            "degree": args.degree,
            "seed": args.seed,
            "trials": args.trials,
        },
        suites=[SuiteReport("axioms", status, checks)],
        verdict=status,
    )
    _write(emit(report, args.format), args.report)
    return exit_code(report)


def _cmd_check(args) -> int:
    sf = parse_structure(args.file)
    report = run(sf, parallel=args.parallel)
    _write(emit(report, args.format, include_timings=args.timings), args.report)
    return exit_code(report)


def _cmd_examples(args) -> int:
    doc = structure_file(args.name)
    data = (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")
    _write(data, args.emit)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify-axioms":
            return _cmd_verify_axioms(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "examples":
            return _cmd_examples(args)
    except InconsistentEquivalence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
