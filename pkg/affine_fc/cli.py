"""
affine-fc command line.

    affine-fc eval --n 3 --window "[3,2,1]" --all-predicates
    affine-fc verify --n 4 --L 6 --check all
    affine-fc enumerate --n 3 --L 2 --format tsv

Exit status: 0 pass, 1 verification failure, 2 usage or parse error,
3 budget exceeded.
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence

from . import __version__
from .exceptions import AffineGroupError, BudgetExceededError, ConsistencyError
from .group import AffineGroup
from .models import (
    AffinePermutation,
    CheckName,
    ElementReport,
    EnumerationRecord,
    OutputFormat,
    VerifySummary,
)
from .permutation import canonical_reduced_word, length
from .resources.cells import sigma
from .resources.patterns import condition_ii_holds, find_321_instance
from .resources.roots import condition_iv_holds
from .resources.words import evaluate_word, is_fully_commutative_word
from .utils import format_partition, format_triple, parse_window, parse_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

PREDICATES = ("words", "pairs", "321", "roots", "sigma")


def predicate_values(w: AffinePermutation, cap: int) -> Dict[str, bool]:
    """Every full-commutativity criterion, by name."""
    return {
        "words": is_fully_commutative_word(w, cap=cap),
        "pairs": condition_ii_holds(w),
        "321": find_321_instance(w) is None,
        "roots": condition_iv_holds(w),
        "sigma": sigma(w).parts[0] <= 2,
    }


def element_report(group: AffineGroup, w: AffinePermutation, all_predicates: bool) -> ElementReport:
    """
    Build the eval record for w.

    Raises:
        ConsistencyError: If the criteria disagree
    """
    predicates = predicate_values(w, group.class_cap)
    if len(set(predicates.values())) > 1:
        raise ConsistencyError(f"criteria disagree on {w}: {predicates}")
    return ElementReport(
        n=w.n,
        window=str(w),
        length=length(w),
        word=str(canonical_reduced_word(w)),
        fc=predicates["words"],
        predicates=predicates if all_predicates else None,
        sigma=format_partition(sigma(w).parts, bare=True),
        witness=format_triple(find_321_instance(w)),
    )


def _bool(value: bool) -> str:
    return "true" if value else "false"


def render_report(report: ElementReport, output: OutputFormat) -> List[str]:
    if output == OutputFormat.JSONL:
        return [report.model_dump_json(exclude_none=True)]
    header = ["n", "window", "length", "word", "fc", "sigma", "witness"]
    row = [
        str(report.n),
        report.window,
        str(report.length),
        report.word,
        _bool(report.fc),
        report.sigma,
        report.witness or "",
    ]
    if report.predicates is not None:
        header += list(PREDICATES)
        row += [_bool(report.predicates[name]) for name in PREDICATES]
    return ["\t".join(header), "\t".join(row)]


def render_record(record: EnumerationRecord, output: OutputFormat) -> str:
    if output == OutputFormat.JSONL:
        return record.model_dump_json()
    return "\t".join([record.window, str(record.length), _bool(record.fc), record.sigma])


def render_summary(summary: VerifySummary, timings: bool = False) -> List[str]:
    """Fixed-width verification table followed by per-length counts."""
    lines = [f"n={summary.n} L={summary.max_length} budget={summary.ball_budget} radius={summary.window_radius}"]
    header = f"{'check':<14}{'status':<12}{'population':>11}{'failures':>10}"
    if timings:
        header += f"{'elapsed':>10}"
    lines.append(header)
    for check in summary.checks:
        row = f"{check.name.value:<14}{check.status.value:<12}{check.population:>11}{check.failures:>10}"
        if timings:
            row += f"{check.elapsed:>9.3f}s"
        lines.append(row)
        for sample in check.failure_samples:
            lines.append(f"    {sample}")
        if check.note:
            lines.append(f"    note: {check.note}")
    if summary.counts_by_length:
        lines.append(f"{'length':<8}{'elements':>10}{'fc':>10}")
        for ell, (count, fc) in enumerate(zip(summary.counts_by_length, summary.fc_counts_by_length)):
            lines.append(f"{ell:<8}{count:>10}{fc:>10}")
    lines.append("PASS" if summary.exit_code == EXIT_OK else ("FAIL" if summary.exit_code == EXIT_FAILURE else "INCOMPLETE"))
    return lines


# Commands


def cmd_eval(group: AffineGroup, args: argparse.Namespace) -> int:
    if args.window is not None:
        w = group.element(parse_window(args.window))
    else:
        w = evaluate_word(group.word(parse_word(args.word)))
    report = element_report(group, w, args.all_predicates)
    for line in render_report(report, args.format or OutputFormat.JSONL):
        print(line)
    return EXIT_OK


def cmd_enumerate(group: AffineGroup, args: argparse.Namespace) -> int:
    output = args.format or OutputFormat.TSV
    ball = group.ball(args.max_length)
    if output == OutputFormat.TSV:
        print("window\tlength\tfc\tsigma")
    status = EXIT_OK
    for index, (ell, w) in enumerate(ball.with_lengths()):
        fc = is_fully_commutative_word(w, cap=group.class_cap)
        shape = sigma(w)
        record = EnumerationRecord(
            window=str(w), length=ell, fc=fc, sigma=format_partition(shape.parts, bare=True)
        )
        print(render_record(record, output))
        if index % 10 == 0:
            predicates = predicate_values(w, group.class_cap)
            if set(predicates.values()) != {fc}:
                logger.error("criteria disagree on %s: %s", w, predicates)
                status = EXIT_FAILURE
    return status


def cmd_verify(group: AffineGroup, args: argparse.Namespace) -> int:
    summary = group.verification.run(args.max_length, args.check or [CheckName.ALL])
    if args.format == OutputFormat.JSONL:
        exclude = None if args.timings else {"checks": {"__all__": {"elapsed"}}}
        print(summary.model_dump_json(exclude=exclude))
    else:
        for line in render_summary(summary, timings=args.timings):
            print(line)
    return summary.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="rank n >= 3 of W(Ã_{n-1})")
    common.add_argument(
        "--format", type=OutputFormat, choices=list(OutputFormat), default=None, metavar="{tsv,jsonl}",
        help="record format (eval: jsonl, enumerate: tsv, verify: table unless jsonl)",
    )
    common.add_argument("--budget", type=int, default=None,
                        help=f"maximum ball size (default {AffineGroup.DEFAULT_BALL_BUDGET})")
    common.add_argument("--window-radius", type=int, default=None,
                        help=f"oracle radius multiplier (default {AffineGroup.DEFAULT_WINDOW_RADIUS})")
    common.add_argument("--class-cap", type=int, default=None,
                        help=f"maximum commutation class size (default {AffineGroup.DEFAULT_CLASS_CAP})")
    common.add_argument("--progress", action="store_true", help="progress bars on stderr")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="affine-fc",
        description="Fully commutative elements and cells of the affine symmetric group.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", parents=[common], help="report on one element")
    source = evaluate.add_mutually_exclusive_group(required=True)
    source.add_argument("--window", help="window such as [2,1,3]")
    source.add_argument("--word", help="dotted word such as 1.2.1, or e")
    evaluate.add_argument("--all-predicates", action="store_true",
                          help="include every full-commutativity criterion")

    verify = commands.add_parser("verify", parents=[common], help="run exhaustive checks")
    verify.add_argument("--L", dest="max_length", type=int, default=4, help="length bound (default 4)")
    verify.add_argument("--check", type=CheckName, choices=list(CheckName), action="append", metavar="NAME",
                        help="one of " + ", ".join(c.value for c in CheckName) + "; repeatable (default all)")
    verify.add_argument("--timings", action="store_true", help="report elapsed seconds per check")

    enumerate_ = commands.add_parser("enumerate", parents=[common], help="list the ball of radius L")
    enumerate_.add_argument("--L", dest="max_length", type=int, required=True, help="length bound")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if getattr(args, "max_length", 0) < 0:
        parser.error("--L must be non-negative")

    handlers = {"eval": cmd_eval, "verify": cmd_verify, "enumerate": cmd_enumerate}
    try:
        group = AffineGroup(
            args.n,
            ball_budget=args.budget,
            class_cap=args.class_cap,
            window_radius=args.window_radius,
            show_progress=args.progress,
        )
        return handlers[args.command](group, args)
    except BudgetExceededError as e:
        print(f"incomplete: {e.message}", file=sys.stderr)
        return EXIT_BUDGET
    except ConsistencyError as e:
        print(f"failure: {e.message}", file=sys.stderr)
        return EXIT_FAILURE
    except AffineGroupError as e:
        invariant = getattr(e, "invariant", None)
        prefix = f"error ({invariant})" if invariant else "error"
        print(f"{prefix}: {e.message}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
