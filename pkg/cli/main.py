"""
Main - Argument parsing, output formatting and exit codes for the CLI.
"""

import argparse
import json
import logging
import sys
import time
from typing import List, Optional

from config.settings import configure_logging, get_settings
from core.errors import InputParseError, RollerError, ValidationFailed
from memory import ReportStore, RunReport, input_digest

from .bench import TARGETS, run_bench
from .commands import COMMANDS, CommandOutput

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "tsv", "svg")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="sequence file, or point file for draw commands")
    common.add_argument("--n", type=int, help="size of the generated input")
    common.add_argument("--k", type=int, default=4, help="minimum run length for kroller")
    common.add_argument("--seed", type=int, default=None, help="seed for generated inputs")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--validate", action="store_true", help="check the result, exit 4 on failure")
    common.add_argument("--record", action="store_true", help="store a run report")
    common.add_argument("--log-level", default=None)
    common.add_argument("--output", help="write the result to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="roller", description="Rollercoaster toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "count":
            p.add_argument("--table", action="store_true", help="print rows 1..n")
    bench = sub.add_parser("bench", parents=[common])
    bench.add_argument("--target", choices=TARGETS, default="greedy")
    bench.add_argument("--trials", type=int, default=5)
    bench.add_argument("--min-exp", type=int, default=10)
    bench.add_argument("--max-exp", type=int, default=16)
    return parser


def _bench(args) -> CommandOutput:
    rows = run_bench(args.target, args.seed, args.trials, args.min_exp, args.max_exp,
                     k=args.k, threads=get_settings().threads)
    text = "\n".join(f"{r.n}\t{r.median_seconds:.6f}" for r in rows)
    digest = input_digest(f"bench:{args.target}:{args.seed}:{args.trials}:{args.min_exp}:{args.max_exp}")
    payload = {"target": args.target, "rows": [r.to_dict() for r in rows]}
    return CommandOutput(payload, text, digest, tsv=text)


def _summary(payload) -> dict:
    return {k: v for k, v in payload.items() if not isinstance(v, (list, dict))}


def render(output: CommandOutput, report: RunReport, fmt: str) -> str:
    if fmt == "json":
        body = {"command": report.command, "result": output.payload,
                "report": report.to_dict(include_timing=False)}
        return json.dumps(body, indent=2, sort_keys=True)
    if fmt == "tsv":
        return output.tsv if output.tsv is not None else output.text
    if fmt == "svg":
        if output.svg is None:
            raise InputParseError("--format svg is only available for draw-path and draw-cat")
        return output.svg.rstrip("\n")
    return output.text


def run(args) -> int:
    if args.seed is None:
        args.seed = get_settings().default_seed
    start = time.perf_counter()
    output = _bench(args) if args.command == "bench" else COMMANDS[args.command](args)
    elapsed = time.perf_counter() - start

    report = RunReport(args.command, output.digest, _summary(output.payload),
                       seed=args.seed, wall_time=elapsed, validation=output.validation)
    logger.info("%s finished in %.3fs", args.command, elapsed)
    text = render(output, report, args.format) + "\n"
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(text)
        except OSError as e:
            raise InputParseError(f"cannot write {args.output}: {e}") from e
    else:
        sys.stdout.write(text)
    if args.record:
        ReportStore().save_report(report)

    if output.validation is False:
        raise ValidationFailed("; ".join(output.problems[:5]) or "validation failed")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        return run(args)
    except RollerError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
