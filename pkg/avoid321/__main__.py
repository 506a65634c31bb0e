"""Command-line entry point for avoid321."""

import argparse
import asyncio
import json
import logging
import os
import sys

from avoid321.components.chain_renderer import (
    ChainRenderer,
    build_chain,
    build_chain_from_path,
    chain_to_json,
)
from avoid321.components.checks import CHECK_REGISTRY, VerificationPipeline
from avoid321.components.checks.base import load_builtin_checks
from avoid321.components.dyck import DyckPath
from avoid321.components.formatter import OutputFormat, OutputFormatter
from avoid321.components.genfun import GenFunMethod, apply_spec, generating_function
from avoid321.components.permutation import (
    DescentSet,
    descent_set,
    enumerate_T,
    enumerate_T_class,
    inv,
    inverse_descent_set,
    ldes,
    lind,
    parse_permutation,
    sign,
)
from avoid321.components.report_logger import ReportLogger
from avoid321.config import get_settings
from avoid321.errors import Avoid321Error, InvalidArgumentError
from avoid321.models.config import Avoid321Settings

logger = logging.getLogger(__name__)

STATISTICS = {
    "inv": inv,
    "ldes": ldes,
    "lind": lind,
    "sign": sign,
    "des": descent_set,
    "ides": inverse_descent_set,
}

# Below this size a process pool costs more than it saves.
PARALLEL_MIN_N = 10


def setup_logging(level: str = "WARNING") -> None:
    """Configure logging; diagnostics go to stderr, data to stdout."""
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog="avoid321",
        description="Enumerate, biject and verify identities on 321-avoiding permutations",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="Logging level (default: WARNING)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="Worker processes for enumeration and verification (default: CPU count)",
    )
    formats = [f.value for f in OutputFormat]

    subparsers = parser.add_subparsers(dest="command", required=True)

    enum_p = subparsers.add_parser("enumerate", help="List T_n with statistics")
    enum_p.add_argument("--n", type=int, required=True, help="Permutation size")
    enum_p.add_argument(
        "--stats",
        default="inv,ldes,lind",
        help=f"Comma-separated statistics among {', '.join(STATISTICS)}",
    )
    enum_p.add_argument("--format", choices=formats, default="text")
    enum_p.add_argument(
        "--B",
        dest="b",
        default=None,
        metavar="SET",
        help="Restrict to T_n(B); comma-separated subset of [n-2], '' for the empty set",
    )

    gen_p = subparsers.add_parser("genfun", help="Print the generating function f_n")
    gen_p.add_argument("--n", type=int, required=True, help="Permutation size")
    gen_p.add_argument(
        "--method",
        choices=[m.value for m in GenFunMethod],
        default=GenFunMethod.BRUTE_FORCE.value,
    )
    gen_p.add_argument(
        "--spec", default=None, help="Substitutions applied left to right, e.g. t=1,x=-1,z=1"
    )
    gen_p.add_argument("--format", choices=formats, default="text")

    bij_p = subparsers.add_parser("biject", help="Dump the permutation/tableaux/path chain")
    source = bij_p.add_mutually_exclusive_group(required=True)
    source.add_argument("--perm", help="321-avoiding permutation, e.g. 25134 or 2,5,1,3,4")
    source.add_argument("--path", help="Dyck path as a +/- string, e.g. ++--+-")
    bij_p.add_argument("--format", choices=["text", "json"], default="text")

    ver_p = subparsers.add_parser("verify", help="Run verification checks")
    ver_p.add_argument("--check", default="all", help="Check id, comma-separated ids, or 'all'")
    ver_p.add_argument(
        "--max-n", type=int, default=None, help="Range for every check (default: per check)"
    )
    ver_p.add_argument(
        "--slow", action="store_true", help="Default ranges from verify.slow_max_n (n <= 12)"
    )
    ver_p.add_argument("--format", choices=formats, default="json")
    ver_p.add_argument("--no-timing", action="store_true", help="Omit the ms field")
    ver_p.add_argument(
        "--report-file", default=None, help="Also append reports to this JSONL file"
    )
    ver_p.add_argument("--list", action="store_true", help="List check ids and exit")

    return parser.parse_args(argv)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _parse_class_set(text: str, n: int) -> DescentSet:
    parts = [part.strip() for part in text.split(",") if part.strip()]
    try:
        return DescentSet.from_indices((int(part) for part in parts), n)
    except ValueError as e:
        raise InvalidArgumentError(f"Cannot parse --B {text!r}: {e}") from e


def cmd_enumerate(args: argparse.Namespace, settings: Avoid321Settings) -> int:
    stats = [s.strip() for s in args.stats.split(",") if s.strip()]
    unknown = [s for s in stats if s not in STATISTICS]
    if unknown:
        raise InvalidArgumentError(f"Unknown statistics: {', '.join(unknown)}")

    if args.b is None:
        perms = enumerate_T(args.n)
    else:
        perms = enumerate_T_class(args.n, _parse_class_set(args.b, args.n))

    formatter = OutputFormatter(args.format)
    rows = ({"perm": p, **{s: STATISTICS[s](p) for s in stats}} for p in perms)
    for line in formatter.stream_records(rows, ["perm", *stats]):
        sys.stdout.write(line)
    return 0


def cmd_genfun(args: argparse.Namespace, settings: Avoid321Settings) -> int:
    method = GenFunMethod(args.method)
    workers = args.threads if args.n >= PARALLEL_MIN_N else 1
    poly = generating_function(args.n, method, workers=workers)
    if args.spec:
        poly = apply_spec(poly, args.spec)
    formatter = OutputFormatter(args.format)
    sys.stdout.write(formatter.polynomial(poly, n=args.n, method=method.value, spec=args.spec))
    return 0


def cmd_biject(args: argparse.Namespace, settings: Avoid321Settings) -> int:
    if args.perm is not None:
        chain = build_chain(parse_permutation(args.perm))
    else:
        chain = build_chain_from_path(DyckPath.parse(args.path))

    if args.format == "json":
        sys.stdout.write(json.dumps(chain_to_json(chain)) + "\n")
    else:
        sys.stdout.write(ChainRenderer().render(chain) + "\n")
    return 0


async def cmd_verify(args: argparse.Namespace, settings: Avoid321Settings) -> int:
    if args.list:
        load_builtin_checks()
        for check_id, spec in CHECK_REGISTRY.items():
            sys.stdout.write(f"{check_id}\t{spec.description}\n")
        return 0

    include_timing = settings.output.include_timing and not args.no_timing
    requested = [part.strip() for part in args.check.split(",") if part.strip()]
    pipeline = VerificationPipeline(settings, threads=args.threads)
    reports = await pipeline.run(requested, args.max_n, slow=args.slow)

    sys.stdout.write(OutputFormatter(args.format, include_timing).reports(reports))
    ReportLogger(args.report_file or settings.output.report_file, include_timing).log_reports(
        reports
    )

    failed = [r.check_id for r in reports if not r.passed]
    if failed:
        logger.warning(f"Failed checks: {', '.join(failed)}")
        return 1
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "genfun": cmd_genfun,
    "biject": cmd_biject,
}


async def main_async(argv: list[str] | None = None) -> int:
    """Parse arguments, run one command, and map errors to exit codes."""
    args = parse_args(argv)
    setup_logging(args.log_level)
    debug = args.log_level == "DEBUG"

    try:
        settings = get_settings()
    except ValueError as e:
        logger.error(f"Invalid settings: {e}")
        return 2

    if args.threads < 1:
        logger.error(f"--threads must be >= 1, got {args.threads}")
        return 2

    try:
        if args.command == "verify":
            return await cmd_verify(args, settings)
        return COMMANDS[args.command](args, settings)
    except Avoid321Error as e:
        logger.error(f"{type(e).__name__}: {e}", exc_info=debug)
        return e.exit_code


def main(argv: list[str] | None = None) -> None:
    """Main entry point."""
    try:
        code = asyncio.run(main_async(argv))
    except KeyboardInterrupt:
        code = 130
    sys.exit(code)


if __name__ == "__main__":
    main()
