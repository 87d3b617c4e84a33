"""
pgc command line

Usage:
    pgc analyze --catalog phi23 --p 5 --theorem A       # Classify a catalog group
    pgc analyze --file heisenberg.pcp --witnesses       # Analyze an exported presentation
    pgc analyze --catalog T2_9 --theorem B --report json -o t2.json
    pgc batch exports/ -o reports.jsonl                 # One JSON line per .pcp file
    pgc catalog list                                    # Entries with parameters and constraints
    pgc catalog build F_mod_R1 --p 3 -o g.pcp           # Canonical .pcp document
    pgc verify --p 3 --p 5                              # Sweep the catalog

Exit codes: 0 success, 1 usage error, 2 hypothesis or consistency failure (or a failed sweep).
"""

import argparse
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional

from catalog import catalog_build, get_catalog_entries, get_entry_by_name
from pgc import __version__
from pgc.errors import (
    CatalogError,
    ConsistencyError,
    FieldError,
    HypothesisError,
    PgcError,
    PresentationError,
    PresentationSyntaxError,
)
from pgc.logging_config import get_logger
from pgc.presentation import parse_presentation, serialize_presentation
from pgc.schemas import CatalogListing, Theorem
from pgc.services import AnalysisService, BatchRunner, VerificationSweep, render_row, render_text
from pgc.services.analysis_service import catalog_identity, file_identity

logger = get_logger()

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2

DEFAULT_VERIFY_PRIMES = [2, 3]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_group_params(parser: argparse.ArgumentParser):
    parser.add_argument("--p", type=int, help="Prime")
    parser.add_argument("--r", type=int, help="Parameter r (F_mod_R1, T2_9 family)")
    parser.add_argument("--s", type=int, help="Parameter s (T2_9 family)")
    parser.add_argument("--t", type=int, help="Parameter t (T2_9 family)")
    parser.add_argument("--n", type=int, help="Number of generators (elementary_abelian, free_class2_expp)")
    parser.add_argument("--kind", help="exp_p or exp_p2 (extraspecial_p3)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pgc", description="Commutator sets and classification checks for finite p-groups")
    parser.add_argument("--version", action="version", version=f"pgc {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    analyze = sub.add_parser("analyze", help="Analyze one group")
    source = analyze.add_mutually_exclusive_group(required=True)
    source.add_argument("--catalog", metavar="NAME", help="Catalog entry name")
    source.add_argument("--file", metavar="PATH", help=".pcp document")
    _add_group_params(analyze)
    analyze.add_argument("--theorem", choices=[t.value for t in Theorem], help="Classify under theorem A or B")
    analyze.add_argument("--witnesses", action="store_true", help="List every non-commutator of γ2(G)")
    analyze.add_argument("--lemmas", action="store_true", help="Add the lemma suite")
    analyze.add_argument("--timings", action="store_true", help="Add per-phase timings")
    analyze.add_argument("--budget", type=int, help="Cap on pseudo-isometry and quadruple searches")
    analyze.add_argument("--report", choices=["text", "json"], default="text", help="Output format (default: text)")
    analyze.add_argument("-o", "--output", metavar="PATH", help="Write the report here instead of stdout")

    batch = sub.add_parser("batch", help="Analyze every .pcp file of a directory (JSONL)")
    batch.add_argument("directory", help="Directory of .pcp documents")
    batch.add_argument("-o", "--output", metavar="PATH", help="JSONL destination (default: stdout)")
    batch.add_argument("--witnesses", action="store_true", help="Include witnesses in each report")
    batch.add_argument("--workers", type=int, help="Files analyzed concurrently")
    batch.add_argument("--budget", type=int, help="Cap on search work")
    batch.add_argument("--report", choices=["json"], default="json", help="Output format; batches are always JSONL")

    cat = sub.add_parser("catalog", help="List or build catalog groups")
    cat_sub = cat.add_subparsers(dest="catalog_command", parser_class=_Parser)
    listing = cat_sub.add_parser("list", help="List entries")
    listing.add_argument("--report", choices=["text", "json"], default="text")
    build = cat_sub.add_parser("build", help="Write the .pcp document of an entry")
    build.add_argument("name", help="Catalog entry name")
    _add_group_params(build)
    build.add_argument("--no-check", action="store_true", help="Skip the consistency check")
    build.add_argument("-o", "--output", metavar="PATH", help="Destination (default: stdout)")

    verify = sub.add_parser("verify", help="Classify and cross-check the catalog")
    verify.add_argument("--p", type=int, action="append", help="Prime to sweep (repeatable; default 2 and 3)")
    verify.add_argument("--entry", action="append", help="Restrict to these entries (repeatable)")
    verify.add_argument("--budget", type=int, help="Cap on search work")
    verify.add_argument("--report", choices=["text", "json"], default="text")
    verify.add_argument("-o", "--output", metavar="PATH", help="Destination (default: stdout)")
    return parser


@contextmanager
def _output(path: Optional[str]):
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            yield handle
    else:
        yield sys.stdout


def _group_params(args) -> dict:
    return {k: getattr(args, k) for k in ("p", "r", "s", "t", "n", "kind") if getattr(args, k, None) is not None}


def cmd_analyze(args) -> int:
    covering = None
    if args.catalog:
        entry = get_entry_by_name(args.catalog)
        if entry is None:
            raise CatalogError(f"unknown catalog entry {args.catalog!r}")
        params = entry.validate(_group_params(args))
        pres = catalog_build(args.catalog, params)
        identity = catalog_identity(pres, args.catalog, params)
        covering = entry.covering_family(params)
    else:
        if _group_params(args):
            raise UsageError("group parameters only apply to --catalog")
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot read {args.file}: {e}") from None
        pres = parse_presentation(text)
        identity = file_identity(pres, args.file)

    theorem = Theorem(args.theorem) if args.theorem else None
    report = AnalysisService(args.budget).analyze(
        pres,
        identity,
        theorem=theorem,
        witnesses=args.witnesses,
        lemmas=args.lemmas,
        timings=args.timings,
        covering=covering,
    )
    with _output(args.output) as out:
        if args.report == "json":
            out.write(report.model_dump_json(exclude_none=False, indent=2) + "\n")
        else:
            out.write(render_text(report) + "\n")
    return EXIT_OK


def cmd_batch(args) -> int:
    runner = BatchRunner(workers=args.workers, witnesses=args.witnesses, budget=args.budget)
    try:
        with _output(args.output) as out:
            runner.run(args.directory, out)
    except OSError as e:
        raise UsageError(str(e)) from None
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.catalog_command == "list":
        listing = CatalogListing(entries=[cls().to_model() for cls in get_catalog_entries().values()])
        if args.report == "json":
            sys.stdout.write(listing.model_dump_json(indent=2) + "\n")
            return EXIT_OK
        for model in listing.entries:
            params = ", ".join(
                f"{p.name}={p.default}" if p.default is not None else p.name for p in model.parameters
            )
            flag = "  [known inconsistent]" if model.known_inconsistent else ""
            sys.stdout.write(f"{model.name:<26} ({params}){flag}\n")
            sys.stdout.write(f"    {model.description}\n")
            sys.stdout.write(f"    reference: {model.reference}\n")
            if model.constraints:
                sys.stdout.write(f"    constraints: {'; '.join(model.constraints)}\n")
            for note in model.notes:
                sys.stdout.write(f"    note: {note}\n")
        return EXIT_OK
    if args.catalog_command == "build":
        pres = catalog_build(args.name, _group_params(args), check=not args.no_check)
        with _output(args.output) as out:
            out.write(serialize_presentation(pres))
        if args.output:
            logger.info(f"Wrote {args.name} (order {pres.p}^{pres.n}) to {args.output}")
        return EXIT_OK
    raise UsageError("catalog needs a subcommand: list or build")


def cmd_verify(args) -> int:
    names = args.entry
    if names:
        unknown = [n for n in names if get_entry_by_name(n) is None]
        if unknown:
            raise CatalogError(f"unknown catalog entries: {', '.join(unknown)}")
    sweep = VerificationSweep(args.p or DEFAULT_VERIFY_PRIMES, names=names, budget=args.budget)
    rows = sweep.run()
    with _output(args.output) as out:
        for row in rows:
            out.write((row.model_dump_json() if args.report == "json" else render_row(row)) + "\n")
        summary = sweep.summary()
        if args.report == "json":
            out.write(summary.model_dump_json() + "\n")
        else:
            out.write(f"{summary.rows} group(s): {summary.ok} ok, {summary.failed} failed, {summary.skipped} skipped\n")
    return EXIT_OK if all(row.ok for row in rows) else EXIT_FAILED


COMMANDS = {
    "analyze": cmd_analyze,
    "batch": cmd_batch,
    "catalog": cmd_catalog,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE
    except HypothesisError as e:
        logger.error(f"Hypothesis failure: {e}")
        if e.record is not None and e.record.reading:
            logger.info(f"Reading: {e.record.reading}")
        return EXIT_FAILED
    except ConsistencyError as e:
        logger.error(f"Consistency failure: {e}")
        return EXIT_FAILED
    except (CatalogError, PresentationSyntaxError, PresentationError, FieldError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except PgcError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILED
