"""
SemiPrim - Main Entry Point
Semiprimitive Permutation Group Toolkit
"""

import argparse
import json
import sys

from src import config
from src.core.errors import SemiPrimError


def _emit(fmt, payload, rows=None, fields=None):
    """Write JSON or CSV to stdout; text output is handled by the caller."""
    from src.harness.report import write_rows

    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        write_rows(rows if rows is not None else payload, sys.stdout, fields)


def cmd_analyze(args):
    """Full analysis of one group."""
    from src.harness import console
    from src.harness.corpus import resolve_group
    from src.harness.report import CSV_FIELDS, analyze, flatten

    group = resolve_group(args.target)
    if args.format == "text":
        console.progress(f"Analyzing {args.target}")
    report = analyze(group, name=args.target)
    if args.format == "text":
        console.print_report(report)
    else:
        _emit(args.format, report.to_dict(), [flatten(report)], CSV_FIELDS)
    return 1 if report.failed else 0


def cmd_verify_bounds(args):
    """Bound verdicts for one transitive group."""
    from src.harness import console
    from src.harness.bounds import BoundEngine
    from src.harness.corpus import resolve_group

    group = resolve_group(args.target)
    engine = BoundEngine()
    verdicts = engine.evaluate(group)
    if args.format == "text":
        console.header(f"BOUNDS: {args.target}")
        console.print_verdicts(verdicts)
    else:
        _emit(args.format, [v.to_dict() for v in verdicts])
    return 1 if engine.failed else 0


def cmd_reproduce_tables(args):
    """Order, degree, base size and minimal degree of the seven exceptional groups."""
    from src.harness import console
    from src.harness.corpus import reproduce_tables

    progress = console.progress if args.format == "text" else None
    checks = reproduce_tables(progress=progress)
    if args.format == "text":
        console.print_tables(checks)
    else:
        rows = [{"name": c.name, **c.to_dict()["computed"], "matches": c.matches} for c in checks]
        _emit(args.format, [c.to_dict() for c in checks], rows)
    return 0 if all(c.matches for c in checks) else 1


def cmd_corpus(args):
    """Analyze every group of a corpus file."""
    from src.harness import console
    from src.harness.corpus import run_corpus_file
    from src.harness.report import entry_to_dict, write_csv

    result = run_corpus_file(args.config, seed=config.DEFAULT_SEED, progress=console.progress)
    if args.format == "text":
        console.print_entries(result.entries)
        console.print_summary(result.summary())
    elif args.format == "json":
        _emit("json", {"entries": [entry_to_dict(e) for e in result.entries], "summary": result.summary()})
    else:
        write_csv(result.entries, sys.stdout)
    for entry in result.errors:
        console.print_error(entry, sys.stderr)
    return result.exit_code


def cmd_lemmas(args):
    """Numerical lemmas, and the quotient lemmas over a corpus when one is given."""
    from src.actions.taxonomy import is_semiprimitive
    from src.classification.numerical import numerical_lemma_checks, quotient_lemma_checks
    from src.harness import console
    from src.harness.corpus import parse_corpus, resolve_group

    reports = numerical_lemma_checks()
    quotient = []
    errors = []
    if args.corpus:
        with open(args.corpus, encoding="utf-8") as fh:
            items = parse_corpus(fh.read(), config.DEFAULT_SEED)
        for item in items:
            if item[0] != "entry":
                continue
            try:
                group = resolve_group(item[1])
                if is_semiprimitive(group):
                    console.progress(f"Quotient lemmas for {item[1]}")
                    quotient.append((item[1], quotient_lemma_checks(group)))
            except SemiPrimError as e:
                errors.append({"name": item[1], "error": str(e)})

    if args.format == "text":
        console.print_lemmas(reports, quotient)
    else:
        payload = {
            "numerical": [r.to_dict() for r in reports],
            "quotient": [{"name": n, **r.to_dict()} for n, results in quotient for r in results],
            "errors": errors,
        }
        rows = [{"name": r["name"], "passed": r["passed"], "checked": r["checked"]} for r in payload["numerical"]]
        rows += [{"name": q["name"], "passed": q["holds"], "checked": 1} for q in payload["quotient"]]
        _emit(args.format, payload, rows)

    for entry in errors:
        console.print_error(entry, sys.stderr)
    ok = all(r.passed for r in reports) and all(r.holds for _, results in quotient for r in results)
    return 0 if ok else 1


def cmd_atlas(args):
    """Print the generator file of an atlas entry, or rewrite the shipped data files."""
    from src.atlas.registry import ATLAS_NAMES, atlas_load, write_atlas_data
    from src.core.permutation import format_generators
    from src.harness import console

    if args.write_data:
        write_atlas_data([args.name] if args.name else ATLAS_NAMES, progress=console.progress)
        return 0
    if not args.name:
        print("error: an atlas entry name is required", file=sys.stderr)
        return 2
    group = atlas_load(args.name)
    sys.stdout.write(format_generators(group.degree, group.generators))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", "-f", choices=("json", "csv", "text"), default=config.DEFAULT_FORMAT,
                        help=f"Output format (default: {config.DEFAULT_FORMAT})")
    common.add_argument("--census-cap", type=int, help="Element enumeration cap")
    common.add_argument("--time-budget", type=float, help="Base-size search budget per group, seconds")
    common.add_argument("--seed", type=int, help="Seed for @random corpus directives")

    parser = argparse.ArgumentParser(
        description="SemiPrim - Semiprimitive Permutation Group Toolkit"
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    p = subparsers.add_parser("analyze", parents=[common], help="Analyze one group")
    p.add_argument("target", help="Group expression, atlas name or generator file")
    p.set_defaults(handler=cmd_analyze)

    p = subparsers.add_parser("verify-bounds", parents=[common], help="Check the bounds for one group")
    p.add_argument("target", help="Group expression, atlas name or generator file")
    p.set_defaults(handler=cmd_verify_bounds)

    p = subparsers.add_parser("reproduce-tables", parents=[common], help="Recompute the exceptional group tables")
    p.set_defaults(handler=cmd_reproduce_tables)

    p = subparsers.add_parser("corpus", parents=[common], help="Analyze every group in a corpus file")
    p.add_argument("config", help="Corpus file, one group per line")
    p.set_defaults(handler=cmd_corpus)

    p = subparsers.add_parser("lemmas", parents=[common], help="Run the numerical and quotient lemma checks")
    p.add_argument("--corpus", help="Corpus file for the quotient lemmas")
    p.set_defaults(handler=cmd_lemmas)

    p = subparsers.add_parser("atlas", parents=[common], help="Print the generators of an atlas group")
    p.add_argument("name", nargs="?", help="Atlas entry name")
    p.add_argument("--write-data", action="store_true",
                   help="Regenerate the shipped generator files from the recipes (all entries unless a name is given)")
    p.set_defaults(handler=cmd_atlas)
    return parser


def apply_overrides(args):
    if args.census_cap is not None:
        config.CENSUS_CAP = args.census_cap
    if args.time_budget is not None:
        config.TIME_BUDGET = args.time_budget
    if args.seed is not None:
        config.DEFAULT_SEED = args.seed


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        print("\n  Examples:")
        print("    python -m src.main analyze 'GL(2,4)'            Full report for one group")
        print("    python -m src.main verify-bounds 'AGL(3,2)'     Bound verdicts")
        print("    python -m src.main reproduce-tables             Exceptional group tables")
        print("    python -m src.main corpus corpus/default.txt    Run the default corpus")
        print("    python -m src.main lemmas --corpus corpus/default.txt")
        print()
        return 0

    apply_overrides(args)
    if args.format == "text":
        from src.harness.console import BANNER
        print(BANNER)

    try:
        return args.handler(args)
    except SemiPrimError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
