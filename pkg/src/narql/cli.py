"""Command-line interface: one-shot translation, JSONL batch mode and a REPL."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import NarqlError
from .lexicon import Lexicon, SymbolClass, load_bundled_lexicon, load_lexicon_file
from .minidb import Database, ExecuteOptions, MutationSummary, ResultSet, execute, \
    load_bundled_seed, load_seed
from .pipeline import TranslationReport, translate
from .schema import SchemaCatalog, chinook_catalog
from .sqlgen import DeleteQuery, SelectQuery

_GREEN = "\x1b[32m"
_RED = "\x1b[31m"
_BLUE = "\x1b[34m"
_RESET = "\x1b[0m"

_CLASS_COLORS = {
    SymbolClass.QUERY_VERB: _GREEN,
    SymbolClass.ATTRIBUTE_TERM: _RED,
    SymbolClass.RELATION_TERM: _BLUE,
}


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="narql",
        description="Translate local-language narrations into SQL queries "
                    "and run them against the embedded music store.",
    )
    parser.add_argument("--lexicon", metavar="PATH",
                        help="lexicon TSV file (default: bundled, or $NARQL_LEXICON)")
    parser.add_argument("--seed", metavar="PATH",
                        help="seed CSV directory (default: bundled)")
    parser.add_argument("--translate", metavar="TEXT",
                        help="translate one narration and exit")
    parser.add_argument("--batch", metavar="FILE",
                        help="translate one narration per line, emitting JSONL")
    parser.add_argument("--output", choices=("text", "json"), default="text",
                        help="report format for --translate (default: text)")
    parser.add_argument("--allow-full-delete", action="store_true",
                        help="let translated DELETE statements run")
    return parser


def load_environment(args) -> tuple[Lexicon, SchemaCatalog, Database]:
    lexicon_path = args.lexicon or os.environ.get("NARQL_LEXICON")
    lexicon = load_lexicon_file(lexicon_path) if lexicon_path else load_bundled_lexicon()
    schema = chinook_catalog()
    db = load_seed(args.seed, schema) if args.seed else load_bundled_seed()
    return lexicon, schema, db


def colorize_tokens(report: TranslationReport, color: bool) -> str:
    parts = []
    for token in report.tokens:
        entry = token.entry
        if entry is None or not color:
            parts.append(token.surface)
        else:
            parts.append(f"{_CLASS_COLORS[entry.symbol_class]}{token.surface}{_RESET}")
    return " ".join(parts)


def format_table(result: ResultSet) -> str:
    headers = list(result.columns)
    cells = [["" if v is None else str(v) for v in row] for row in result.rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, value in enumerate(row):
            widths[i] = max(widths[i], len(value))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * widths[i] for i in range(len(headers))),
    ]
    for row in cells:
        lines.append("  ".join(v.ljust(widths[i]) for i, v in enumerate(row)).rstrip())
    lines.append(f"({len(result.rows)} row{'s' if len(result.rows) != 1 else ''})")
    return "\n".join(lines)


def _execute_for_report(report: TranslationReport, db: Database,
                        allow_full_delete: bool):
    """Run the translated query when it is safe to do so.

    Returns (result, note): selects always run; deletes only behind the
    flag; inserts/creates never (placeholders unbound, catalog fixed).
    """
    if report.query is None:
        return None, None
    if isinstance(report.query, SelectQuery):
        return execute(db, report.query), None
    if isinstance(report.query, DeleteQuery):
        if allow_full_delete:
            options = ExecuteOptions(allow_full_delete=True)
            return execute(db, report.query, options), None
        return None, "execution skipped: full-table delete needs --allow-full-delete"
    return None, "execution skipped: statement is a template, not run against the store"


def print_text_report(report: TranslationReport, result, note: str | None,
                      out=None) -> None:
    out = out or sys.stdout
    color = hasattr(out, "isatty") and out.isatty()
    print(colorize_tokens(report, color), file=out)
    if report.error is not None:
        err = report.error
        print(f"error [{err.stage or 'input'}/{err.code}]: {err.message}", file=out)
        return
    print(report.sql, file=out)
    if isinstance(result, ResultSet):
        print(format_table(result), file=out)
    elif isinstance(result, MutationSummary):
        print(f"({result.affected} row{'s' if result.affected != 1 else ''} "
              f"{result.operation}d)", file=out)
    elif note:
        print(note, file=out)


def report_json(report: TranslationReport, result) -> str:
    payload = report.to_dict()
    if result is not None:
        payload["result"] = result.to_dict()
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def run_translate(args, lexicon: Lexicon, schema: SchemaCatalog, db: Database) -> int:
    report = translate(args.translate, lexicon, schema)
    result = note = None
    if report.ok:
        try:
            result, note = _execute_for_report(report, db, args.allow_full_delete)
        except NarqlError as err:
            report.error = err
    if args.output == "json":
        print(report_json(report, result))
    else:
        print_text_report(report, result, note)
    return 0 if report.ok else 2


def run_batch(args, lexicon: Lexicon, schema: SchemaCatalog, db: Database) -> int:
    try:
        with open(args.batch, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as err:
        print(f"narql: cannot read {args.batch}: {err}", file=sys.stderr)
        return 1
    failed = False
    for line in lines:
        report = translate(line, lexicon, schema)
        print(report.to_json())
        failed = failed or not report.ok
    return 2 if failed else 0


def _print_schema(schema: SchemaCatalog, out) -> None:
    for table in schema.table_names():
        columns = ", ".join(f"{c.name} {c.type.sql}" for c in schema.columns(table))
        print(f"{table}: {columns}", file=out)


def _print_languages(lexicon: Lexicon, out) -> None:
    for tag, count in lexicon.languages().items():
        print(f"{tag}: {count} word{'s' if count != 1 else ''}", file=out)


def run_repl(args, lexicon: Lexicon, schema: SchemaCatalog, db: Database) -> int:
    interactive = sys.stdin.isatty()
    if interactive:
        print("narql console — type a narration, :schema, :lang or :quit")
    while True:
        if interactive:
            print("narql> ", end="", flush=True)
        line = sys.stdin.readline()
        if not line:
            return 0
        line = line.strip()
        if not line:
            continue
        if line == ":quit":
            return 0
        if line == ":schema":
            _print_schema(schema, sys.stdout)
            continue
        if line == ":lang":
            _print_languages(lexicon, sys.stdout)
            continue
        report = translate(line, lexicon, schema)
        result = note = None
        if report.ok:
            try:
                result, note = _execute_for_report(report, db, args.allow_full_delete)
            except NarqlError as err:
                report.error = err
        print_text_report(report, result, note)


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.translate is not None and args.batch is not None:
        print("narql: --translate and --batch are mutually exclusive", file=sys.stderr)
        return 1
    try:
        lexicon, schema, db = load_environment(args)
    except (OSError, NarqlError) as err:
        print(f"narql: {err}", file=sys.stderr)
        return 1
    if args.translate is not None:
        return run_translate(args, lexicon, schema, db)
    if args.batch is not None:
        return run_batch(args, lexicon, schema, db)
    return run_repl(args, lexicon, schema, db)


if __name__ == "__main__":
    sys.exit(main())
