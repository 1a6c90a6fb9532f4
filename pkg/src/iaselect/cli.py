"""Operator command line: import datasets, run queries, build reports, serve.

Exit codes: 0 success, 2 bad user input (tables, query syntax, criteria),
3 schema violation under --strict, 4 unreadable database, 5 environment
problems (busy port). ``IASELECT_DB`` provides the default --db path.
"""

from __future__ import annotations

import argparse
import csv
import os
import socket
import sys
from pathlib import Path

from . import document
from .matrix import MatrixError, WeightOutOfRange, import_matrix
from .query import QueryError, evaluate, parse
from .query.evaluate import EdgeSnapshot, ResultSet
from .recommend import (
    ContextSelection,
    InvalidCriteria,
    PracticeReport,
    UnknownContext,
    display_score,
    generate_report,
)
from .schema import CHARACTERISTIC_LABELS, PRACTICE, default_schema, validate
from .service import json_bytes, report_json_bytes

EXIT_OK = 0
EXIT_USER = 2
EXIT_SCHEMA = 3
EXIT_IO = 4
EXIT_ENV = 5


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_db(path: str | None):
    if not path:
        return None, _fail(EXIT_IO, "no database path: pass --db or set IASELECT_DB")
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        return None, _fail(EXIT_IO, f"cannot read database {path!r}: {exc}")
    try:
        return document.load(data), EXIT_OK
    except document.MalformedDocument as exc:
        return None, _fail(EXIT_IO, f"cannot load database {path!r}: {exc}")


def _render_table(headers: list[str], rows: list[list[str]], out) -> None:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    line = " | ".join(h.ljust(widths[i]) for i, h in enumerate(headers))
    print(line, file=out)
    print("-+-".join("-" * w for w in widths), file=out)
    for row in rows:
        print(" | ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)), file=out)


def _format_attr(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return f'"{value}"'
    return repr(value) if isinstance(value, float) else str(value)


def _format_snapshot(snapshot) -> str:
    attrs = " ".join(f"{k}={_format_attr(v)}" for k, v in sorted(snapshot.attrs.items()))
    if isinstance(snapshot, EdgeSnapshot):
        body = f"id={snapshot.id} :{snapshot.label}"
    else:
        body = f"id={snapshot.id} :{':'.join(snapshot.labels)}"
    return f"({body}{' ' + attrs if attrs else ''})"


def _print_result(result: ResultSet, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json_bytes(result.to_obj()).decode("utf-8") + "\n")
        return
    cells = [[_format_snapshot(row[var]) for var in result.columns] for row in result.rows]
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(result.columns)
        writer.writerows(cells)
        return
    _render_table(result.columns, cells, out)


def cmd_import(args) -> int:
    try:
        practices = Path(args.practices).read_bytes()
        matrix = Path(args.matrix).read_bytes()
    except OSError as exc:
        return _fail(EXIT_USER, f"cannot read input: {exc}")
    try:
        graph = import_matrix(practices, matrix, strict=args.strict)
    except WeightOutOfRange as exc:
        return _fail(EXIT_SCHEMA, str(exc))
    except MatrixError as exc:
        return _fail(EXIT_USER, str(exc))
    schema = default_schema()
    if args.strict:
        violations = validate(graph, schema)
        if violations:
            return _fail(EXIT_SCHEMA, f"{len(violations)} schema violations, first: {violations[0].message}")
    try:
        Path(args.out).write_bytes(document.save(graph, schema))
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot write {args.out!r}: {exc}")
    practices_n = len(graph.nodes_with_label(PRACTICE))
    characteristics_n = sum(len(graph.nodes_with_label(lab)) for lab in CHARACTERISTIC_LABELS)
    print(
        f"{practices_n} practices, {characteristics_n} characteristics, "
        f"{graph.edge_count()} weights",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_query(args) -> int:
    if args.query_file:
        try:
            text = Path(args.query_file).read_text(encoding="utf-8")
        except OSError as exc:
            return _fail(EXIT_USER, f"cannot read query file: {exc}")
    elif args.query is not None:
        text = args.query
    else:
        return _fail(EXIT_USER, "pass a query or -f FILE")
    loaded, code = _load_db(args.db)
    if loaded is None:
        return code
    graph, _schema = loaded
    try:
        query = parse(text)
    except QueryError as exc:
        lines = text.split("\n")
        if 1 <= exc.line <= len(lines):
            print(lines[exc.line - 1], file=sys.stderr)
            print(" " * (exc.column - 1) + "^", file=sys.stderr)
        return _fail(EXIT_USER, str(exc))
    _print_result(evaluate(query, graph), args.format, sys.stdout)
    return EXIT_OK


def _parse_weight_args(pairs: list[str]) -> dict[str, int] | None:
    criteria: dict[str, int] = {}
    for pair in pairs:
        name, sep, pct = pair.partition("=")
        if not sep or not name:
            return None
        try:
            criteria[name] = int(pct, 10)
        except ValueError:
            return None
    return criteria


def cmd_report(args) -> int:
    loaded, code = _load_db(args.db)
    if loaded is None:
        return code
    graph, _schema = loaded
    criteria = _parse_weight_args(args.weight or [])
    if criteria is None:
        return _fail(EXIT_USER, "each --weight must look like 'NAME=INTEGER'")
    context = ContextSelection(args.domain, args.function, args.host_agents)
    try:
        report = generate_report(context, criteria, graph)
    except InvalidCriteria as exc:
        return _fail(EXIT_USER, exc.errors[0].message)
    except UnknownContext as exc:
        return _fail(EXIT_USER, str(exc))
    _print_report(report, args.format, sys.stdout)
    return EXIT_OK


def _print_report(report: PracticeReport, fmt: str, out) -> None:
    if fmt == "json":
        out.write(report_json_bytes(report).decode("utf-8") + "\n")
        return
    headers = ["", "NAME", "API CLIENT", "CHANNEL", "FINAL-SCORE"]
    rows = [
        [
            "*" if row.name == report.recommended else "",
            row.name,
            row.api_client,
            row.channel,
            f"{display_score(row.final_score):.2f}",
        ]
        for row in report.rows
    ]
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(headers[1:])
        writer.writerows(row[1:] for row in rows)
        return
    _render_table(headers, rows, out)
    if report.excluded:
        print(f"excluded (cannot host agents): {', '.join(report.excluded)}", file=out)


def cmd_serve(args) -> int:
    import json as json_module

    try:
        import uvicorn
    except ImportError:  # pragma: no cover
        return _fail(EXIT_ENV, "uvicorn is not installed")
    from .store import GraphStore
    from .service import create_app

    if not args.db:
        return _fail(EXIT_IO, "no database path: pass --db or set IASELECT_DB")
    try:
        store = GraphStore.open(args.db, strict=True, readonly=args.readonly)
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot read database {args.db!r}: {exc}")
    except document.MalformedDocument as exc:
        return _fail(EXIT_IO, f"cannot load database {args.db!r}: {exc}")

    tokens: dict[str, str] = {}
    if args.tokens:
        try:
            tokens_obj = json_module.loads(Path(args.tokens).read_text(encoding="utf-8"))
        except (OSError, json_module.JSONDecodeError) as exc:
            return _fail(EXIT_IO, f"cannot read tokens file: {exc}")
        if not isinstance(tokens_obj, dict) or not all(
            isinstance(k, str) and v in ("user", "admin") for k, v in tokens_obj.items()
        ):
            return _fail(EXIT_USER, "tokens file must map token strings to 'user' or 'admin'")
        tokens = tokens_obj

    host = os.environ.get("IASELECT_HOST", "127.0.0.1")
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, args.port))
    except OSError as exc:
        return _fail(EXIT_ENV, f"cannot bind {host}:{args.port}: {exc}")
    finally:
        probe.close()

    origins = os.environ.get("IASELECT_CORS_ORIGINS")
    app = create_app(
        store,
        tokens=tokens,
        cors_origins=origins.split(",") if origins else None,
    )
    uvicorn.run(app, host=host, port=args.port, log_level="warning")
    return EXIT_OK


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iaselect", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    default_db = os.environ.get("IASELECT_DB")

    p_import = sub.add_parser("import", help="build a graph document from CSV tables")
    p_import.add_argument("--practices", required=True, help="practices table CSV")
    p_import.add_argument("--matrix", required=True, help="weights matrix CSV")
    p_import.add_argument("--out", required=True, help="output graph document path")
    p_import.add_argument("--strict", action="store_true",
                          help="reject out-of-range weights and schema violations")
    p_import.set_defaults(func=cmd_import)

    p_query = sub.add_parser("query", help="run a pattern query against a database")
    p_query.add_argument("query", nargs="?", help="query text")
    p_query.add_argument("-f", dest="query_file", help="read the query from a file")
    p_query.add_argument("--db", default=default_db, help="graph document path")
    p_query.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_query.set_defaults(func=cmd_query)

    p_report = sub.add_parser("report", help="generate a ranked practice report")
    p_report.add_argument("--db", default=default_db, help="graph document path")
    p_report.add_argument("--domain", required=True)
    p_report.add_argument("--function", required=True)
    p_report.add_argument("--host-agents", action="store_true",
                          help="only practices able to host agents")
    p_report.add_argument("--weight", action="append", metavar="NAME=PCT",
                          help="criteria percentage, repeatable; must total 100")
    p_report.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_report.set_defaults(func=cmd_report)

    p_serve = sub.add_parser("serve", help="serve the HTTP API")
    p_serve.add_argument("--db", default=default_db, help="graph document path")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--readonly", action="store_true")
    p_serve.add_argument("--tokens", help="JSON file mapping bearer tokens to roles")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    if getattr(args, "port", None) is not None and not 1 <= args.port <= 65535:
        return _fail(EXIT_USER, f"port must be in [1, 65535], got {args.port}")
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
