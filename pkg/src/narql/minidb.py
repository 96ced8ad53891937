"""In-memory single-relation executor over CSV-seeded tables.

Rows live in plain lists with no indexes; every scan is linear, which is
fine at sample-database scale and keeps the behaviour easy to audit.
Mutations go through a single writer lock and swap whole row lists, so
concurrent readers never see a half-applied delete.
"""

from __future__ import annotations

import csv
import threading
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from importlib import resources
from pathlib import Path

from .errors import (
    DuplicateKey,
    FullDeleteNotAllowed,
    HeaderMismatch,
    MissingTableFile,
    RowTypeError,
    TableExists,
    UnboundPlaceholder,
)
from .schema import ColumnType, SchemaCatalog, chinook_catalog
from .sqlgen import (
    BoolExpr,
    Comparison,
    CreateQuery,
    DeleteQuery,
    InsertQuery,
    Predicate,
    SelectQuery,
    SqlQuery,
)


@dataclass
class TableData:
    name: str
    rows: list[tuple]


@dataclass(frozen=True)
class ResultSet:
    columns: tuple[str, ...]
    rows: list[tuple]

    def to_dict(self) -> dict:
        return {
            "columns": list(self.columns),
            "rows": [[_json_value(v) for v in row] for row in self.rows],
        }


@dataclass(frozen=True)
class MutationSummary:
    operation: str
    affected: int

    def to_dict(self) -> dict:
        return {"operation": self.operation, "affected": self.affected}


def _json_value(value):
    if isinstance(value, Decimal):
        return str(value)
    return value


@dataclass(frozen=True)
class ExecuteOptions:
    allow_full_delete: bool = False
    insert_values: tuple | None = None


@dataclass
class Database:
    schema: SchemaCatalog
    tables: dict[str, TableData]
    _write_lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def row_count(self, table: str) -> int:
        return len(self.tables[table].rows)


def _coerce(value: str, ctype: ColumnType):
    if ctype is ColumnType.TEXT:
        return value
    if value == "":
        return None
    if ctype is ColumnType.INTEGER:
        return int(value)
    return Decimal(value)


def load_seed(directory, schema: SchemaCatalog | None = None) -> Database:
    """Build a database from one CSV file per catalog table.

    Each file needs a header row matching the schema columns in order;
    values are coerced to the declared types, empty cells becoming NULL for
    numeric columns.
    """
    schema = schema or chinook_catalog()
    directory = Path(directory)
    tables: dict[str, TableData] = {}
    for table, columns in schema.tables.items():
        path = directory / f"{table}.csv"
        if not path.exists():
            raise MissingTableFile(f"seed file {table}.csv not found in {directory}")
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            expected = [c.name for c in columns]
            if header != expected:
                raise HeaderMismatch(
                    f"{table}.csv header {header} does not match schema columns {expected}"
                )
            rows: list[tuple] = []
            pk = schema.primary_keys.get(table)
            pk_index = expected.index(pk) if pk else None
            seen_keys: set = set()
            for rownum, record in enumerate(reader, start=2):
                if len(record) != len(columns):
                    raise RowTypeError(
                        f"{table}.csv: expected {len(columns)} values, got {len(record)}",
                        row=rownum,
                    )
                typed = []
                for value, column in zip(record, columns):
                    try:
                        typed.append(_coerce(value, column.type))
                    except (ValueError, InvalidOperation):
                        raise RowTypeError(
                            f"{table}.csv: {value!r} is not a valid {column.type.value} "
                            f"for {column.name}",
                            row=rownum,
                        ) from None
                if pk_index is not None:
                    key = typed[pk_index]
                    if key in seen_keys:
                        raise DuplicateKey(f"{table}.csv: duplicate {pk} value {key!r}")
                    seen_keys.add(key)
                rows.append(tuple(typed))
        tables[table] = TableData(name=table, rows=rows)
    return Database(schema=schema, tables=tables)


def bundled_seed_path():
    return resources.files("narql").joinpath("data/seed")


def load_bundled_seed() -> Database:
    with resources.as_file(bundled_seed_path()) as path:
        return load_seed(path)


def _column_index(schema: SchemaCatalog, table: str, column: str) -> int:
    return schema.column_names(table).index(column)


def _literal_as(value: str, ctype: ColumnType):
    try:
        return _coerce(value, ctype)
    except (ValueError, InvalidOperation):
        return None  # uncoercible literal can never equal a typed cell


def evaluate_predicate(predicate: Predicate, row: tuple,
                       schema: SchemaCatalog, table: str) -> bool:
    """Equality predicate over one row; comparisons coerce the literal to
    the column's type and are case-sensitive for text."""
    if isinstance(predicate, Comparison):
        idx = _column_index(schema, table, predicate.column)
        ctype = schema.columns(table)[idx].type
        literal = _literal_as(predicate.literal, ctype)
        cell = row[idx]
        if cell is None or literal is None:
            return False
        return cell == literal
    if isinstance(predicate, BoolExpr):
        left = evaluate_predicate(predicate.left, row, schema, table)
        right = evaluate_predicate(predicate.right, row, schema, table)
        return (left and right) if predicate.op == "AND" else (left or right)
    raise TypeError(f"not a predicate: {predicate!r}")


def execute(db: Database, query: SqlQuery,
            options: ExecuteOptions | None = None) -> ResultSet | MutationSummary:
    """Run one query; SELECTs return a ResultSet, mutations a summary."""
    options = options or ExecuteOptions()
    if isinstance(query, SelectQuery):
        return _execute_select(db, query)
    if isinstance(query, InsertQuery):
        return _execute_insert(db, query, options)
    if isinstance(query, DeleteQuery):
        return _execute_delete(db, query, options)
    if isinstance(query, CreateQuery):
        raise TableExists(f"table {query.relation} already exists in the fixed catalog")
    raise TypeError(f"not a query: {query!r}")


def _execute_select(db: Database, query: SelectQuery) -> ResultSet:
    table = query.relation
    all_columns = db.schema.column_names(table)
    columns = list(query.columns) if query.columns is not None else all_columns
    indices = [all_columns.index(c) for c in columns]
    rows = db.tables[table].rows  # snapshot reference; writers swap whole lists
    out: list[tuple] = []
    for row in rows:
        if query.predicate and not evaluate_predicate(query.predicate, row, db.schema, table):
            continue
        out.append(tuple(row[i] for i in indices))
    if query.distinct:
        deduped: list[tuple] = []
        seen: set = set()
        for row in out:
            if row not in seen:
                seen.add(row)
                deduped.append(row)
        out = deduped
    return ResultSet(columns=tuple(columns), rows=out)


def _execute_insert(db: Database, query: InsertQuery,
                    options: ExecuteOptions) -> MutationSummary:
    if options.insert_values is None:
        raise UnboundPlaceholder(
            f"INSERT INTO {query.relation} carries unbound placeholders; bind values to run it"
        )
    columns = db.schema.columns(query.relation)
    if len(options.insert_values) != len(columns):
        raise UnboundPlaceholder(
            f"expected {len(columns)} values for {query.relation}, "
            f"got {len(options.insert_values)}"
        )
    typed = []
    for value, column in zip(options.insert_values, columns):
        # strings are coerced like seed cells; already-typed values pass through
        typed.append(_coerce(value, column.type) if isinstance(value, str) else value)
    pk = db.schema.primary_keys.get(query.relation)
    with db._write_lock:
        rows = db.tables[query.relation].rows
        if pk:
            idx = _column_index(db.schema, query.relation, pk)
            if any(r[idx] == typed[idx] for r in rows):
                raise DuplicateKey(f"duplicate {pk} value {typed[idx]!r}")
        db.tables[query.relation].rows = rows + [tuple(typed)]
    return MutationSummary(operation="insert", affected=1)


def _execute_delete(db: Database, query: DeleteQuery,
                    options: ExecuteOptions) -> MutationSummary:
    table = query.relation
    if query.predicate is None and not options.allow_full_delete:
        raise FullDeleteNotAllowed(
            f"DELETE FROM {table} without a predicate needs allow_full_delete"
        )
    with db._write_lock:
        rows = db.tables[table].rows
        if query.predicate is None:
            kept: list[tuple] = []
        else:
            kept = [r for r in rows
                    if not evaluate_predicate(query.predicate, r, db.schema, table)]
        removed = len(rows) - len(kept)
        db.tables[table].rows = kept
    return MutationSummary(operation="delete", affected=removed)
