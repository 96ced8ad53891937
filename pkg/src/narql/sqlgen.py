"""SQL query AST, generation from query intents, and canonical rendering.

The supported surface is deliberately small: single-relation SELECT
(star or column list, optional DISTINCT, equality WHERE with AND/OR),
INSERT with positional placeholders, full-table DELETE and CREATE TABLE
from the catalog.  parse_select understands the same SELECT subset so the
executor can be driven from plain text in tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from .errors import SqlSyntaxError, UnknownColumn, UnknownRelation
from .lexicon import QueryOperation
from .schema import ATTRIBUTE_COLUMNS, RELATION_TABLES, ColumnDef, SchemaCatalog

if TYPE_CHECKING:
    from .pipeline import QueryIntent

# marker used in intents and projections for "all columns"
ALL_MARKER = "*"


@dataclass(frozen=True)
class Comparison:
    column: str
    literal: str


@dataclass(frozen=True)
class BoolExpr:
    op: str  # AND | OR
    left: "Predicate"
    right: "Predicate"


Predicate = Union[Comparison, BoolExpr]


@dataclass(frozen=True)
class SelectQuery:
    relation: str
    columns: tuple[str, ...] | None  # None means star projection
    distinct: bool = False
    predicate: Predicate | None = None

    def __post_init__(self):
        if self.columns is not None and not self.columns:
            raise ValueError("column projection must be non-empty")


@dataclass(frozen=True)
class InsertQuery:
    relation: str
    columns: tuple[str, ...]


@dataclass(frozen=True)
class DeleteQuery:
    relation: str
    predicate: Predicate | None = None


@dataclass(frozen=True)
class CreateQuery:
    relation: str
    columns: tuple[ColumnDef, ...]


SqlQuery = Union[SelectQuery, InsertQuery, DeleteQuery, CreateQuery]


def generate(intent: "QueryIntent", schema: SchemaCatalog) -> SqlQuery:
    """Turn an extracted intent into a query AST against the catalog."""
    table = RELATION_TABLES.get(intent.relation)
    if table is None or table not in schema.tables:
        raise UnknownRelation(f"relation symbol {intent.relation!r} has no table")
    wants_all = list(intent.attributes) == [ALL_MARKER]

    if intent.operation is QueryOperation.SELECT:
        if wants_all:
            return SelectQuery(relation=table, columns=None)
        columns = []
        table_columns = set(schema.column_names(table))
        for symbol in intent.attributes:
            column = ATTRIBUTE_COLUMNS.get(symbol)
            if column is None or column not in table_columns:
                raise UnknownColumn(
                    f"attribute {symbol!r} ({column or 'unmapped'}) is not a column of {table}"
                )
            if column not in columns:
                columns.append(column)
        return SelectQuery(relation=table, columns=tuple(columns))

    if intent.operation is QueryOperation.INSERT:
        return InsertQuery(relation=table, columns=tuple(schema.column_names(table)))

    if intent.operation is QueryOperation.DELETE:
        return DeleteQuery(relation=table)

    if intent.operation is QueryOperation.CREATE:
        return CreateQuery(relation=table, columns=schema.columns(table))

    raise ValueError(f"unsupported operation {intent.operation}")


def _render_literal(value: str) -> str:
    return "'" + value.replace("'", "''") + "'"


def render_predicate(predicate: Predicate) -> str:
    if isinstance(predicate, Comparison):
        return f"{predicate.column}={_render_literal(predicate.literal)}"
    return f"{render_predicate(predicate.left)} {predicate.op} {render_predicate(predicate.right)}"


def render(query: SqlQuery) -> str:
    """Canonical SQL text: uppercase keywords, schema casing, one semicolon."""
    if isinstance(query, SelectQuery):
        head = "SELECT DISTINCT" if query.distinct else "SELECT"
        projection = ALL_MARKER if query.columns is None else ", ".join(query.columns)
        where = f" WHERE {render_predicate(query.predicate)}" if query.predicate else ""
        return f"{head} {projection} FROM {query.relation}{where};"
    if isinstance(query, InsertQuery):
        names = ", ".join(query.columns)
        marks = ", ".join("?" for _ in query.columns)
        return f"INSERT INTO {query.relation} ({names}) VALUES ({marks});"
    if isinstance(query, DeleteQuery):
        where = f" WHERE {render_predicate(query.predicate)}" if query.predicate else ""
        return f"DELETE FROM {query.relation}{where};"
    if isinstance(query, CreateQuery):
        cols = ", ".join(f"{c.name} {c.type.sql}" for c in query.columns)
        return f"CREATE TABLE {query.relation} ({cols});"
    raise TypeError(f"not a query: {query!r}")


# -- SELECT parsing -----------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<string>'(?:[^']|'')*')"
    r"|(?P<word>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<number>\d+(?:\.\d+)?)"
    r"|(?P<punct>[*,=;]))"
)

_KEYWORDS = {"SELECT", "DISTINCT", "FROM", "WHERE", "AND", "OR"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad = pos + (len(text) - pos - len(stripped))
            raise SqlSyntaxError(f"unexpected character {stripped[0]!r}", position=bad)
        kind = match.lastgroup
        value = match.group(kind)
        start = match.start(kind)
        if kind == "word" and value.upper() in _KEYWORDS:
            tokens.append(("keyword", value.upper(), start))
        elif kind == "string":
            tokens.append(("string", value[1:-1].replace("''", "'"), start))
        else:
            tokens.append((kind, value, start))
        pos = match.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _SelectParser:
    def __init__(self, text: str, schema: SchemaCatalog):
        self.tokens = _tokenize(text)
        self.schema = schema
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        token = self.tokens[self.i]
        self.i += 1
        return token

    def expect(self, kind: str, value: str | None = None):
        token = self.peek()
        if token[0] != kind or (value is not None and token[1] != value):
            wanted = value or kind
            raise SqlSyntaxError(f"expected {wanted}, found {token[1] or 'end of input'!r}",
                                 position=token[2])
        return self.advance()

    def parse(self) -> SelectQuery:
        self.expect("keyword", "SELECT")
        distinct = False
        if self.peek()[:2] == ("keyword", "DISTINCT"):
            self.advance()
            distinct = True
        columns = self.parse_projection()
        self.expect("keyword", "FROM")
        relation = self.parse_relation()
        predicate = None
        if self.peek()[:2] == ("keyword", "WHERE"):
            self.advance()
            predicate = self.parse_predicate(relation)
        if self.peek()[0] == "punct" and self.peek()[1] == ";":
            self.advance()
        self.expect("eof")
        resolved = None
        if columns is not None:
            resolved = tuple(self.resolve_column(relation, name, pos) for name, pos in columns)
        return SelectQuery(relation=relation, columns=resolved,
                           distinct=distinct, predicate=predicate)

    def parse_projection(self):
        token = self.peek()
        if token[0] == "punct" and token[1] == ALL_MARKER:
            self.advance()
            return None
        columns = [self.expect_name()]
        while self.peek()[0] == "punct" and self.peek()[1] == ",":
            self.advance()
            columns.append(self.expect_name())
        return columns

    def expect_name(self) -> tuple[str, int]:
        token = self.peek()
        if token[0] != "word":
            raise SqlSyntaxError(f"expected a name, found {token[1] or 'end of input'!r}",
                                 position=token[2])
        self.advance()
        return token[1], token[2]

    def parse_relation(self) -> str:
        name, pos = self.expect_name()
        resolved = self.schema.resolve_table(name)
        if resolved is None:
            raise UnknownRelation(f"unknown table {name!r}")
        return resolved

    def resolve_column(self, relation: str, name: str, pos: int) -> str:
        resolved = self.schema.resolve_column(relation, name)
        if resolved is None:
            raise UnknownColumn(f"{name!r} is not a column of {relation}")
        return resolved

    def parse_predicate(self, relation: str) -> Predicate:
        node: Predicate = self.parse_comparison(relation)
        while self.peek()[0] == "keyword" and self.peek()[1] in ("AND", "OR"):
            op = self.advance()[1]
            node = BoolExpr(op=op, left=node, right=self.parse_comparison(relation))
        return node

    def parse_comparison(self, relation: str) -> Comparison:
        name, pos = self.expect_name()
        column = self.resolve_column(relation, name, pos)
        self.expect("punct", "=")
        token = self.peek()
        if token[0] not in ("string", "number"):
            raise SqlSyntaxError(f"expected a literal, found {token[1] or 'end of input'!r}",
                                 position=token[2])
        self.advance()
        return Comparison(column=column, literal=token[1])


def parse_select(text: str, schema: SchemaCatalog) -> SelectQuery:
    """Parse the supported SELECT subset; round-trips with render."""
    return _SelectParser(text, schema).parse()
