import random
import shutil
from decimal import Decimal
from pathlib import Path

import pytest

from narql.errors import (
    DuplicateKey,
    FullDeleteNotAllowed,
    HeaderMismatch,
    MissingTableFile,
    RowTypeError,
    TableExists,
    UnboundPlaceholder,
)
from narql.minidb import (
    ExecuteOptions,
    MutationSummary,
    bundled_seed_path,
    execute,
    load_seed,
)
from narql.schema import chinook_catalog
from narql.sqlgen import CreateQuery, DeleteQuery, InsertQuery, parse_select
from support import database_with, scan_predicate

CUSTOMER_COLUMNS = chinook_catalog().column_names("Customer")


def customer_row(cid, first, last, city="Durban", country="South Africa"):
    return (cid, first, last, None, f"{cid} Test Road", city, "KZN", country,
            "4001", None, f"{first.lower()}@example.test", 3)


def copy_seed(tmp_path) -> Path:
    target = tmp_path / "seed"
    shutil.copytree(str(bundled_seed_path()), target)
    return target


def test_bundled_seed_loads_eleven_tables(db):
    assert len(db.tables) == 11
    assert all(len(t.rows) >= 1 for t in db.tables.values())


def test_seed_types(db):
    first = db.tables["Track"].rows[0]
    columns = db.schema.column_names("Track")
    row = dict(zip(columns, first))
    assert isinstance(row["TrackID"], int)
    assert isinstance(row["Name"], str)
    assert isinstance(row["UnitPrice"], Decimal)


def test_missing_table_file(tmp_path):
    seed = copy_seed(tmp_path)
    (seed / "Artist.csv").unlink()
    with pytest.raises(MissingTableFile) as err:
        load_seed(seed)
    assert "Artist" in str(err.value)


def test_header_mismatch(tmp_path):
    seed = copy_seed(tmp_path)
    (seed / "Genre.csv").write_text("GenreID,Label\n1,Jazz\n", encoding="utf-8")
    with pytest.raises(HeaderMismatch):
        load_seed(seed)


def test_bad_cell_type_reports_row(tmp_path):
    seed = copy_seed(tmp_path)
    (seed / "Genre.csv").write_text("GenreID,Name\n1,Jazz\nx,Kwaito\n", encoding="utf-8")
    with pytest.raises(RowTypeError) as err:
        load_seed(seed)
    assert err.value.row == 3


def test_duplicate_primary_key(tmp_path):
    seed = copy_seed(tmp_path)
    (seed / "Genre.csv").write_text("GenreID,Name\n1,Jazz\n1,Kwaito\n", encoding="utf-8")
    with pytest.raises(DuplicateKey):
        load_seed(seed)


def test_select_star_counts_match(db, schema):
    for table in schema.table_names():
        result = execute(db, parse_select(f"SELECT * FROM {table};", schema))
        assert len(result.rows) == db.row_count(table)
        assert result.columns == tuple(schema.column_names(table))


def test_select_preserves_insertion_order(db, schema):
    result = execute(db, parse_select("SELECT CustomerID FROM Customer;", schema))
    ids = [row[0] for row in result.rows]
    assert ids == sorted(ids)  # seed file is id-ordered


def test_distinct_on_single_valued_column(schema):
    db = database_with("Customer", [customer_row(i, f"P{i}", "X") for i in range(1, 6)])
    result = execute(db, parse_select("SELECT DISTINCT Country FROM Customer;", schema))
    assert result.rows == [("South Africa",)]


def test_distinct_noop_when_tuples_unique(db, schema):
    plain = execute(db, parse_select("SELECT CustomerID FROM Customer;", schema))
    distinct = execute(db, parse_select("SELECT DISTINCT CustomerID FROM Customer;", schema))
    assert plain.rows == distinct.rows


def test_where_and_matches_single_row(schema):
    rows = [customer_row(1, "karabo", "hlophe"),
            customer_row(2, "karabo", "ngcobo"),
            customer_row(3, "zanele", "hlophe")]
    db = database_with("Customer", rows)
    query = parse_select(
        "SELECT * FROM Customer WHERE FirstName='karabo' AND LastName='hlophe';", schema)
    result = execute(db, query)
    assert len(result.rows) == 1
    assert result.rows[0][0] == 1


def test_where_or_is_union(schema):
    rows = [customer_row(1, "a", "x", city="Durban"),
            customer_row(2, "b", "y", city="Pietermaritzburg"),
            customer_row(3, "c", "z", city="Cape Town")]
    db = database_with("Customer", rows)
    query = parse_select(
        "SELECT CustomerID FROM Customer "
        "WHERE City='Durban' OR City='Pietermaritzburg';", schema)
    assert [r[0] for r in execute(db, query).rows] == [1, 2]


def test_text_comparison_is_case_sensitive(schema):
    db = database_with("Customer", [customer_row(1, "Karabo", "Hlophe")])
    query = parse_select("SELECT * FROM Customer WHERE FirstName='karabo';", schema)
    assert execute(db, query).rows == []


def test_integer_comparison_after_coercion(db, schema):
    query = parse_select("SELECT FirstName FROM Customer WHERE CustomerID=1;", schema)
    assert execute(db, query).rows == [("Karabo",)]


def test_uncoercible_literal_matches_nothing(db, schema):
    query = parse_select("SELECT * FROM Customer WHERE CustomerID='abc';", schema)
    assert execute(db, query).rows == []


def test_decimal_comparison(db, schema):
    query = parse_select("SELECT Name FROM Track WHERE UnitPrice='1.49';", schema)
    names = {r[0] for r in execute(db, query).rows}
    assert names == {"Stimela"}


def test_null_cells_never_match(schema):
    db = database_with("Customer", [customer_row(1, "a", "b")])  # Company is NULL
    query = parse_select("SELECT * FROM Customer WHERE Company='';", schema)
    assert execute(db, query).rows == []


def test_insert_placeholders_unbound(db):
    query = InsertQuery(relation="Genre", columns=("GenreID", "Name"))
    with pytest.raises(UnboundPlaceholder):
        execute(db, query)


def test_insert_with_bound_values(db, schema):
    before = db.row_count("Genre")
    query = InsertQuery(relation="Genre", columns=("GenreID", "Name"))
    summary = execute(db, query, ExecuteOptions(insert_values=("99", "Mbaqanga")))
    assert summary == MutationSummary(operation="insert", affected=1)
    assert db.row_count("Genre") == before + 1
    result = execute(db, parse_select("SELECT Name FROM Genre WHERE GenreID=99;", schema))
    assert result.rows == [("Mbaqanga",)]


def test_insert_duplicate_key_rejected(db):
    query = InsertQuery(relation="Genre", columns=("GenreID", "Name"))
    with pytest.raises(DuplicateKey):
        execute(db, query, ExecuteOptions(insert_values=("1", "Clone")))


def test_full_delete_needs_flag(db):
    with pytest.raises(FullDeleteNotAllowed):
        execute(db, DeleteQuery(relation="Playlist"))
    assert db.row_count("Playlist") == 3


def test_full_delete_with_flag(db, schema):
    before = db.row_count("Playlist")
    summary = execute(db, DeleteQuery(relation="Playlist"),
                      ExecuteOptions(allow_full_delete=True))
    assert summary.affected == before
    assert execute(db, parse_select("SELECT * FROM Playlist;", schema)).rows == []


def test_predicate_delete_then_counts_sum(db, schema):
    total = db.row_count("Customer")
    query = DeleteQuery(relation="Customer",
                        predicate=parse_select(
                            "SELECT * FROM Customer WHERE City='Pietermaritzburg';",
                            schema).predicate)
    summary = execute(db, query)
    remaining = db.row_count("Customer")
    assert summary.affected + remaining == total
    assert summary.affected == 2  # seed holds two Pietermaritzburg customers


def test_create_rejected_on_fixed_catalog(db, schema):
    query = CreateQuery(relation="Customer", columns=schema.columns("Customer"))
    with pytest.raises(TableExists):
        execute(db, query)


def test_executor_agrees_with_scan_oracle(schema):
    rng = random.Random(20250811)
    firsts = ["karabo", "zanele", "sipho", "naledi"]
    lasts = ["hlophe", "ngcobo", "dlamini"]
    cities = ["Durban", "Pietermaritzburg", "Cape Town"]
    rows = [customer_row(i, rng.choice(firsts), rng.choice(lasts), city=rng.choice(cities))
            for i in range(1, 81)]
    db = database_with("Customer", rows)
    queries = [
        "SELECT * FROM Customer;",
        "SELECT DISTINCT FirstName FROM Customer;",
        "SELECT * FROM Customer WHERE FirstName='karabo' AND LastName='hlophe';",
        "SELECT CustomerID FROM Customer WHERE City='Durban' OR City='Cape Town';",
    ]
    for text in queries:
        query = parse_select(text, schema)
        result = execute(db, query)
        dict_rows = [dict(zip(CUSTOMER_COLUMNS, row)) for row in rows]
        expected = [r for r in dict_rows
                    if query.predicate is None or scan_predicate(query.predicate, r)]
        projected = [tuple(r[c] for c in result.columns) for r in expected]
        if query.distinct:
            unique, seen = [], set()
            for row in projected:
                if row not in seen:
                    seen.add(row)
                    unique.append(row)
            projected = unique
        assert result.rows == projected, text
