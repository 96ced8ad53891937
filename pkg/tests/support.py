"""Shared helpers: paper-style sample narrations, random machines, oracles."""

from __future__ import annotations

import random
from decimal import Decimal, InvalidOperation

from narql.jfa import JfaMachine, Rule
from narql.minidb import Database, TableData
from narql.schema import chinook_catalog
from narql.sqlgen import BoolExpr, Comparison

EXAMPLE_AF = "Ek will al die customer besonderhede vind"
EXAMPLE_ZU = "Ngifuna ukuthola yonke imininingwane ya ma customer"
CUSTOMER_SQL = "SELECT * FROM Customer;"


def make_random_machine(rng: random.Random, max_states: int = 5,
                        max_rules: int = 6, max_alphabet: int = 4) -> JfaMachine:
    """A small arbitrary machine; finals may be empty, states unreachable."""
    n_states = rng.randint(1, max_states)
    states = tuple(f"S{i}" for i in range(n_states))
    alphabet = tuple(f"x{i}" for i in range(rng.randint(1, max_alphabet)))
    rules = []
    seen = set()
    for _ in range(rng.randint(0, max_rules)):
        triple = (rng.choice(states), rng.choice(alphabet), rng.choice(states))
        if triple not in seen:
            seen.add(triple)
            rules.append(Rule(*triple))
    finals = frozenset(s for s in states if rng.random() < 0.4)
    return JfaMachine(states=states, alphabet=frozenset(alphabet),
                      rules=tuple(rules), start=states[0], finals=finals)


def all_words(alphabet, max_length):
    """Every word over the alphabet up to the given length, shortest first."""
    words = [()]
    frontier = [()]
    for _ in range(max_length):
        frontier = [w + (s,) for w in frontier for s in alphabet]
        words.extend(frontier)
    return words


def scan_predicate(predicate, row: dict) -> bool:
    """Brute-force predicate oracle over a row dict.

    Independent of the executor's evaluator: the literal is coerced from the
    cell's runtime type rather than the schema catalog.
    """
    if isinstance(predicate, Comparison):
        cell = row[predicate.column]
        if cell is None:
            return False
        literal = predicate.literal
        if isinstance(cell, int):
            try:
                literal = int(literal)
            except ValueError:
                return False
        elif isinstance(cell, Decimal):
            try:
                literal = Decimal(literal)
            except InvalidOperation:
                return False
        return cell == literal
    if isinstance(predicate, BoolExpr):
        left = scan_predicate(predicate.left, row)
        right = scan_predicate(predicate.right, row)
        return (left and right) if predicate.op == "AND" else (left or right)
    raise TypeError(predicate)


def database_with(table: str, rows: list[tuple]) -> Database:
    """An in-memory database holding just the given rows for one table and
    empty rows elsewhere."""
    schema = chinook_catalog()
    tables = {name: TableData(name=name, rows=[]) for name in schema.table_names()}
    tables[table] = TableData(name=table, rows=list(rows))
    return Database(schema=schema, tables=tables)
