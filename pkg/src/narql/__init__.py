"""narql: South African local-language narrations translated to SQL.

A keyword lexicon classifies narration words, a jumping finite automaton
recognizes the keyword set regardless of word order, and the distilled
intent becomes a single-relation SQL query executed against an embedded
music-store database.
"""

from .jfa import JfaMachine, accepts, chain_machine, derive, parikh_accepts
from .lexicon import (
    Lexicon,
    LexiconEntry,
    QueryOperation,
    SymbolClass,
    classify,
    load_bundled_lexicon,
    load_lexicon,
    operation_of,
)
from .minidb import Database, ExecuteOptions, ResultSet, execute, load_bundled_seed, load_seed
from .pipeline import QueryIntent, TranslationReport, extract_intent, preprocess, translate
from .schema import SchemaCatalog, chinook_catalog
from .sqlgen import SqlQuery, generate, parse_select, render

__version__ = "0.1.0"

__all__ = [
    "Database",
    "ExecuteOptions",
    "JfaMachine",
    "Lexicon",
    "LexiconEntry",
    "QueryIntent",
    "QueryOperation",
    "ResultSet",
    "SchemaCatalog",
    "SqlQuery",
    "SymbolClass",
    "TranslationReport",
    "accepts",
    "chain_machine",
    "chinook_catalog",
    "classify",
    "derive",
    "execute",
    "extract_intent",
    "generate",
    "load_bundled_lexicon",
    "load_bundled_seed",
    "load_lexicon",
    "load_seed",
    "operation_of",
    "parikh_accepts",
    "parse_select",
    "preprocess",
    "render",
    "translate",
    "__version__",
]
