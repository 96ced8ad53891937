"""Multilingual keyword lexicon: surface words mapped to classed symbols.

Words fall into three symbol classes: query verbs (``a`` symbols),
attribute terms (``b`` symbols, including the ALL words) and relation
terms (``c`` symbols).  Verbs and ALL words additionally carry the query
operation they trigger.  The lexicon itself is data, shipped as a
tab-separated UTF-8 file, so new languages are a file edit away.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Iterable, TextIO

from .errors import DuplicateEntry, ParseError


class SymbolClass(Enum):
    QUERY_VERB = "QueryVerb"
    ATTRIBUTE_TERM = "AttributeTerm"
    RELATION_TERM = "RelationTerm"

    @property
    def prefix(self) -> str:
        return {"QueryVerb": "a", "AttributeTerm": "b", "RelationTerm": "c"}[self.value]


class QueryOperation(Enum):
    SELECT = "Select"
    ALL = "All"
    CREATE = "Create"
    INSERT = "Insert"
    DELETE = "Delete"

    @property
    def keyword(self) -> str:
        return self.name


_SYMBOL_ID = re.compile(r"^[abc]\d+$")


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    symbol_id: str
    symbol_class: SymbolClass
    language: str
    operation_group: QueryOperation | None = None

    def __post_init__(self):
        if not self.surface or self.surface != self.surface.lower() or " " in self.surface:
            raise ValueError(f"bad surface {self.surface!r}")
        if not _SYMBOL_ID.match(self.symbol_id):
            raise ValueError(f"bad symbol id {self.symbol_id!r}")
        if self.symbol_id[0] != self.symbol_class.prefix:
            raise ValueError(
                f"symbol id {self.symbol_id!r} does not match class {self.symbol_class.value}"
            )


@dataclass(frozen=True)
class Lexicon:
    entries: tuple[LexiconEntry, ...]
    _index: dict[str, list[LexiconEntry]] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        for entry in self.entries:
            self._index.setdefault(entry.surface, []).append(entry)

    def lookup(self, surface: str) -> list[LexiconEntry]:
        return list(self._index.get(surface, []))

    def languages(self) -> dict[str, int]:
        """Distinct language tags with entry counts, sorted by tag."""
        counts: dict[str, int] = {}
        for entry in self.entries:
            counts[entry.language] = counts.get(entry.language, 0) + 1
        return dict(sorted(counts.items()))

    def symbol_ids(self, symbol_class: SymbolClass) -> list[str]:
        seen: dict[str, None] = {}
        for entry in self.entries:
            if entry.symbol_class is symbol_class:
                seen.setdefault(entry.symbol_id, None)
        return list(seen)


def classify(word: str, lexicon: Lexicon) -> list[LexiconEntry]:
    """All lexicon entries whose surface equals ``word``, case-insensitively.

    Entries come back in lexicon file order; unknown words yield an empty
    list.
    """
    return lexicon.lookup(word.lower())


def operation_of(entry: LexiconEntry) -> QueryOperation | None:
    """The query-operation group of an entry, or None for plain terms."""
    return entry.operation_group


def load_lexicon(source: TextIO | Iterable[str]) -> Lexicon:
    """Parse lexicon rows from a line source.

    Format per line: ``surface<TAB>symbol_id<TAB>class<TAB>language<TAB>operation_or_dash``.
    ``#`` starts a comment line; blank lines are skipped.  Raises ParseError
    with the offending line number, or DuplicateEntry on a repeated
    (surface, symbol_id) pair.
    """
    entries: list[LexiconEntry] = []
    seen: set[tuple[str, str]] = set()
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise ParseError(f"expected 5 tab-separated fields, got {len(fields)}", lineno)
        surface, symbol_id, class_name, language, op_name = (f.strip() for f in fields)
        try:
            symbol_class = SymbolClass(class_name)
        except ValueError:
            raise ParseError(f"unknown symbol class {class_name!r}", lineno) from None
        if op_name == "-":
            operation = None
        else:
            try:
                operation = QueryOperation(op_name)
            except ValueError:
                raise ParseError(f"unknown operation {op_name!r}", lineno) from None
        if not language:
            raise ParseError("empty language tag", lineno)
        try:
            entry = LexiconEntry(surface, symbol_id, symbol_class, language, operation)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        key = (entry.surface, entry.symbol_id)
        if key in seen:
            raise DuplicateEntry(f"duplicate entry {entry.surface!r} / {entry.symbol_id}")
        seen.add(key)
        entries.append(entry)
    return Lexicon(entries=tuple(entries))


def render_lexicon(lexicon: Lexicon) -> str:
    """Serialize a lexicon back to its file format (round-trips load_lexicon)."""
    lines = []
    for e in lexicon.entries:
        op = e.operation_group.value if e.operation_group else "-"
        lines.append(f"{e.surface}\t{e.symbol_id}\t{e.symbol_class.value}\t{e.language}\t{op}")
    return "\n".join(lines) + ("\n" if lines else "")


def load_lexicon_file(path) -> Lexicon:
    with open(path, encoding="utf-8") as fh:
        return load_lexicon(fh)


def bundled_lexicon_path():
    return resources.files("narql").joinpath("data/lexicon/za.tsv")


def load_bundled_lexicon() -> Lexicon:
    with bundled_lexicon_path().open(encoding="utf-8") as fh:
        return load_lexicon(fh)
