"""End-to-end narration translation: preprocess, classify, recognize, generate.

The stages mirror the tool's processing loop: narration text is normalized
into words, words are classified against the lexicon, the recognized
symbols drive a chain JFA whose acceptance certifies the keyword set, and
the distilled intent is handed to the SQL generator.  translate() bundles
everything (including failures) into a report the CLI, HTTP service and
web console all share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from . import jfa, sqlgen
from .errors import (
    IntentError,
    MultipleRelations,
    NarqlError,
    NoAttribute,
    NoRelation,
    NoVerb,
    Rejected,
    SqlGenError,
)
from .lexicon import Lexicon, LexiconEntry, QueryOperation, SymbolClass, classify
from .schema import ATTRIBUTE_COLUMNS, RELATION_TABLES, SchemaCatalog
from .sqlgen import ALL_MARKER

_STRIP_CHARS = ".,;:!?'\"()"


@dataclass(frozen=True)
class ClassifiedToken:
    surface: str
    normalized: str
    candidates: tuple[LexiconEntry, ...]
    position: int

    @property
    def entry(self) -> LexiconEntry | None:
        return self.candidates[0] if self.candidates else None


@dataclass(frozen=True)
class QueryIntent:
    operation: QueryOperation
    relation: str                      # relation symbol id (c*)
    attributes: tuple[str, ...]        # attribute symbol ids, or (ALL_MARKER,)
    symbols: tuple[str, ...]           # recognized symbol word, first occurrences
    source_tokens: tuple[ClassifiedToken, ...]


def preprocess(text: str) -> list[str]:
    """Lowercased words with leading/trailing punctuation stripped."""
    return [norm for _, norm in _word_pairs(text)]


def _word_pairs(text: str) -> list[tuple[str, str]]:
    pairs = []
    for raw in text.split():
        normalized = raw.strip(_STRIP_CHARS).lower()
        if normalized:
            pairs.append((raw, normalized))
    return pairs


def classify_stream(words: list[str], lexicon: Lexicon) -> list[ClassifiedToken]:
    """Look every word up; ambiguous words keep all candidate entries."""
    tokens = []
    for position, word in enumerate(words):
        normalized = word.strip(_STRIP_CHARS).lower()
        tokens.append(ClassifiedToken(
            surface=word,
            normalized=normalized,
            candidates=tuple(classify(normalized, lexicon)),
            position=position,
        ))
    return tokens


def _is_mapped_verb(entry: LexiconEntry) -> bool:
    return (entry.symbol_class is SymbolClass.QUERY_VERB
            and entry.operation_group is not None)


def _resolve(tokens: list[ClassifiedToken]) -> list[tuple[ClassifiedToken, LexiconEntry]]:
    """One entry per lexicon token.

    Ambiguous words prefer whichever reading keeps the intent consistent: a
    verb reading while no verb has been seen, otherwise a non-verb reading;
    lexicon file order breaks remaining ties.
    """
    lexical = [t for t in tokens if t.candidates]
    have_verb = any(len(t.candidates) == 1 and _is_mapped_verb(t.candidates[0])
                    for t in lexical)
    resolved = []
    for token in lexical:
        if len(token.candidates) == 1:
            resolved.append((token, token.candidates[0]))
            continue
        verb_readings = [e for e in token.candidates if _is_mapped_verb(e)]
        other_readings = [e for e in token.candidates if not _is_mapped_verb(e)]
        if not have_verb and verb_readings:
            choice = verb_readings[0]
            have_verb = True
        elif other_readings:
            choice = other_readings[0]
        else:
            choice = token.candidates[0]
        resolved.append((token, choice))
    return resolved


def resolved_tokens(tokens: list[ClassifiedToken]) -> list[ClassifiedToken]:
    """Tokens with each ambiguous word's chosen entry moved to the front."""
    chosen = {token.position: entry for token, entry in _resolve(tokens)}
    out = []
    for token in tokens:
        entry = chosen.get(token.position)
        if entry is not None and token.candidates[0] != entry:
            reordered = (entry,) + tuple(e for e in token.candidates if e != entry)
            token = replace(token, candidates=reordered)
        out.append(token)
    return out


def extract_intent(tokens: list[ClassifiedToken]) -> QueryIntent:
    """Distill (operation, relation, attributes) from a classified stream.

    Symbols are deduplicated first-occurrence-first; the chain machine built
    over them must accept the symbol word (it always does after dedup, but
    the check guards the recognizer contract).
    """
    resolved = _resolve(tokens)
    picked: list[tuple[ClassifiedToken, LexiconEntry]] = []
    seen: set[str] = set()
    for token, entry in resolved:
        if entry.symbol_id in seen:
            continue
        seen.add(entry.symbol_id)
        picked.append((token, entry))
    symbols = tuple(entry.symbol_id for _, entry in picked)

    verbs = [(t, e) for t, e in picked if e.symbol_class is SymbolClass.QUERY_VERB]
    mapped_verbs = [(t, e) for t, e in verbs if e.operation_group is not None]
    if not mapped_verbs:
        if verbs:
            token, entry = verbs[0]
            raise NoVerb(
                f"verb {entry.surface!r} has no query-operation mapping",
                positions=[token.position], symbols=symbols,
            )
        raise NoVerb("no query verb recognized", symbols=symbols)
    operation = mapped_verbs[0][1].operation_group

    relations = [(t, e) for t, e in picked if e.symbol_class is SymbolClass.RELATION_TERM]
    if not relations:
        raise NoRelation("no relation recognized", symbols=symbols)
    if len(relations) > 1:
        names = ", ".join(e.surface for _, e in relations)
        raise MultipleRelations(
            f"narration names multiple relations ({names}); queries cover a single relation",
            positions=[t.position for t, _ in relations], symbols=symbols,
        )
    relation = relations[0][1].symbol_id

    all_words = [(t, e) for t, e in picked
                 if e.symbol_class is SymbolClass.ATTRIBUTE_TERM
                 and e.operation_group is QueryOperation.ALL]
    attr_words = [(t, e) for t, e in picked
                  if e.symbol_class is SymbolClass.ATTRIBUTE_TERM
                  and e.operation_group is None]
    if all_words:
        attributes: tuple[str, ...] = (ALL_MARKER,)
    elif attr_words:
        attributes = tuple(e.symbol_id for _, e in attr_words)
    elif operation is QueryOperation.SELECT:
        raise NoAttribute(
            "select needs an attribute word or an ALL word",
            symbols=symbols,
        )
    else:
        attributes = (ALL_MARKER,)  # complete template for insert/delete/create

    machine = jfa.chain_machine(symbols)
    if not jfa.accepts(machine, symbols):
        raise Rejected("recognizer rejected the keyword word", symbols=symbols)

    return QueryIntent(
        operation=operation,
        relation=relation,
        attributes=attributes,
        symbols=symbols,
        source_tokens=tuple(token for token, _ in picked),
    )


@dataclass
class TranslationReport:
    """Everything one narration produced, success or failure."""

    text: str
    tokens: tuple[ClassifiedToken, ...]
    machine: jfa.JfaMachine | None = None
    trace: jfa.DerivationTrace | None = None
    intent: QueryIntent | None = None
    query: sqlgen.SqlQuery | None = None
    sql: str | None = None
    error: NarqlError | None = None

    def to_dict(self) -> dict:
        tokens = []
        for token in self.tokens:
            entry = token.entry
            tokens.append({
                "surface": token.surface,
                "normalized": token.normalized,
                "position": token.position,
                "symbol_id": entry.symbol_id if entry else None,
                "class": entry.symbol_class.value if entry else None,
                "language": entry.language if entry else None,
                "operation": entry.operation_group.keyword
                             if entry and entry.operation_group else None,
            })
        derivation = []
        if self.trace is not None:
            derivation.append({"rule": None, "configuration": str(self.trace.initial)})
            for config, rule in self.trace.steps:
                derivation.append({"rule": str(rule), "configuration": str(config)})
        intent = None
        if self.intent is not None:
            attrs = list(self.intent.attributes)
            intent = {
                "operation": self.intent.operation.keyword,
                "relation": RELATION_TABLES.get(self.intent.relation),
                "relation_symbol": self.intent.relation,
                "attributes": ([ALL_MARKER] if attrs == [ALL_MARKER]
                               else [ATTRIBUTE_COLUMNS.get(a, a) for a in attrs]),
                "attribute_symbols": [] if attrs == [ALL_MARKER] else attrs,
            }
        return {
            "text": self.text,
            "tokens": tokens,
            "machine_dot": jfa.to_dot(self.machine) if self.machine else None,
            "derivation": derivation,
            "sql": self.sql,
            "intent": intent,
            "error": self.error.to_dict() if self.error else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, separators=(",", ":"))

    @property
    def ok(self) -> bool:
        return self.error is None


def translate(text: str, lexicon: Lexicon, schema: SchemaCatalog) -> TranslationReport:
    """Run the full pipeline; failures become part of the report."""
    pairs = _word_pairs(text)
    tokens = [
        ClassifiedToken(surface=raw, normalized=norm,
                        candidates=tuple(classify(norm, lexicon)), position=i)
        for i, (raw, norm) in enumerate(pairs)
    ]
    display = tuple(resolved_tokens(tokens))
    report = TranslationReport(text=text, tokens=display)

    try:
        intent = extract_intent(tokens)
    except IntentError as err:
        report.error = err
        if err.symbols:
            report.machine = jfa.chain_machine(err.symbols)
        return report

    report.intent = intent
    report.machine = jfa.chain_machine(intent.symbols)
    report.trace = jfa.derive(report.machine, intent.symbols)
    try:
        report.query = sqlgen.generate(intent, schema)
        report.sql = sqlgen.render(report.query)
    except SqlGenError as err:
        report.error = err
    return report
