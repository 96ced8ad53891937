"""Error hierarchy shared by the translation pipeline, SQL layer and executor.

Every error carries a stable ``code`` (its class name) and the pipeline
``stage`` it belongs to, so the CLI and HTTP service can report failures
uniformly.
"""

from __future__ import annotations


class NarqlError(Exception):
    """Base class for all domain errors."""

    stage: str | None = None

    def __init__(self, message: str, positions: list[int] | None = None):
        super().__init__(message)
        self.message = message
        self.positions = positions or []

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict:
        payload = {"stage": self.stage, "code": self.code, "message": self.message}
        if self.positions:
            payload["positions"] = self.positions
        return payload


# -- lexicon ---------------------------------------------------------------

class LexiconError(NarqlError):
    pass


class ParseError(LexiconError):
    """Malformed lexicon row; message includes the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicateEntry(LexiconError):
    pass


# -- jfa -------------------------------------------------------------------

class JfaError(NarqlError):
    pass


class DuplicateSymbol(JfaError):
    pass


class NoDerivation(JfaError):
    pass


# -- pipeline (intent extraction) -------------------------------------------

class IntentError(NarqlError):
    stage = "intent"

    def __init__(self, message: str, positions: list[int] | None = None,
                 symbols: tuple[str, ...] = ()):
        super().__init__(message, positions)
        # symbols recognized before the failure; lets reports still show the machine
        self.symbols = symbols


class NoVerb(IntentError):
    pass


class NoRelation(IntentError):
    pass


class NoAttribute(IntentError):
    pass


class MultipleRelations(IntentError):
    pass


class Rejected(IntentError):
    pass


# -- sqlgen ------------------------------------------------------------------

class SqlGenError(NarqlError):
    stage = "generate"


class UnknownRelation(SqlGenError):
    pass


class UnknownColumn(SqlGenError):
    pass


class SqlSyntaxError(SqlGenError):
    """Bad SQL text; ``position`` is the character offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# -- minidb -------------------------------------------------------------------

class MinidbError(NarqlError):
    stage = "execute"


class MissingTableFile(MinidbError):
    pass


class HeaderMismatch(MinidbError):
    pass


class RowTypeError(MinidbError):
    """Seed value does not coerce to the declared column type."""

    def __init__(self, message: str, row: int):
        super().__init__(f"row {row}: {message}")
        self.row = row


class DuplicateKey(MinidbError):
    pass


class UnboundPlaceholder(MinidbError):
    pass


class FullDeleteNotAllowed(MinidbError):
    pass


class TableExists(MinidbError):
    pass
