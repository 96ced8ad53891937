"""Music-store schema catalog plus the symbol-to-name tables.

The catalog fixes eleven tables in the style of the well-known Chinook
sample database.  RELATION_TABLES and ATTRIBUTE_COLUMNS translate lexicon
symbol ids (c2, b23, ...) into table and column names; legacy spellings in
the lexicon (invoice_item, phone, playlist_track) alias onto the standard
table set.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ColumnType(Enum):
    INTEGER = "integer"
    TEXT = "text"
    DECIMAL = "decimal"

    @property
    def sql(self) -> str:
        return self.name


@dataclass(frozen=True)
class ColumnDef:
    name: str
    type: ColumnType


@dataclass(frozen=True)
class SchemaCatalog:
    tables: dict[str, tuple[ColumnDef, ...]]
    primary_keys: dict[str, str | None]

    def table_names(self) -> list[str]:
        return list(self.tables)

    def resolve_table(self, name: str) -> str | None:
        """Schema-declared casing for a table name, matched case-insensitively."""
        lowered = name.lower()
        for table in self.tables:
            if table.lower() == lowered:
                return table
        return None

    def columns(self, table: str) -> tuple[ColumnDef, ...]:
        return self.tables[table]

    def column_names(self, table: str) -> list[str]:
        return [c.name for c in self.tables[table]]

    def resolve_column(self, table: str, name: str) -> str | None:
        lowered = name.lower()
        for col in self.tables[table]:
            if col.name.lower() == lowered:
                return col.name
        return None

    def to_dict(self) -> dict:
        return {
            "tables": [
                {
                    "name": table,
                    "columns": [{"name": c.name, "type": c.type.value} for c in cols],
                    "primary_key": self.primary_keys.get(table),
                }
                for table, cols in self.tables.items()
            ]
        }


_I = ColumnType.INTEGER
_T = ColumnType.TEXT
_D = ColumnType.DECIMAL


def chinook_catalog() -> SchemaCatalog:
    """The fixed eleven-table music-store catalog."""
    def cols(*pairs):
        return tuple(ColumnDef(name, ctype) for name, ctype in pairs)

    tables = {
        "Employee": cols(("EmployeeID", _I), ("LastName", _T), ("FirstName", _T),
                         ("Title", _T), ("ReportsTo", _I), ("Address", _T),
                         ("City", _T), ("State", _T), ("Country", _T),
                         ("PostalCode", _T), ("Fax", _T), ("Email", _T)),
        "Genre": cols(("GenreID", _I), ("Name", _T)),
        "Customer": cols(("CustomerID", _I), ("FirstName", _T), ("LastName", _T),
                         ("Company", _T), ("Address", _T), ("City", _T),
                         ("State", _T), ("Country", _T), ("PostalCode", _T),
                         ("Fax", _T), ("Email", _T), ("SupportRepID", _I)),
        "MediaType": cols(("MediaTypeID", _I), ("Name", _T)),
        "Track": cols(("TrackID", _I), ("Name", _T), ("AlbumID", _I),
                      ("MediaTypeID", _I), ("GenreID", _I), ("Composer", _T),
                      ("UnitPrice", _D)),
        "InvoiceLine": cols(("InvoiceLineID", _I), ("InvoiceID", _I),
                            ("TrackID", _I), ("UnitPrice", _D), ("Quantity", _I)),
        "Invoice": cols(("InvoiceID", _I), ("CustomerID", _I), ("InvoiceDate", _T),
                        ("BillingAddress", _T), ("BillingCity", _T),
                        ("BillingCountry", _T), ("Total", _D)),
        "Playlist": cols(("PlaylistID", _I), ("Name", _T)),
        "PlaylistTrack": cols(("PlaylistID", _I), ("TrackID", _I)),
        "Album": cols(("AlbumID", _I), ("Title", _T), ("ArtistID", _I)),
        "Artist": cols(("ArtistID", _I), ("Name", _T)),
    }
    primary_keys = {
        "Employee": "EmployeeID",
        "Genre": "GenreID",
        "Customer": "CustomerID",
        "MediaType": "MediaTypeID",
        "Track": "TrackID",
        "InvoiceLine": "InvoiceLineID",
        "Invoice": "InvoiceID",
        "Playlist": "PlaylistID",
        "PlaylistTrack": None,  # join table, composite key not enforced
        "Album": "AlbumID",
        "Artist": "ArtistID",
    }
    return SchemaCatalog(tables=tables, primary_keys=primary_keys)


# relation symbols c0..c10 in catalog order
RELATION_TABLES = {
    "c0": "Employee",
    "c1": "Genre",
    "c2": "Customer",
    "c3": "MediaType",
    "c4": "Track",
    "c5": "InvoiceLine",
    "c6": "Invoice",
    "c7": "Playlist",
    "c8": "PlaylistTrack",
    "c9": "Album",
    "c10": "Artist",
}

# attribute symbols b0..b22; the ALL words b23..b25 have no column of their own
ATTRIBUTE_COLUMNS = {
    "b0": "EmployeeID",
    "b1": "LastName",
    "b2": "FirstName",
    "b3": "Title",
    "b4": "ReportsTo",
    "b5": "Address",
    "b6": "State",
    "b7": "City",
    "b8": "PostalCode",
    "b9": "Fax",
    "b10": "Country",
    "b11": "Email",
    "b12": "CustomerID",
    "b13": "SupportRepID",
    "b14": "TrackID",
    "b15": "ArtistID",
    "b16": "InvoiceID",
    "b17": "MediaTypeID",
    "b18": "InvoiceLineID",
    "b19": "Name",
    "b20": "UnitPrice",
    "b21": "Composer",
    "b22": "Company",
}
