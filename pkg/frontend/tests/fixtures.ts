// Captured service responses used as the mocked API in rendering tests.

import type { SchemaCatalog, TranslationReport } from "../src/types";

function token(
  surface: string,
  position: number,
  extra: Partial<TranslationReport["tokens"][number]> = {},
) {
  return {
    surface,
    normalized: surface.toLowerCase(),
    position,
    symbol_id: null,
    class: null,
    language: null,
    operation: null,
    ...extra,
  };
}

export const EXAMPLE_DOT =
  'digraph jfa {\n  rankdir=LR;\n  __start [shape=none, label=""];\n' +
  '  "I" [shape=circle];\n  "J" [shape=circle];\n  "K" [shape=circle];\n' +
  '  "L" [shape=doublecircle];\n  __start -> "I";\n' +
  '  "I" -> "J" [label="b23"];\n  "J" -> "K" [label="c2"];\n' +
  '  "K" -> "L" [label="a12"];\n}\n';

export const EXAMPLE_REPORT: TranslationReport = {
  text: "Ek will al die customer besonderhede vind",
  tokens: [
    token("Ek", 0),
    token("will", 1),
    token("al", 2, {
      symbol_id: "b23", class: "AttributeTerm", language: "af", operation: "ALL",
    }),
    token("die", 3),
    token("customer", 4, {
      symbol_id: "c2", class: "RelationTerm", language: "schema-en",
    }),
    token("besonderhede", 5),
    token("vind", 6, {
      symbol_id: "a12", class: "QueryVerb", language: "af", operation: "SELECT",
    }),
  ],
  machine_dot: EXAMPLE_DOT,
  derivation: [
    { rule: null, configuration: "[I] b23 c2 a12" },
    { rule: "I b23 -> J", configuration: "[J] c2 a12" },
    { rule: "J c2 -> K", configuration: "[K] a12" },
    { rule: "K a12 -> L", configuration: "[L]" },
  ],
  sql: "SELECT * FROM Customer;",
  intent: {
    operation: "SELECT",
    relation: "Customer",
    relation_symbol: "c2",
    attributes: ["*"],
    attribute_symbols: [],
  },
  error: null,
  result: {
    columns: ["CustomerID", "FirstName", "LastName", "City"],
    rows: [
      [1, "Karabo", "Hlophe", "Durban"],
      [2, "Thandiwe", "Ngcobo", "Pietermaritzburg"],
      [3, "Pieter", "van der Merwe", "Cape Town"],
    ],
  },
};

export const NOVERB_REPORT: TranslationReport = {
  text: "hello world",
  tokens: [token("hello", 0), token("world", 1)],
  machine_dot: null,
  derivation: [],
  sql: null,
  intent: null,
  error: {
    stage: "intent",
    code: "NoVerb",
    message: "no query verb recognized",
  },
};

export const SCHEMA_FIXTURE: SchemaCatalog = {
  tables: [
    {
      name: "Customer",
      columns: [
        { name: "CustomerID", type: "integer" },
        { name: "FirstName", type: "text" },
      ],
      primary_key: "CustomerID",
    },
    {
      name: "Artist",
      columns: [
        { name: "ArtistID", type: "integer" },
        { name: "Name", type: "text" },
      ],
      primary_key: "ArtistID",
    },
  ],
};
