// Shapes of the service's JSON responses. The console renders these and
// nothing else: every displayed fact originates from the API.

export type TokenClass = "QueryVerb" | "AttributeTerm" | "RelationTerm";

export interface TokenView {
  surface: string;
  normalized: string;
  position: number;
  symbol_id: string | null;
  class: TokenClass | null;
  language: string | null;
  operation: string | null;
}

export interface DerivationStep {
  rule: string | null;
  configuration: string;
}

export interface IntentView {
  operation: string;
  relation: string | null;
  relation_symbol: string;
  attributes: string[];
  attribute_symbols: string[];
}

export interface ReportError {
  stage: string | null;
  code: string;
  message: string;
  positions?: number[];
}

export interface ResultView {
  columns: string[];
  rows: (string | number | null)[][];
}

export interface TranslationReport {
  text: string;
  tokens: TokenView[];
  machine_dot: string | null;
  derivation: DerivationStep[];
  sql: string | null;
  intent: IntentView | null;
  error: ReportError | null;
  result?: ResultView;
}

export interface SchemaColumn {
  name: string;
  type: string;
}

export interface SchemaTable {
  name: string;
  columns: SchemaColumn[];
  primary_key: string | null;
}

export interface SchemaCatalog {
  tables: SchemaTable[];
}

export interface LanguageCount {
  tag: string;
  word_count: number;
}
