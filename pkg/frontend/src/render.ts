// HTML renderers for the report panels. Pure string-in/string-out so the
// test suite can snapshot them without a DOM.

import type {
  DerivationStep,
  IntentView,
  ReportError,
  ResultView,
  SchemaCatalog,
  TokenClass,
  TokenView,
} from "./types";

const TOKEN_CSS: Record<TokenClass, string> = {
  QueryVerb: "tok-verb",
  AttributeTerm: "tok-attr",
  RelationTerm: "tok-rel",
};

export function escapeHtml(value: string): string {
  return value
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderTokens(tokens: TokenView[]): string {
  if (!tokens.length) {
    return '<p class="hint">nothing to classify</p>';
  }
  const parts = tokens.map((token) => {
    if (!token.class) {
      return `<span class="tok tok-plain">${escapeHtml(token.surface)}</span>`;
    }
    const css = TOKEN_CSS[token.class];
    const title = `${token.symbol_id} · ${token.class}` +
      (token.operation ? ` · ${token.operation}` : "");
    return `<span class="tok ${css}" title="${escapeHtml(title)}">` +
      `${escapeHtml(token.surface)}<sub>${escapeHtml(token.symbol_id ?? "")}</sub></span>`;
  });
  return `<p class="tokens">${parts.join(" ")}</p>`;
}

export function renderSql(sql: string | null): string {
  if (!sql) {
    return '<p class="hint">no query generated</p>';
  }
  return `<pre class="sql"><code>${escapeHtml(sql)}</code></pre>`;
}

export function renderDerivation(steps: DerivationStep[]): string {
  if (!steps.length) {
    return '<p class="hint">no derivation</p>';
  }
  const items = steps.map((step) => {
    const rule = step.rule
      ? `<span class="rule">[${escapeHtml(step.rule)}]</span>`
      : '<span class="rule rule-start">start</span>';
    return `<li><code>${escapeHtml(step.configuration)}</code> ${rule}</li>`;
  });
  return `<ol class="derivation">${items.join("")}</ol>`;
}

export function renderIntent(intent: IntentView | null): string {
  if (!intent) {
    return "";
  }
  const attrs = intent.attributes.join(", ");
  return `<p class="intent">${escapeHtml(intent.operation)} · ` +
    `${escapeHtml(intent.relation ?? intent.relation_symbol)} · ` +
    `${escapeHtml(attrs)}</p>`;
}

export function renderResult(result: ResultView | undefined): string {
  if (!result) {
    return "";
  }
  const head = result.columns.map((c) => `<th>${escapeHtml(c)}</th>`).join("");
  const body = result.rows
    .map((row) => {
      const cells = row
        .map((v) => `<td>${v === null ? "<i>null</i>" : escapeHtml(String(v))}</td>`)
        .join("");
      return `<tr>${cells}</tr>`;
    })
    .join("");
  const count = `${result.rows.length} row${result.rows.length === 1 ? "" : "s"}`;
  return `<table class="result"><thead><tr>${head}</tr></thead>` +
    `<tbody>${body}</tbody></table><p class="rowcount">${count}</p>`;
}

export function renderError(error: ReportError | null): string {
  if (!error) {
    return "";
  }
  return `<div class="error"><span class="error-stage">${escapeHtml(error.stage ?? "input")}` +
    `</span> <strong>${escapeHtml(error.code)}</strong>: ${escapeHtml(error.message)}</div>`;
}

export function renderSchema(catalog: SchemaCatalog): string {
  const tables = catalog.tables.map((table) => {
    const cols = table.columns
      .map((c) => `<li>${escapeHtml(c.name)} <span class="ctype">${escapeHtml(c.type)}</span></li>`)
      .join("");
    return `<details><summary>${escapeHtml(table.name)}</summary><ul>${cols}</ul></details>`;
  });
  return tables.join("");
}
