import { httpApi } from "./api";
import { NarrationConsole } from "./console";
import { renderMachine } from "./machine";
import {
  renderDerivation,
  renderError,
  renderIntent,
  renderResult,
  renderSchema,
  renderSql,
  renderTokens,
} from "./render";
import type { TranslationReport } from "./types";
import "./styles.css";

function panel(id: string): HTMLElement {
  const element = document.getElementById(id);
  if (!element) {
    throw new Error(`missing element #${id}`);
  }
  return element;
}

const input = panel("narration") as HTMLInputElement;
const form = panel("narration-form") as HTMLFormElement;
const historyList = panel("history");

function showReport(report: TranslationReport): void {
  panel("tokens").innerHTML = renderTokens(report.tokens);
  panel("machine").innerHTML = renderMachine(report.machine_dot);
  panel("derivation").innerHTML = renderDerivation(report.derivation);
  panel("sql").innerHTML = renderIntent(report.intent) + renderSql(report.sql);
  panel("result").innerHTML = renderError(report.error) + renderResult(report.result);
}

const console_ = new NarrationConsole(httpApi, showReport);

function refreshHistory(): void {
  historyList.innerHTML = console_.state.history
    .map((entry, i) =>
      `<li><button type="button" data-index="${i}">${entry.narration}</button>` +
      `<span class="hist-sql">${entry.sql ?? "—"}</span></li>`)
    .reverse()
    .join("");
}

form.addEventListener("submit", (event) => {
  event.preventDefault();
  const text = input.value.trim();
  if (!text) {
    return;
  }
  console_.submit(text)
    .then(refreshHistory)
    .catch((err) => {
      panel("result").innerHTML =
        `<div class="error error-transport">service unreachable: ${err}</div>`;
    });
});

historyList.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const index = target.dataset.index;
  if (index !== undefined) {
    const entry = console_.state.history[Number(index)];
    input.value = entry.narration;
    console_.submit(entry.narration).then(refreshHistory).catch(() => undefined);
  }
});

console_.loadSchema()
  .then((catalog) => {
    panel("schema").innerHTML = renderSchema(catalog);
  })
  .catch(() => {
    panel("schema").innerHTML = '<p class="hint">schema unavailable</p>';
  });

httpApi.languages()
  .then((languages) => {
    panel("languages").textContent =
      languages.map((l) => `${l.tag} (${l.word_count})`).join(" · ");
  })
  .catch(() => undefined);
