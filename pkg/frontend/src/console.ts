// Console state and the submit loop. One translate request is in flight at
// a time; further submissions queue behind it in order.

import type { ApiClient } from "./api";
import type { SchemaCatalog, TranslationReport } from "./types";

export interface HistoryEntry {
  narration: string;
  sql: string | null;
}

export interface ConsoleState {
  narration: string;
  report: TranslationReport | null;
  history: HistoryEntry[];
  schemaPanel: SchemaCatalog | null;
}

export class NarrationConsole {
  readonly state: ConsoleState = {
    narration: "",
    report: null,
    history: [],
    schemaPanel: null,
  };

  private chain: Promise<unknown> = Promise.resolve();

  constructor(
    private readonly api: ApiClient,
    private readonly onReport: (report: TranslationReport) => void = () => {},
  ) {}

  async loadSchema(): Promise<SchemaCatalog> {
    const catalog = await this.api.schema();
    this.state.schemaPanel = catalog;
    return catalog;
  }

  submit(text: string): Promise<TranslationReport> {
    const run = this.chain.then(async () => {
      this.state.narration = text;
      const report = await this.api.translate(text, true);
      this.state.report = report;
      this.state.history.push({ narration: text, sql: report.sql });
      this.onReport(report);
      return report;
    });
    // keep the queue alive after failures so later submissions still run
    this.chain = run.catch(() => undefined);
    return run;
  }
}
