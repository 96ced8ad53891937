import type { LanguageCount, SchemaCatalog, TranslationReport } from "./types";

export interface ApiClient {
  translate(text: string, execute?: boolean): Promise<TranslationReport>;
  schema(): Promise<SchemaCatalog>;
  languages(): Promise<LanguageCount[]>;
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    throw new Error(`HTTP ${response.status}`);
  }
  return response.json() as Promise<T>;
}

export const httpApi: ApiClient = {
  async translate(text: string, execute = true) {
    const response = await fetch("/api/translate", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text, execute }),
    });
    return asJson<TranslationReport>(response);
  },

  async schema() {
    return asJson<SchemaCatalog>(await fetch("/api/schema"));
  },

  async languages() {
    return asJson<LanguageCount[]>(await fetch("/api/languages"));
  },
};
