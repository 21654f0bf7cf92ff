// Typed client for the annotation service. The workbench talks to the
// backend exclusively through this module; it never computes statistics or
// specificity itself.

import type {
  EmotionChoice,
  MutationResult,
  ParaphraseMode,
  Presentation,
  RecordView,
  ReportView,
  SpecificityView,
  SynsetView,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => globalThis.fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const text = await response.text();
    if (!response.ok) {
      let code = "http_error";
      let message = text;
      try {
        const doc = JSON.parse(text);
        code = doc?.error?.code ?? code;
        message = doc?.error?.message ?? message;
      } catch {
        // non-JSON error body; keep raw text
      }
      throw new ApiError(response.status, code, message);
    }
    return JSON.parse(text) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async synsets(lemma: string, pos: string): Promise<SynsetView[]> {
    const doc = await this.request<{ synsets: SynsetView[] }>(
      `/synsets?lemma=${encodeURIComponent(lemma)}&pos=${encodeURIComponent(pos)}`,
    );
    return doc.synsets;
  }

  async synset(key: string): Promise<SynsetView> {
    const doc = await this.request<{ synset: SynsetView }>(`/synset/${encodeURIComponent(key)}`);
    return doc.synset;
  }

  specificity(a: string, b: string): Promise<SpecificityView & { a: string; b: string }> {
    return this.request(`/specificity?a=${encodeURIComponent(a)}&b=${encodeURIComponent(b)}`);
  }

  async sisters(key: string): Promise<SynsetView[]> {
    const doc = await this.request<{ candidates: SynsetView[] }>(
      `/sisters/${encodeURIComponent(key)}`,
    );
    return doc.candidates;
  }

  async hyponyms(key: string): Promise<SynsetView[]> {
    const doc = await this.request<{ candidates: SynsetView[] }>(
      `/hyponyms/${encodeURIComponent(key)}`,
    );
    return doc.candidates;
  }

  async paths(key: string): Promise<string[][]> {
    const doc = await this.request<{ paths: string[][] }>(`/paths/${encodeURIComponent(key)}`);
    return doc.paths;
  }

  async records(): Promise<RecordView[]> {
    const doc = await this.request<{ records: RecordView[] }>("/records");
    return doc.records;
  }

  async record(id: string): Promise<RecordView> {
    const doc = await this.request<{ record: RecordView }>(`/records/${encodeURIComponent(id)}`);
    return doc.record;
  }

  chooseSynset(
    recordId: string,
    slot: "first" | "second",
    key: string,
    idempotencyKey?: string,
  ): Promise<MutationResult> {
    return this.post(`/records/${encodeURIComponent(recordId)}/synset`, {
      slot,
      key,
      idempotencyKey,
    });
  }

  createParaphrase(
    recordId: string,
    mode: ParaphraseMode,
    key: string,
    sentence: string,
    idempotencyKey?: string,
  ): Promise<MutationResult> {
    return this.post(`/records/${encodeURIComponent(recordId)}/paraphrase`, {
      mode,
      key,
      sentence,
      idempotencyKey,
    });
  }

  labelEmotion(
    recordId: string,
    annotator: string,
    label: EmotionChoice,
    presentation: Presentation,
    idempotencyKey?: string,
  ): Promise<MutationResult> {
    return this.post(`/records/${encodeURIComponent(recordId)}/emotion`, {
      annotator,
      label,
      presentation,
      idempotencyKey,
    });
  }

  report(): Promise<ReportView> {
    return this.request<ReportView>("/report?format=json");
  }

  /** Raw JSON report body, byte-identical to the CLI analyze output. */
  async reportRaw(): Promise<string> {
    const response = await this.fetchFn(this.baseUrl + "/report?format=json");
    if (!response.ok) {
      throw new ApiError(response.status, "http_error", await response.text());
    }
    return response.text();
  }
}
