// Thin client over the toolkit's JSON API. The composer state is an
// opaque object: it is stored exactly as received and echoed back
// untouched, so the server stays the only party that understands it.

export interface LetterInfo {
  id: string;
  char: string;
  codepoint: string;
  display_name: string;
  joining: "dual" | "right-only";
  joins_left: boolean;
  category: "vowel" | "consonant" | "extended";
  readings: string[];
  forms: string[];
  example: string | null;
  note: string | null;
}

export type ComposerStateJson = Record<string, unknown>;

export interface ReadingOptionJson {
  value: string;
  digraph: boolean;
}

export interface RenderResult {
  jawi: string;
  latin: string;
  forms: string[];
}

export interface ConsistencyRow {
  index: number;
  chosen: string;
  actual: string;
}

export interface StepResult {
  state: ComposerStateJson;
  render: RenderResult;
  consistency: ConsistencyRow[];
}

export type ComposerEventJson =
  | { type: "set_filter"; form: string }
  | { type: "pick_letter"; letter: string }
  | { type: "pick_reading"; index: number }
  | { type: "process" }
  | { type: "new_word" }
  | { type: "undo" };

export class ApiError extends Error {
  constructor(public code: string, message: string) {
    super(message);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** What the screens need from the service; tests substitute fakes. */
export interface JawiApi {
  health(): Promise<{ ok: boolean }>;
  letters(): Promise<LetterInfo[]>;
  composerStep(state: ComposerStateJson, event: ComposerEventJson): Promise<StepResult>;
}

export class ApiClient implements JawiApi {
  constructor(
    private base: string = "",
    private fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.base + path, init);
    } catch (err) {
      throw new ApiError("Offline", `cannot reach the service: ${String(err)}`);
    }
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      const code = (body && (body as { code?: string }).code) || `Http${response.status}`;
      const message =
        (body && (body as { message?: string }).message) || `request failed (${response.status})`;
      throw new ApiError(code, message);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  health(): Promise<{ ok: boolean }> {
    return this.request("/api/health");
  }

  letters(): Promise<LetterInfo[]> {
    return this.request("/api/letters");
  }

  composerStep(state: ComposerStateJson, event: ComposerEventJson): Promise<StepResult> {
    return this.post("/api/composer/step", { state, event });
  }
}
