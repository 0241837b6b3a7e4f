// Typed client for the question-answering HTTP API.
//
// Everything the page displays comes out of these two calls; the client
// performs no arithmetic and no fallback inference of its own.

export interface IdentifierInfo {
  symbol: string;
  name: string | null;
  qid: string | null;
  constant_value: number | null;
  bindable: boolean;
}

export interface Alternative {
  formula: string;
  concept_name: string | null;
  qid: string | null;
}

export interface FormulaAnswer {
  formula: string;
  concept_name: string | null;
  qid: string | null;
  identifiers: IdentifierInfo[];
  provenance: string;
  alternatives: Alternative[];
  lhs: string | null;
  calculable: boolean;
  non_algebraic: string | null;
}

export type Outcome =
  | "ANSWERED"
  | "NO_RESULT"
  | "DISAMBIGUATION_NEEDED"
  | "UNRECOGNIZED";

export interface AnswerEnvelope {
  intent: Record<string, string> | null;
  answer: FormulaAnswer | null;
  outcome: Outcome;
  diagnostics: string[];
}

export interface CalculationBinding {
  value: number;
  origin: "USER" | "CONSTANT";
}

export interface CalculationResult {
  lhs: string;
  value: number;
  bindings: Record<string, CalculationBinding>;
}

export interface ApiErrorBody {
  error: { code: string; detail: string; symbols?: string[]; construct?: string };
}

/** Thrown for HTTP-level failures and for typed API error envelopes. */
export class ApiError extends Error {
  readonly code: string;

  constructor(code: string, detail: string) {
    super(detail);
    this.code = code;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

// The API base is configurable at runtime (a host page may set
// window.MATHQA_API_BASE before loading the app); default is same-origin.
export function apiBase(): string {
  const override = (globalThis as { MATHQA_API_BASE?: unknown }).MATHQA_API_BASE;
  return typeof override === "string" ? override.replace(/\/$/, "") : "";
}

async function post<T>(
  fetchImpl: FetchLike,
  path: string,
  body: unknown,
  signal?: AbortSignal,
): Promise<T> {
  let response: Response;
  try {
    response = await fetchImpl(`${apiBase()}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") throw err;
    throw new ApiError("network", "the service could not be reached");
  }
  let payload: unknown;
  try {
    payload = await response.json();
  } catch {
    throw new ApiError("bad_response", `unexpected reply (HTTP ${response.status})`);
  }
  if (!response.ok) {
    const error = (payload as ApiErrorBody).error;
    if (error && typeof error.code === "string") {
      throw new ApiError(error.code, error.detail ?? error.code);
    }
    throw new ApiError("http_error", `request failed (HTTP ${response.status})`);
  }
  return payload as T;
}

export function askQuestion(
  fetchImpl: FetchLike,
  text: string,
  language: string,
  signal?: AbortSignal,
): Promise<AnswerEnvelope> {
  return post<AnswerEnvelope>(fetchImpl, "/api/question", { text, language }, signal);
}

export function calculate(
  fetchImpl: FetchLike,
  formula: string,
  bindings: Record<string, number>,
  signal?: AbortSignal,
): Promise<CalculationResult> {
  return post<CalculationResult>(fetchImpl, "/api/calculate", { formula, bindings }, signal);
}
