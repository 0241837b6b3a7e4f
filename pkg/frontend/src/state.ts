// View state and the pure rules over it.
//
// The invariant that matters: Calculate may fire only when the current
// answer is calculable and every bindable identifier has a parseable
// numeric input.  Constants are never editable and never required.

import type { AnswerEnvelope, IdentifierInfo } from "./api.js";

export type Phase = "idle" | "asking" | "calculating";

export interface ViewState {
  question: string;
  language: string;
  phase: Phase;
  envelope: AnswerEnvelope | null;
  /** Raw text per bindable identifier symbol, exactly as typed. */
  bindingInputs: Record<string, string>;
  calcResult: { lhs: string; value: number } | null;
  calcError: string | null;
  /** Retryable banner message; the previous answer stays on screen. */
  error: string | null;
}

export function initialState(): ViewState {
  return {
    question: "",
    language: "en",
    phase: "idle",
    envelope: null,
    bindingInputs: {},
    calcResult: null,
    calcError: null,
    error: null,
  };
}

export function canSubmit(state: ViewState): boolean {
  return state.question.trim().length > 0 && state.phase !== "asking";
}

export function bindableIdentifiers(state: ViewState): IdentifierInfo[] {
  const answer = state.envelope?.answer;
  if (!answer) return [];
  return answer.identifiers.filter((ident) => ident.bindable);
}

/** Strict numeric parse: empty or non-finite text does not count. */
export function parseBinding(text: string): number | null {
  const trimmed = text.trim();
  if (trimmed === "") return null;
  const value = Number(trimmed);
  return Number.isFinite(value) ? value : null;
}

export function canCalculate(state: ViewState): boolean {
  if (state.phase !== "idle") return false;
  if (state.envelope?.outcome !== "ANSWERED") return false;
  const answer = state.envelope.answer;
  if (!answer || !answer.calculable) return false;
  return bindableIdentifiers(state).every(
    (ident) => parseBinding(state.bindingInputs[ident.symbol] ?? "") !== null,
  );
}

/** The numeric bindings to send; only valid user input, never constants. */
export function userBindings(state: ViewState): Record<string, number> {
  const bindings: Record<string, number> = {};
  for (const ident of bindableIdentifiers(state)) {
    const value = parseBinding(state.bindingInputs[ident.symbol] ?? "");
    if (value !== null) bindings[ident.symbol] = value;
  }
  return bindings;
}

// ----------------------------------------------------------- transitions
// Each transition returns a fresh state; rendering stays a pure function
// of the result.

export function withQuestion(state: ViewState, question: string): ViewState {
  return { ...state, question };
}

export function withBindingInput(
  state: ViewState,
  symbol: string,
  text: string,
): ViewState {
  return {
    ...state,
    bindingInputs: { ...state.bindingInputs, [symbol]: text },
    calcResult: null,
    calcError: null,
  };
}

export function beginAsking(state: ViewState): ViewState {
  return { ...state, phase: "asking", error: null };
}

export function withEnvelope(state: ViewState, envelope: AnswerEnvelope): ViewState {
  return {
    ...state,
    phase: "idle",
    envelope,
    bindingInputs: {},
    calcResult: null,
    calcError: null,
    error: null,
  };
}

export function beginCalculating(state: ViewState): ViewState {
  return { ...state, phase: "calculating", calcError: null };
}

export function withCalcResult(
  state: ViewState,
  result: { lhs: string; value: number },
): ViewState {
  return { ...state, phase: "idle", calcResult: result, calcError: null };
}

export function withCalcError(state: ViewState, message: string): ViewState {
  return { ...state, phase: "idle", calcResult: null, calcError: message };
}

/** A failed request keeps whatever was on screen and adds the banner. */
export function withError(state: ViewState, message: string): ViewState {
  return { ...state, phase: "idle", error: message };
}
