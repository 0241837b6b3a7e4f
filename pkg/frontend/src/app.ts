// Event wiring.  One delegated listener set on the root; every state
// change rerenders (keystrokes only resync the buttons, so focus stays
// put).  A sequence number per request kind means a late response from
// a superseded request is dropped on the floor, and an AbortController
// keeps at most one question and one calculation in flight.

import { ApiError, askQuestion, calculate, FetchLike } from "./api.js";
import {
  beginAsking,
  beginCalculating,
  canCalculate,
  initialState,
  userBindings,
  ViewState,
  withBindingInput,
  withCalcError,
  withCalcResult,
  withEnvelope,
  withError,
  withQuestion,
} from "./state.js";
import { render, syncControls } from "./view.js";

export interface App {
  root: HTMLElement;
  state: ViewState;
}

export function initApp(root: HTMLElement, fetchImpl?: FetchLike): App {
  const doFetch: FetchLike =
    fetchImpl ?? ((input, init) => globalThis.fetch(input, init));
  const app: App = { root, state: initialState() };
  let askSeq = 0;
  let calcSeq = 0;
  let askAbort: AbortController | null = null;
  let calcAbort: AbortController | null = null;

  function update(next: ViewState): void {
    app.state = next;
    root.innerHTML = render(next);
  }

  async function submitQuestion(): Promise<void> {
    const text = app.state.question.trim();
    if (!text || app.state.phase === "calculating") return;
    const seq = ++askSeq;
    askAbort?.abort();
    askAbort = new AbortController();
    update(beginAsking(app.state));
    try {
      const envelope = await askQuestion(
        doFetch, text, app.state.language, askAbort.signal,
      );
      if (seq !== askSeq) return; // superseded while in flight
      update(withEnvelope(app.state, envelope));
    } catch (err) {
      if (seq !== askSeq) return;
      if (err instanceof DOMException && err.name === "AbortError") return;
      const detail = err instanceof ApiError ? err.message : "request failed";
      update(withError(app.state, detail));
    }
  }

  async function submitCalculation(): Promise<void> {
    if (!canCalculate(app.state)) return; // belt and braces with the button
    const answer = app.state.envelope?.answer;
    if (!answer) return;
    const seq = ++calcSeq;
    calcAbort?.abort();
    calcAbort = new AbortController();
    update(beginCalculating(app.state));
    try {
      const result = await calculate(
        doFetch, answer.formula, userBindings(app.state), calcAbort.signal,
      );
      if (seq !== calcSeq) return;
      update(withCalcResult(app.state, { lhs: result.lhs, value: result.value }));
    } catch (err) {
      if (seq !== calcSeq) return;
      if (err instanceof DOMException && err.name === "AbortError") return;
      const detail = err instanceof ApiError ? err.message : "calculation failed";
      update(withCalcError(app.state, detail));
    }
  }

  root.addEventListener("submit", (event) => {
    const form = event.target as HTMLElement;
    if (form.id === "question-form") {
      event.preventDefault();
      void submitQuestion();
    }
  });

  root.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.id === "calculate-button") {
      void submitCalculation();
    } else if (target.id === "retry-button") {
      void submitQuestion();
    }
  });

  root.addEventListener("input", (event) => {
    const target = event.target as HTMLInputElement;
    if (target.id === "question-input") {
      app.state = withQuestion(app.state, target.value);
      syncControls(app.state, root);
    } else if (target.classList.contains("binding-input")) {
      const symbol = target.dataset.symbol;
      if (symbol) {
        app.state = withBindingInput(app.state, symbol, target.value);
        syncControls(app.state, root);
      }
    }
  });

  root.addEventListener("change", (event) => {
    const target = event.target as HTMLSelectElement;
    if (target.id === "language-select") {
      app.state = { ...app.state, language: target.value };
    }
  });

  update(app.state);
  return app;
}
