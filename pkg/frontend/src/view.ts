// Rendering: ViewState in, markup out.  No fetches, no arithmetic.

import type { IdentifierInfo } from "./api.js";
import { bindableIdentifiers, canCalculate, canSubmit, ViewState } from "./state.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function identifierRow(ident: IdentifierInfo, state: ViewState): string {
  const label = ident.name ? `${ident.symbol} (${ident.name})` : ident.symbol;
  let field: string;
  if (ident.constant_value !== null) {
    // constants arrive pre-filled and stay read-only
    field = `<input class="constant-value" data-symbol="${esc(ident.symbol)}"
      value="${esc(String(ident.constant_value))}" readonly disabled>`;
  } else if (ident.bindable) {
    const typed = state.bindingInputs[ident.symbol] ?? "";
    field = `<input class="binding-input" data-symbol="${esc(ident.symbol)}"
      inputmode="decimal" placeholder="value" value="${esc(typed)}">`;
  } else {
    field = `<span class="result-slot">result</span>`;
  }
  return `<tr data-symbol="${esc(ident.symbol)}">
    <td class="identifier-label">&raquo; ${esc(label)}:</td>
    <td>${field}</td>
  </tr>`;
}

function answerPanel(state: ViewState): string {
  const envelope = state.envelope;
  if (!envelope) return "";
  const notes = envelope.diagnostics
    .map((note) => `<li>${esc(note)}</li>`)
    .join("");
  const diagnostics = notes ? `<ul id="diagnostics">${notes}</ul>` : "";

  if (envelope.outcome === "DISAMBIGUATION_NEEDED") {
    return `<section id="answer-panel" class="outcome-disambiguation">
      <p>That name matches more than one concept &mdash; pick one and ask again:</p>
      <ul id="candidate-list">${notes}</ul>
    </section>`;
  }
  if (envelope.outcome !== "ANSWERED" || !envelope.answer) {
    return `<section id="answer-panel" class="outcome-${envelope.outcome.toLowerCase()}">
      <p id="no-answer">No answer.</p>${diagnostics}
    </section>`;
  }

  const answer = envelope.answer;
  const title = answer.concept_name
    ? `${esc(answer.concept_name)}${answer.qid ? ` (${esc(answer.qid)})` : ""}`
    : "";
  const rows = answer.identifiers
    .map((ident) => identifierRow(ident, state))
    .join("");
  const alternatives = answer.alternatives.length
    ? `<details><summary>${answer.alternatives.length} alternative(s)</summary>
       <ul id="alternatives">${answer.alternatives
         .map((alt) => `<li>${esc(alt.formula)}</li>`)
         .join("")}</ul></details>`
    : "";

  let calcSection: string;
  if (answer.calculable) {
    const result = state.calcResult
      ? `<div id="calc-result">${esc(state.calcResult.lhs)} = ${esc(
          String(state.calcResult.value),
        )}</div>`
      : "";
    const calcError = state.calcError
      ? `<div id="calc-error" role="alert">${esc(state.calcError)}</div>`
      : "";
    calcSection = `<section id="calc-section">
      <h3>Calculate:</h3>
      <table id="identifier-table">${rows}</table>
      <button id="calculate-button" ${canCalculate(state) ? "" : "disabled"}>
        ${state.phase === "calculating" ? "Calculating&hellip;" : "Calculate"}
      </button>
      ${result}${calcError}
    </section>`;
  } else {
    const reason = answer.non_algebraic
      ? `not calculable: ${esc(answer.non_algebraic)}`
      : "not calculable";
    calcSection = `<section id="calc-section" class="calc-disabled">
      <table id="identifier-table">${rows}</table>
      <div id="calc-disabled-note">${reason}</div>
    </section>`;
  }

  return `<section id="answer-panel" class="outcome-answered">
    <h2 id="concept-line">${title}</h2>
    <div id="formula-line"><span class="label">Equation:</span>
      <code id="formula">${esc(answer.formula)}</code></div>
    ${calcSection}
    ${alternatives}
    ${diagnostics}
  </section>`;
}

export function render(state: ViewState): string {
  const banner = state.error
    ? `<div id="error-banner" role="alert">${esc(state.error)}
         <button id="retry-button">Retry</button></div>`
    : "";
  const status =
    state.phase === "asking" ? `<div id="status-line">Searching&hellip;</div>` : "";
  // only English ships; the selector stays, disabled options and all
  return `
  <h1>Formula search</h1>
  <form id="question-form">
    <input id="question-input" name="question" autocomplete="off"
      placeholder="what is the formula for speed?"
      value="${esc(state.question)}">
    <select id="language-select" aria-label="language">
      <option value="en" ${state.language === "en" ? "selected" : ""}>English</option>
      <option value="hi" disabled>Hindi</option>
    </select>
    <button id="submit-button" type="submit" ${canSubmit(state) ? "" : "disabled"}>
      Search
    </button>
  </form>
  ${banner}${status}${answerPanel(state)}`;
}

/** Cheap sync for keystrokes: button state changes, the DOM does not rebuild. */
export function syncControls(state: ViewState, root: HTMLElement): void {
  const submit = root.querySelector<HTMLButtonElement>("#submit-button");
  if (submit) submit.disabled = !canSubmit(state);
  const calc = root.querySelector<HTMLButtonElement>("#calculate-button");
  if (calc) calc.disabled = !canCalculate(state);
}

export { bindableIdentifiers };
