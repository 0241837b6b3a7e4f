// Shared mock payloads (copied verbatim from live API responses) and a
// recording fetch stub.  All traffic in the tests flows through the
// stub, so any number on screen provably came out of a mocked response.

import type { AnswerEnvelope, CalculationResult, FetchLike } from "../src/api.js";

export const speedEnvelope: AnswerEnvelope = {
  intent: { concept: "speed", language: "en", variant: "formula_name" },
  answer: {
    formula: "v = s/t",
    concept_name: "speed",
    qid: "Q3711325",
    identifiers: [
      { symbol: "v", name: "speed", qid: "Q3711325", constant_value: null, bindable: false },
      { symbol: "s", name: "distance", qid: "Q126017", constant_value: null, bindable: true },
      { symbol: "t", name: "duration", qid: "Q2199864", constant_value: null, bindable: true },
    ],
    provenance: "KG",
    alternatives: [],
    lhs: "v",
    calculable: true,
    non_algebraic: null,
  },
  outcome: "ANSWERED",
  diagnostics: [],
};

export const speedCalcResult: CalculationResult = {
  lhs: "v",
  value: 10.438413361169102,
  bindings: {
    s: { origin: "USER", value: 100.0 },
    t: { origin: "USER", value: 9.58 },
  },
};

export const energyEnvelope: AnswerEnvelope = {
  intent: { language: "en", variant: "relationship_names" },
  answer: {
    formula: "E = mc^2",
    concept_name: "mass–energy equivalence",
    qid: "Q35875",
    identifiers: [
      { symbol: "E", name: "energy", qid: "Q11379", constant_value: null, bindable: false },
      { symbol: "m", name: "mass", qid: "Q11423", constant_value: null, bindable: true },
      { symbol: "c", name: "speed of light", qid: "Q2111", constant_value: 299792458.0, bindable: false },
    ],
    provenance: "KG",
    alternatives: [],
    lhs: "E",
    calculable: true,
    non_algebraic: null,
  },
  outcome: "ANSWERED",
  diagnostics: [],
};

// the acceleration answer: a defining formula with a derivative, so the
// service marks it non-calculable and names the construct
export const accelerationEnvelope: AnswerEnvelope = {
  intent: { concept: "acceleration", language: "en", variant: "formula_name" },
  answer: {
    formula: "\\mathbf{a} = \\frac{d\\mathbf{v}}{dt}",
    concept_name: "acceleration",
    qid: "Q11376",
    identifiers: [
      { symbol: "a", name: "acceleration", qid: "Q11376", constant_value: null, bindable: false },
      { symbol: "v", name: "velocity", qid: "Q11465", constant_value: null, bindable: true },
      { symbol: "t", name: "time", qid: "Q11471", constant_value: null, bindable: true },
    ],
    provenance: "KG",
    alternatives: [],
    lhs: null,
    calculable: false,
    non_algebraic: "derivative",
  },
  outcome: "ANSWERED",
  diagnostics: [],
};

export interface RecordedCall {
  path: string;
  body: unknown;
}

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

/** A fetch stub that records every call and answers from `handler`. */
export function makeFetch(
  handler: (path: string, body: unknown) => Response | Promise<Response>,
): { fetchImpl: FetchLike; calls: RecordedCall[] } {
  const calls: RecordedCall[] = [];
  const fetchImpl: FetchLike = async (input, init) => {
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    calls.push({ path: input, body });
    return handler(input, body);
  };
  return { fetchImpl, calls };
}

/** Let pending fetch handlers and re-renders run to completion. */
export async function flush(): Promise<void> {
  for (let i = 0; i < 4; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
