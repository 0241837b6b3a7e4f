// The view-state rules, checked without any DOM.

import { describe, expect, it } from "vitest";

import type { AnswerEnvelope } from "../src/api.js";
import {
  canCalculate,
  canSubmit,
  initialState,
  parseBinding,
  userBindings,
  withBindingInput,
  withEnvelope,
  withError,
  withQuestion,
  ViewState,
} from "../src/state.js";
import { speedEnvelope } from "./fixtures.js";

function answeredState(): ViewState {
  return withEnvelope(initialState(), speedEnvelope);
}

describe("parseBinding", () => {
  it.each([
    ["100", 100],
    [" 9.58 ", 9.58],
    ["-2.5e3", -2500],
    ["0", 0],
  ])("accepts %s", (text, expected) => {
    expect(parseBinding(text)).toBe(expected);
  });

  it.each(["", "   ", "abc", "1/2", "NaN", "Infinity", "1 2"])(
    "rejects %j",
    (text) => {
      expect(parseBinding(text)).toBeNull();
    },
  );
});

describe("canSubmit", () => {
  it("requires non-blank question text", () => {
    expect(canSubmit(initialState())).toBe(false);
    expect(canSubmit(withQuestion(initialState(), "   "))).toBe(false);
    expect(canSubmit(withQuestion(initialState(), "formula for speed?"))).toBe(true);
  });

  it("blocks a second submit while one is in flight", () => {
    const asking = { ...withQuestion(initialState(), "x"), phase: "asking" as const };
    expect(canSubmit(asking)).toBe(false);
  });
});

describe("canCalculate", () => {
  it("is false with no answer at all", () => {
    expect(canCalculate(initialState())).toBe(false);
  });

  it("is false until every bindable identifier parses", () => {
    let state = answeredState();
    expect(canCalculate(state)).toBe(false);
    state = withBindingInput(state, "s", "100");
    expect(canCalculate(state)).toBe(false);
    state = withBindingInput(state, "t", "9.58");
    expect(canCalculate(state)).toBe(true);
    state = withBindingInput(state, "t", "oops");
    expect(canCalculate(state)).toBe(false);
  });

  it("is false for non-calculable answers regardless of inputs", () => {
    const envelope: AnswerEnvelope = {
      ...speedEnvelope,
      answer: { ...speedEnvelope.answer!, calculable: false, non_algebraic: "derivative" },
    };
    const state = withEnvelope(initialState(), envelope);
    expect(canCalculate(state)).toBe(false);
  });

  it("does not require input for constants or the result slot", () => {
    const envelope: AnswerEnvelope = {
      ...speedEnvelope,
      answer: {
        ...speedEnvelope.answer!,
        formula: "E = mc^2",
        identifiers: [
          { symbol: "E", name: "energy", qid: "Q11379", constant_value: null, bindable: false },
          { symbol: "m", name: "mass", qid: "Q11423", constant_value: null, bindable: true },
          { symbol: "c", name: "speed of light", qid: "Q2111", constant_value: 299792458.0, bindable: false },
        ],
        lhs: "E",
      },
    };
    const state = withBindingInput(withEnvelope(initialState(), envelope), "m", "1");
    expect(canCalculate(state)).toBe(true);
    expect(userBindings(state)).toEqual({ m: 1 });
  });
});

describe("transitions", () => {
  it("a new answer clears old inputs and results", () => {
    let state = answeredState();
    state = withBindingInput(state, "s", "100");
    state = { ...state, calcResult: { lhs: "v", value: 5 } };
    state = withEnvelope(state, speedEnvelope);
    expect(state.bindingInputs).toEqual({});
    expect(state.calcResult).toBeNull();
  });

  it("editing a binding invalidates a stale calculation result", () => {
    let state = answeredState();
    state = { ...state, calcResult: { lhs: "v", value: 5 } };
    state = withBindingInput(state, "s", "200");
    expect(state.calcResult).toBeNull();
  });

  it("a request failure keeps the previous answer on screen", () => {
    const state = withError(answeredState(), "the service could not be reached");
    expect(state.error).toMatch(/could not be reached/);
    expect(state.envelope).not.toBeNull();
    expect(state.envelope!.answer!.formula).toBe("v = s/t");
  });
});
