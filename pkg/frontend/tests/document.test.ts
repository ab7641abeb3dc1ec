import { describe, expect, it } from "vitest";

import type { FsmDocument } from "../src/document.js";
import { initialList, semanticallyEqual } from "../src/document.js";

const base: FsmDocument = {
  states: ["a", "b"],
  input_symbols: ["0", "1"],
  transitions: {
    a: { "0": "b", "1": "a" },
    b: { "0": "b", "1": "b" },
  },
  initial_state: "a",
  final_states: ["b"],
};

describe("semanticallyEqual", () => {
  it("ignores entry order and list-versus-string cell shape", () => {
    const other: FsmDocument = {
      states: ["b", "a"],
      input_symbols: ["1", "0"],
      transitions: {
        b: { "1": ["b"], "0": ["b"] },
        a: { "1": ["a"], "0": ["b"] },
      },
      initial_state: ["a"],
      final_states: ["b"],
    };
    expect(semanticallyEqual(base, other)).toBe(true);
  });

  it("treats empty rows and empty cells as absent", () => {
    const left = structuredClone(base);
    left.states = ["a", "b", "c"];
    const right = structuredClone(left);
    (right.transitions as Record<string, Record<string, string[]>>).c = {};
    right.transitions.a["1"] = [];
    const strictLeft = structuredClone(left);
    delete strictLeft.transitions.a["1"];
    expect(semanticallyEqual(strictLeft, right)).toBe(true);
  });

  it("detects different targets", () => {
    const other = structuredClone(base);
    other.transitions.a["0"] = "a";
    expect(semanticallyEqual(base, other)).toBe(false);
  });

  it("detects different accepting sets", () => {
    const other = structuredClone(base);
    other.final_states = ["a"];
    expect(semanticallyEqual(base, other)).toBe(false);
  });

  it("detects different start markers", () => {
    const other = structuredClone(base);
    other.initial_state = ["a", "b"];
    expect(semanticallyEqual(base, other)).toBe(false);
  });
});

describe("initialList", () => {
  it("normalizes the three wire shapes", () => {
    expect(initialList(base)).toEqual(["a"]);
    expect(initialList({ ...base, initial_state: null })).toEqual([]);
    expect(initialList({ ...base, initial_state: ["a", "b"] })).toEqual(["a", "b"]);
  });
});
