// The editor's cell grammar must match the server's parser exactly on the
// shared fixture set (fixtures/parser_cases.json is frozen from the engine).

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { canonicalize, formatRational, parseCell } from "../src/rational.js";

interface ParserCase {
  input: string;
  ok: boolean;
  canonical: string | null;
}

const CASES: ParserCase[] = JSON.parse(
  readFileSync(new URL("../../fixtures/parser_cases.json", import.meta.url), "utf-8"),
);

describe("shared parser contract", () => {
  it("covers both accepted and rejected literals", () => {
    expect(CASES.some((c) => c.ok)).toBe(true);
    expect(CASES.some((c) => !c.ok)).toBe(true);
    expect(CASES.length).toBeGreaterThanOrEqual(30);
  });

  for (const testCase of CASES) {
    it(`${testCase.ok ? "accepts" : "rejects"} ${JSON.stringify(testCase.input)}`, () => {
      const result = canonicalize(testCase.input);
      if (testCase.ok) {
        expect(result).toBe(testCase.canonical);
      } else {
        expect(result).toBeNull();
      }
    });
  }
});

describe("normalization", () => {
  it("keeps denominators positive and reduced", () => {
    expect(parseCell("2/6")).toEqual({ num: 1n, den: 3n });
    expect(parseCell("0/9")).toEqual({ num: 0n, den: 1n });
  });

  it("handles arbitrarily large operands", () => {
    const big = parseCell("123456789012345678901234567890/2");
    expect(big).not.toBeNull();
    expect(formatRational(big!)).toBe("61728394506172839450617283945");
  });
});
