import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { MatrixEditor, methodAvailability } from "../src/editor.js";
import type { MethodInfo, MethodsResponse } from "../src/types.js";

const METHODS: MethodInfo[] = (
  JSON.parse(
    readFileSync(new URL("../../fixtures/methods.json", import.meta.url), "utf-8"),
  ) as MethodsResponse
).methods;

const byId = (id: string, task?: string): MethodInfo =>
  METHODS.find((m) => m.id === id && (task === undefined || m.task === task))!;

describe("matrix editor", () => {
  it("accepts fraction literals", () => {
    const editor = new MatrixEditor(2, 2);
    editor.setCell(0, 0, "1/3");
    expect(editor.issues()).toEqual([]);
    expect(editor.valid).toBe(true);
  });

  it("flags invalid cells and blocks submission", () => {
    const editor = new MatrixEditor(2, 2);
    editor.setCell(0, 1, "abc");
    const issues = editor.issues();
    expect(issues).toHaveLength(1);
    expect(issues[0]).toMatchObject({ row: 0, col: 1 });
    expect(editor.valid).toBe(false);
    expect(() => editor.toMatrixJson()).toThrow();
  });

  it("emits the engine's matrix JSON form with canonical entries", () => {
    const editor = new MatrixEditor(2, 2);
    editor.setCell(0, 0, " 2/4 ");
    editor.setCell(0, 1, "0.25");
    editor.setCell(1, 0, "-3");
    editor.setCell(1, 1, "0/7");
    expect(editor.toMatrixJson()).toEqual({
      rows: 2,
      cols: 2,
      entries: [
        ["1/2", "1/4"],
        ["-3", "0"],
      ],
    });
  });

  it("preserves overlapping cells on resize and clamps to the cap", () => {
    const editor = new MatrixEditor(2, 2);
    editor.setCell(0, 0, "9");
    editor.resize(3, 3);
    expect(editor.cells[0][0]).toBe("9");
    expect(editor.cells[2][2]).toBe("0");
    editor.resize(99, 99);
    expect(editor.rows).toBe(16);
    expect(editor.cols).toBe(16);
  });
});

describe("method applicability by shape", () => {
  it("disables sarrus on a 2x2 grid with the server's tooltip text", () => {
    const result = methodAvailability(byId("sarrus"), { a: { rows: 2, cols: 2 } });
    expect(result.enabled).toBe(false);
    expect(result.reason).toBe("3x3 only");
  });

  it("allows sarrus on a 3x3 grid", () => {
    const result = methodAvailability(byId("sarrus"), { a: { rows: 3, cols: 3 } });
    expect(result.enabled).toBe(true);
    expect(result.reason).toBeNull();
  });

  it("disables laplace above its cap", () => {
    const result = methodAvailability(byId("laplace"), { a: { rows: 9, cols: 9 } });
    expect(result.enabled).toBe(false);
  });

  it("requires matching inner dimensions for multiplication", () => {
    const naive = byId("naive");
    expect(
      methodAvailability(naive, { a: { rows: 2, cols: 3 }, b: { rows: 3, cols: 2 } }).enabled,
    ).toBe(true);
    expect(
      methodAvailability(naive, { a: { rows: 2, cols: 3 }, b: { rows: 2, cols: 2 } }).enabled,
    ).toBe(false);
  });

  it("requires a column vector with matching rows for solving", () => {
    const gauss = byId("gauss", "solve");
    expect(
      methodAvailability(gauss, { a: { rows: 2, cols: 2 }, b: { rows: 2, cols: 1 } }).enabled,
    ).toBe(true);
    expect(
      methodAvailability(gauss, { a: { rows: 2, cols: 2 }, b: { rows: 3, cols: 1 } }).enabled,
    ).toBe(false);
    const cramer = byId("cramer", "solve");
    expect(
      methodAvailability(cramer, { a: { rows: 2, cols: 3 }, b: { rows: 2, cols: 1 } }).enabled,
    ).toBe(false);
  });

  it("disables everything above the dimension cap", () => {
    const lu = byId("lu");
    expect(methodAvailability(lu, { a: { rows: 17, cols: 17 } }).enabled).toBe(false);
  });
});
