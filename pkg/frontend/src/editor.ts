/** Matrix editor state: a grid of cell strings with exact validation.
 *
 * The editor mirrors the server's parsing rules cell by cell (see
 * rational.ts) and emits the engine's matrix JSON form.  Method applicability
 * is checked on shapes only; anything value-dependent (singularity, ...)
 * is the server's verdict.
 */

import { canonicalize } from "./rational.js";
import type { MatrixJson, MethodInfo } from "./types.js";

export const DIMENSION_CAP = 16;
export const LAPLACE_CAP = 8;

export interface CellIssue {
  row: number;
  col: number;
  message: string;
}

export class MatrixEditor {
  rows: number;
  cols: number;
  cells: string[][];

  constructor(rows = 2, cols = 2, fill = "0") {
    this.rows = rows;
    this.cols = cols;
    this.cells = Array.from({ length: rows }, () => Array(cols).fill(fill));
  }

  resize(rows: number, cols: number, fill = "0"): void {
    rows = Math.max(1, Math.min(DIMENSION_CAP, rows));
    cols = Math.max(1, Math.min(DIMENSION_CAP, cols));
    const next = Array.from({ length: rows }, (_, i) =>
      Array.from({ length: cols }, (_, j) => this.cells[i]?.[j] ?? fill),
    );
    this.rows = rows;
    this.cols = cols;
    this.cells = next;
  }

  setCell(row: number, col: number, text: string): void {
    this.cells[row][col] = text;
  }

  /** Per-cell validation messages; empty list means the grid is valid. */
  issues(): CellIssue[] {
    const out: CellIssue[] = [];
    for (let i = 0; i < this.rows; i++) {
      for (let j = 0; j < this.cols; j++) {
        if (canonicalize(this.cells[i][j]) === null) {
          out.push({
            row: i,
            col: j,
            message: `not an exact value: use "3", "1/2" or "0.25"`,
          });
        }
      }
    }
    return out;
  }

  get valid(): boolean {
    return this.issues().length === 0;
  }

  /** The engine's matrix JSON form; entries are canonicalized strings. */
  toMatrixJson(): MatrixJson {
    if (!this.valid) {
      throw new Error("cannot submit an invalid grid");
    }
    return {
      rows: this.rows,
      cols: this.cols,
      entries: this.cells.map((row) => row.map((cell) => canonicalize(cell) as string)),
    };
  }
}

export interface MethodAvailability {
  method: MethodInfo;
  enabled: boolean;
  /** Tooltip when disabled; uses the server-provided applicability text. */
  reason: string | null;
}

interface Shapes {
  a: { rows: number; cols: number };
  b?: { rows: number; cols: number };
}

/** Shape-level applicability of a method to the edited input(s). */
export function methodAvailability(method: MethodInfo, shapes: Shapes): MethodAvailability {
  const { a, b } = shapes;
  const disabled = (reason: string): MethodAvailability => ({ method, enabled: false, reason });
  const enabled: MethodAvailability = { method, enabled: true, reason: null };

  if (Math.max(a.rows, a.cols, b?.rows ?? 0, b?.cols ?? 0) > DIMENSION_CAP) {
    return disabled(`inputs above the ${DIMENSION_CAP}x${DIMENSION_CAP} cap`);
  }
  switch (method.task) {
    case "multiply":
      if (!b || a.cols !== b.rows) {
        return disabled("inner dimensions must agree");
      }
      return enabled;
    case "determinant":
      if (a.rows !== a.cols) {
        return disabled("needs a square matrix");
      }
      if (method.id === "sarrus" && a.rows !== 3) {
        return disabled(method.applicability); // "3x3 only"
      }
      if (method.id === "laplace" && a.rows > LAPLACE_CAP) {
        return disabled(method.applicability);
      }
      return enabled;
    case "inverse":
    case "eigen":
      if (a.rows !== a.cols) {
        return disabled("needs a square matrix");
      }
      return enabled;
    case "solve":
      if (!b || b.cols !== 1) {
        return disabled("right-hand side must be a column vector");
      }
      if (a.rows !== b.rows) {
        return disabled("b must have one entry per row of A");
      }
      if (method.id === "cramer" && a.rows !== a.cols) {
        return disabled("needs a square matrix");
      }
      return enabled;
    default:
      return disabled(`unknown task ${method.task}`);
  }
}
