/** Shared-cursor stepping over one or more traces.
 *
 * All columns advance together; a shorter trace shows a "complete" marker
 * once the cursor moves past its last step.  The cursor is clamped to
 * [0, maxStep], so stepping back from 0 and forward from the end are no-ops.
 */

import { isTraceError } from "./types.js";
import type { ComputeResponse, OpCountJson, StepJson, TraceEntry, TraceJson } from "./types.js";

export interface StepperColumn {
  methodId: string;
  error: string | null;
  steps: StepJson[];
  finalResult: TraceJson["final_result"] | null;
  totalCost: OpCountJson | null;
}

const ZERO_COST: OpCountJson = { mults: 0, adds: 0, subs: 0 };

export class ComparisonStepper {
  readonly columns: StepperColumn[];
  readonly maxStep: number;
  private _cursor = 0;

  constructor(entries: TraceEntry[]) {
    if (entries.length === 0) {
      throw new Error("stepper needs at least one trace");
    }
    this.columns = entries.map((entry) => {
      if (isTraceError(entry)) {
        return {
          methodId: entry.method_id,
          error: entry.error,
          steps: [],
          finalResult: null,
          totalCost: null,
        };
      }
      return {
        methodId: entry.method_id,
        error: null,
        steps: entry.steps,
        finalResult: entry.final_result,
        totalCost: entry.total_cost,
      };
    });
    this.maxStep = Math.max(0, ...this.columns.map((c) => c.steps.length - 1));
  }

  static fromResponse(response: ComputeResponse): ComparisonStepper {
    return new ComparisonStepper(response.traces);
  }

  get cursor(): number {
    return this._cursor;
  }

  get atStart(): boolean {
    return this._cursor === 0;
  }

  get atEnd(): boolean {
    return this._cursor === this.maxStep;
  }

  forward(): number {
    if (!this.atEnd) {
      this._cursor += 1;
    }
    return this._cursor;
  }

  back(): number {
    if (!this.atStart) {
      this._cursor -= 1;
    }
    return this._cursor;
  }

  reset(): number {
    this._cursor = 0;
    return this._cursor;
  }

  /** The step a column shows at the cursor, or null once it is complete. */
  currentStep(column: number): StepJson | null {
    return this.columns[column].steps[this._cursor] ?? null;
  }

  /** A column is complete when the shared cursor passed its last step. */
  isComplete(column: number): boolean {
    const col = this.columns[column];
    return col.error === null && this._cursor >= col.steps.length;
  }

  /** Componentwise sum of the costs of the steps shown so far. */
  runningCost(column: number): OpCountJson {
    const out = { ...ZERO_COST };
    for (const step of this.columns[column].steps.slice(0, this._cursor + 1)) {
      out.mults += step.cost.mults;
      out.adds += step.cost.adds;
      out.subs += step.cost.subs;
    }
    return out;
  }
}
