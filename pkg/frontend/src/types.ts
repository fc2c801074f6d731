/** Wire types for the engine's HTTP JSON API (the only backend this UI has). */

export interface MatrixJson {
  rows: number;
  cols: number;
  entries: string[][];
}

export interface OpCountJson {
  mults: number;
  adds: number;
  subs: number;
}

export type SnapshotJson = string | MatrixJson | Record<string, unknown>;

export interface StepJson {
  index: number;
  kind: string;
  description: string;
  operands: Record<string, SnapshotJson>;
  result: SnapshotJson;
  cost: OpCountJson;
}

export interface TraceJson {
  task: string;
  method_id: string;
  inputs: Record<string, MatrixJson>;
  steps: StepJson[];
  final_result: SnapshotJson;
  total_cost: OpCountJson;
}

export interface TraceErrorJson {
  method_id: string;
  error: string;
  message?: string;
}

export type TraceEntry = TraceJson | TraceErrorJson;

export function isTraceError(entry: TraceEntry): entry is TraceErrorJson {
  return "error" in entry;
}

export interface ComparisonColumnJson {
  method_id: string;
  cells: (StepJson | null)[];
  final_result: SnapshotJson;
  total_cost: OpCountJson;
}

export interface ComparisonJson {
  task: string;
  inputs: Record<string, MatrixJson>;
  row_count: number;
  columns: ComparisonColumnJson[];
}

export interface ComputeRequest {
  task: string;
  methods: string[];
  inputs: Record<string, MatrixJson>;
}

export interface ComputeResponse {
  traces: TraceEntry[];
  comparison: ComparisonJson | null;
}

export interface MethodInfo {
  task: string;
  id: string;
  name: string;
  applicability: string;
}

export interface MethodsResponse {
  methods: MethodInfo[];
}

export interface BasisCheckJson {
  label: string;
  basis: MatrixJson;
  expected_pattern: string[][];
  example_input: MatrixJson;
  example_product: MatrixJson;
  samples: number;
  pass: boolean;
}

export interface LinearityCheckJson {
  kind: "additivity" | "homogeneity";
  A: MatrixJson;
  B1: MatrixJson;
  B2?: MatrixJson;
  scalar?: string;
  pass: boolean;
}

export interface VerifySwRequest {
  variant: "strassen" | "winograd";
  samples: number;
  seed: number;
}

export interface VerifySwResponse {
  variant: string;
  samples: number;
  seed: number;
  checks: BasisCheckJson[];
  bilinearity_checks: LinearityCheckJson[];
  overall_pass: boolean;
}

export interface ApiErrorBody {
  error: string;
  message?: string;
}
