/** DOM glue: wires the editor, stepper and verify panel to the page.
 *
 * All state logic lives in the imported modules (which is what the test
 * suite covers); this file only moves values between them and the DOM.
 */

import { ApiClient } from "./api.js";
import { DIMENSION_CAP, MatrixEditor, methodAvailability } from "./editor.js";
import { renderComparison, renderErrorBanner, renderVerifyReport } from "./render.js";
import { ComparisonStepper } from "./stepper.js";
import type { MethodInfo } from "./types.js";
import { VerifyPanel } from "./verify.js";

const API_BASE = (window as unknown as { LINSTEPS_API?: string }).LINSTEPS_API ?? "/api/v1";
const client = new ApiClient(API_BASE);

const TASKS_WITH_B: Record<string, "matrix" | "column" | null> = {
  multiply: "matrix",
  determinant: null,
  inverse: null,
  eigen: null,
  solve: "column",
};

const editorA = new MatrixEditor(3, 3);
const editorB = new MatrixEditor(3, 3);
let methods: MethodInfo[] = [];
let selectedTask = "determinant";
let selectedMethods = new Set<string>();
let stepper: ComparisonStepper | null = null;

const $ = (id: string) => document.getElementById(id) as HTMLElement;

function renderGrid(editor: MatrixEditor, mount: HTMLElement, name: string): void {
  const issues = new Map(editor.issues().map((i) => [`${i.row},${i.col}`, i.message]));
  const rows = editor.cells
    .map((row, i) =>
      `<tr>${row
        .map((cell, j) => {
          const bad = issues.get(`${i},${j}`);
          return (
            `<td><input data-grid="${name}" data-row="${i}" data-col="${j}" ` +
            `value="${cell.replace(/"/g, "&quot;")}" class="${bad ? "invalid" : ""}" ` +
            `title="${bad ?? ""}"></td>`
          );
        })
        .join("")}</tr>`,
    )
    .join("");
  mount.innerHTML = `<table class="editor">${rows}</table>`;
  mount.querySelectorAll("input").forEach((input) => {
    input.addEventListener("input", () => {
      const el = input as HTMLInputElement;
      editor.setCell(Number(el.dataset.row), Number(el.dataset.col), el.value);
      refreshControls();
    });
  });
}

function shapes() {
  const b = TASKS_WITH_B[selectedTask];
  return {
    a: { rows: editorA.rows, cols: editorA.cols },
    b: b ? { rows: editorB.rows, cols: editorB.cols } : undefined,
  };
}

function refreshMethodList(): void {
  const mount = $("methods");
  const taskMethods = methods.filter((m) => m.task === selectedTask);
  mount.innerHTML = taskMethods
    .map((m) => {
      const avail = methodAvailability(m, shapes());
      const checked = selectedMethods.has(m.id) && avail.enabled;
      return (
        `<label class="${avail.enabled ? "" : "disabled"}" title="${avail.reason ?? m.applicability}">` +
        `<input type="checkbox" value="${m.id}" ${checked ? "checked" : ""} ` +
        `${avail.enabled ? "" : "disabled"}> ${m.name}</label>`
      );
    })
    .join("");
  mount.querySelectorAll("input").forEach((box) =>
    box.addEventListener("change", () => {
      const el = box as HTMLInputElement;
      if (el.checked) selectedMethods.add(el.value);
      else selectedMethods.delete(el.value);
      refreshControls();
    }),
  );
}

function refreshControls(): void {
  const needB = TASKS_WITH_B[selectedTask];
  ($("grid-b-wrap") as HTMLElement).style.display = needB ? "" : "none";
  renderGrid(editorA, $("grid-a"), "a");
  if (needB) renderGrid(editorB, $("grid-b"), "b");
  refreshMethodList();
  const valid = editorA.valid && (!needB || editorB.valid) && selectedMethods.size > 0;
  ($("compute") as HTMLButtonElement).disabled = !valid;
}

function renderStepperView(): void {
  if (!stepper) return;
  $("results").innerHTML = renderComparison(stepper);
  $("results").querySelector("#step-forward")?.addEventListener("click", () => {
    stepper?.forward();
    renderStepperView();
  });
  $("results").querySelector("#step-back")?.addEventListener("click", () => {
    stepper?.back();
    renderStepperView();
  });
}

async function compute(): Promise<void> {
  const token = client.nextToken();
  const needB = TASKS_WITH_B[selectedTask];
  const inputs: Record<string, ReturnType<MatrixEditor["toMatrixJson"]>> = {
    A: editorA.toMatrixJson(),
  };
  if (needB === "matrix") inputs.B = editorB.toMatrixJson();
  if (needB === "column") inputs.b = editorB.toMatrixJson();
  try {
    const response = await client.compute({
      task: selectedTask,
      methods: [...selectedMethods],
      inputs,
    });
    if (!client.isCurrent(token)) return; // a newer request superseded this one
    stepper = ComparisonStepper.fromResponse(response);
    renderStepperView();
  } catch (err) {
    if (!client.isCurrent(token)) return;
    $("results").innerHTML = renderErrorBanner(err instanceof Error ? err.message : String(err));
    $("results").querySelector("#retry")?.addEventListener("click", () => void compute());
  }
}

function wireVerifyPanel(): void {
  const panel = new VerifyPanel(client, (state) => {
    const mount = $("verify-output");
    if (state.phase === "loading") mount.innerHTML = `<div class="banner">running...</div>`;
    else if (state.phase === "ready") mount.innerHTML = renderVerifyReport(state.report);
    else if (state.phase === "error") {
      mount.innerHTML = renderErrorBanner(state.message);
      mount.querySelector("#retry")?.addEventListener("click", () => void panel.retry());
    }
  });
  $("verify-run").addEventListener("click", () => {
    const variant = ($("verify-variant") as HTMLSelectElement).value as "strassen" | "winograd";
    const seed = Number(($("verify-seed") as HTMLInputElement).value) || 0;
    void panel.run({ variant, samples: 50, seed });
  });
}

async function init(): Promise<void> {
  try {
    methods = (await client.methods()).methods;
  } catch (err) {
    $("results").innerHTML = renderErrorBanner(err instanceof Error ? err.message : String(err));
    return;
  }
  selectedMethods = new Set(
    methods.filter((m) => m.task === selectedTask).map((m) => m.id),
  );
  $("task").addEventListener("change", () => {
    selectedTask = ($("task") as HTMLSelectElement).value;
    selectedMethods = new Set(
      methods.filter((m) => m.task === selectedTask).map((m) => m.id),
    );
    if (selectedTask === "solve") editorB.resize(editorA.rows, 1);
    refreshControls();
  });
  ["a-rows", "a-cols", "b-rows", "b-cols"].forEach((id) => {
    $(id).addEventListener("change", () => {
      const rows = Number(($("a-rows") as HTMLInputElement).value);
      const cols = Number(($("a-cols") as HTMLInputElement).value);
      editorA.resize(Math.min(rows, DIMENSION_CAP), Math.min(cols, DIMENSION_CAP));
      const bRows = Number(($("b-rows") as HTMLInputElement).value);
      const bCols = Number(($("b-cols") as HTMLInputElement).value);
      editorB.resize(bRows, TASKS_WITH_B[selectedTask] === "column" ? 1 : bCols);
      refreshControls();
    });
  });
  $("compute").addEventListener("click", () => void compute());
  wireVerifyPanel();
  refreshControls();
}

void init();
