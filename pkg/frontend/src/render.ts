/** HTML-string renderers.
 *
 * Pure functions from server data to markup so the contract tests can assert
 * on output without a DOM.  Every displayed value is taken verbatim from a
 * service response; the only client-side transformation is splitting "p/q"
 * for stacked fraction display.
 */

import type {
  MatrixJson,
  OpCountJson,
  SnapshotJson,
  StepJson,
  VerifySwResponse,
} from "./types.js";
import type { ComparisonStepper } from "./stepper.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** "p/q" as numerator-over-denominator markup; plain values pass through. */
export function renderFraction(value: string): string {
  const slash = value.indexOf("/");
  if (slash < 0) {
    return `<span class="rat">${escapeHtml(value)}</span>`;
  }
  const num = escapeHtml(value.slice(0, slash));
  const den = escapeHtml(value.slice(slash + 1));
  return `<span class="rat frac"><span class="num">${num}</span><span class="den">${den}</span></span>`;
}

export function renderMatrix(matrix: MatrixJson): string {
  const body = matrix.entries
    .map((row) => `<tr>${row.map((v) => `<td>${renderFraction(v)}</td>`).join("")}</tr>`)
    .join("");
  return `<table class="matrix"><tbody>${body}</tbody></table>`;
}

function isMatrixJson(value: SnapshotJson): value is MatrixJson {
  return typeof value === "object" && value !== null && "rows" in value && "entries" in value;
}

export function renderSnapshot(value: SnapshotJson): string {
  if (typeof value === "string") {
    return renderFraction(value);
  }
  if (isMatrixJson(value)) {
    return renderMatrix(value);
  }
  // structured results (eigen/solve reports): readable key/value dump
  return `<pre class="structured">${escapeHtml(JSON.stringify(value, null, 2))}</pre>`;
}

export function renderCost(cost: OpCountJson): string {
  return `<span class="cost">${cost.mults}&times; &nbsp;${cost.adds}+ &nbsp;${cost.subs}&minus;</span>`;
}

export function renderStep(step: StepJson): string {
  return [
    `<div class="step">`,
    `<div class="step-head">step ${step.index + 1} &middot; ${escapeHtml(step.kind)}</div>`,
    `<div class="step-desc">${escapeHtml(step.description)}</div>`,
    `<div class="step-result">${renderSnapshot(step.result)}</div>`,
    `<div class="step-cost">${renderCost(step.cost)}</div>`,
    `</div>`,
  ].join("");
}

/** One synchronized column per method at the stepper's shared cursor. */
export function renderComparison(stepper: ComparisonStepper): string {
  const columns = stepper.columns.map((col, idx) => {
    const parts = [`<div class="column" data-method="${escapeHtml(col.methodId)}">`];
    parts.push(`<h3>${escapeHtml(col.methodId)}</h3>`);
    if (col.error !== null) {
      parts.push(`<div class="trace-error">failed: ${escapeHtml(col.error)}</div>`);
    } else if (stepper.isComplete(idx)) {
      parts.push(`<div class="complete">complete</div>`);
    } else {
      const step = stepper.currentStep(idx);
      if (step) {
        parts.push(renderStep(step));
      }
    }
    if (col.error === null) {
      parts.push(`<div class="running">so far: ${renderCost(stepper.runningCost(idx))}</div>`);
      parts.push(
        `<div class="final">final: ${renderSnapshot(col.finalResult as SnapshotJson)}` +
          ` &nbsp; total: ${renderCost(col.totalCost as OpCountJson)}</div>`,
      );
    }
    parts.push(`</div>`);
    return parts.join("");
  });
  const controls =
    `<div class="controls">` +
    `<button id="step-back" ${stepper.atStart ? "disabled" : ""}>&larr; back</button>` +
    `<span class="cursor">step ${stepper.cursor + 1} / ${stepper.maxStep + 1}</span>` +
    `<button id="step-forward" ${stepper.atEnd ? "disabled" : ""}>forward &rarr;</button>` +
    `</div>`;
  return `${controls}<div class="comparison">${columns.join("")}</div>`;
}

export function renderVerifyReport(report: VerifySwResponse): string {
  const badge = (ok: boolean) =>
    ok ? `<span class="badge pass">pass</span>` : `<span class="badge fail">fail</span>`;
  const checks = report.checks
    .map((check) => {
      const pattern = check.expected_pattern
        .map((row) => row.map((v) => escapeHtml(v)).join(" "))
        .join("<br>");
      return [
        `<div class="basis-check">`,
        `<h4>A &times; ${escapeHtml(check.label)} ${badge(check.pass)}</h4>`,
        `<div class="pattern">expected pattern<br>${pattern}</div>`,
        `<div class="computed">sample A ${renderMatrix(check.example_input)}` +
          ` gives ${renderMatrix(check.example_product)}</div>`,
        `<div class="samples">${check.samples} random samples</div>`,
        `</div>`,
      ].join("");
    })
    .join("");
  const additivity = report.bilinearity_checks.filter((c) => c.kind === "additivity");
  const homogeneity = report.bilinearity_checks.filter((c) => c.kind === "homogeneity");
  const passed = (list: typeof additivity) => list.filter((c) => c.pass).length;
  return [
    `<div class="verify-report">`,
    `<h3>variant ${escapeHtml(report.variant)}, seed ${report.seed} ` +
      `${badge(report.overall_pass)}</h3>`,
    `<div class="checks">${checks}</div>`,
    `<div class="linearity">additivity ${passed(additivity)}/${additivity.length}, ` +
      `homogeneity ${passed(homogeneity)}/${homogeneity.length}</div>`,
    `</div>`,
  ].join("");
}

export function renderErrorBanner(message: string): string {
  return (
    `<div class="banner error">service unreachable: ${escapeHtml(message)} ` +
    `<button id="retry">retry</button></div>`
  );
}
