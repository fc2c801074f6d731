// Rendering contract: the verify panel shows a four-check report with pass
// badges, final results appear byte-for-byte, and every numeric value the UI
// displays originates from the service response (the UI does no algebra).

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import {
  renderComparison,
  renderErrorBanner,
  renderFraction,
  renderMatrix,
  renderVerifyReport,
} from "../src/render.js";
import { ComparisonStepper } from "../src/stepper.js";
import { isTraceError } from "../src/types.js";
import type { ComputeResponse, TraceJson, VerifySwResponse } from "../src/types.js";

const RESPONSE: ComputeResponse = JSON.parse(
  readFileSync(new URL("../../fixtures/compute_det_3methods.json", import.meta.url), "utf-8"),
);
const PARTIAL: ComputeResponse = JSON.parse(
  readFileSync(new URL("../../fixtures/compute_partial_error.json", import.meta.url), "utf-8"),
);
const VERIFY: VerifySwResponse = JSON.parse(
  readFileSync(new URL("../../fixtures/verify_sw_pass.json", import.meta.url), "utf-8"),
);

describe("verify panel rendering", () => {
  it("renders four basis checks with pass badges from the canned report", () => {
    const html = renderVerifyReport(VERIFY);
    expect(VERIFY.checks).toHaveLength(4);
    for (const label of ["E11", "E12", "E21", "E22"]) {
      expect(html).toContain(label);
    }
    const passBadges = html.match(/badge pass/g) ?? [];
    expect(passBadges.length).toBeGreaterThanOrEqual(5); // 4 checks + overall
    expect(html).not.toContain("badge fail");
  });

  it("shows the expected symbolic pattern beside the computed product", () => {
    const html = renderVerifyReport(VERIFY);
    expect(html).toContain("a 0");
    expect(html).toContain("expected pattern");
    const sample = VERIFY.checks[0].example_product.entries[0][0];
    expect(html).toContain(renderFraction(sample));
  });
});

describe("comparison rendering", () => {
  it("final results appear byte-for-byte", () => {
    const stepper = ComparisonStepper.fromResponse(RESPONSE);
    const html = renderComparison(stepper);
    for (const trace of RESPONSE.traces) {
      if (!isTraceError(trace)) {
        expect(html).toContain(`>${trace.final_result as string}<`);
      }
    }
  });

  it("renders per-trace errors in place of columns", () => {
    const stepper = ComparisonStepper.fromResponse(PARTIAL);
    const html = renderComparison(stepper);
    expect(html).toContain("failed: NotThreeByThree");
    expect(html).toContain(`data-method="lu"`);
  });

  it("disables forward at the end and back at the start", () => {
    const stepper = ComparisonStepper.fromResponse(RESPONSE);
    expect(renderComparison(stepper)).toContain(`id="step-back" disabled`);
    while (!stepper.atEnd) {
      stepper.forward();
    }
    expect(renderComparison(stepper)).toContain(`id="step-forward" disabled`);
  });

  it("every displayed numeric value originates from the service response", () => {
    const stepper = ComparisonStepper.fromResponse(RESPONSE);
    stepper.forward();
    const html = renderComparison(stepper);
    const allowed = new Set<string>();
    const gather = (value: unknown): void => {
      if (typeof value === "string") {
        allowed.add(value);
        // stacked fractions display numerator and denominator separately
        if (value.includes("/")) {
          const [num, den] = value.split("/");
          allowed.add(num);
          allowed.add(den);
        }
      } else if (Array.isArray(value)) {
        value.forEach(gather);
      } else if (value && typeof value === "object") {
        Object.values(value).forEach(gather);
      }
    };
    RESPONSE.traces.forEach(gather);
    const displayed = html.match(/class="rat[^>]*">(?:<span class="num">)?(-?\d+)/g) ?? [];
    expect(displayed.length).toBeGreaterThan(0);
    for (const match of displayed) {
      const value = match.match(/(-?\d+)$/)![1];
      expect(allowed.has(value), `value ${value} not in service response`).toBe(true);
    }
  });
});

describe("primitive renderers", () => {
  it("renders fractions as numerator over denominator", () => {
    expect(renderFraction("3/4")).toContain(`<span class="num">3</span>`);
    expect(renderFraction("3/4")).toContain(`<span class="den">4</span>`);
    expect(renderFraction("-2")).toBe(`<span class="rat">-2</span>`);
  });

  it("renders matrices as bordered grids", () => {
    const html = renderMatrix({ rows: 2, cols: 2, entries: [["1", "1/2"], ["-3", "0"]] });
    expect(html).toContain(`class="matrix"`);
    expect((html.match(/<td>/g) ?? []).length).toBe(4);
  });

  it("escapes markup in error banners", () => {
    expect(renderErrorBanner("<script>")).toContain("&lt;script&gt;");
  });

  it("renders a trace step with kind, description, result and cost", () => {
    const laplace = RESPONSE.traces[0] as TraceJson;
    const stepper = ComparisonStepper.fromResponse(RESPONSE);
    const html = renderComparison(stepper);
    expect(html).toContain(laplace.steps[0].kind);
  });
});
