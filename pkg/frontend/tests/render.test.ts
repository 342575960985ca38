import { describe, expect, it } from "vitest";

import estimateFixture from "./fixtures/estimate-tildev2-doctquery.json";
import stagesFixture from "./fixtures/estimate-tildev2-doctquery-stages.json";
import morningFixture from "./fixtures/estimate-tildev2-doctquery-morning.json";
import afternoonFixture from "./fixtures/estimate-tildev2-doctquery-afternoon.json";
import sweepFixture from "./fixtures/sweep-diurnal.json";
import {
  fmtFraction,
  fmtNumber,
  fmtWater,
  renderBreakdownBars,
  renderCompare,
  renderEstimate,
  renderFieldErrors,
  renderReportTable,
} from "../src/render.js";
import type { EstimateDoc, SweepDoc } from "../src/types.js";

const estimate = estimateFixture as unknown as EstimateDoc;
const stages = stagesFixture as unknown as EstimateDoc;
const morning = morningFixture as unknown as EstimateDoc;
const afternoon = afternoonFixture as unknown as EstimateDoc;
const sweep = sweepFixture as unknown as SweepDoc;

describe("formatting", () => {
  it("water always has four decimals", () => {
    expect(fmtWater(927.43893607)).toBe("927.4389");
    expect(fmtWater(0.0108)).toBe("0.0108");
  });

  it("other quantities switch precision at 1", () => {
    expect(fmtNumber(0.0016)).toBe("0.0016");
    expect(fmtNumber(138.42)).toBe("138.42");
  });

  it("fractions render as percentages with n/a for undefined", () => {
    expect(fmtFraction(0.649272866)).toBe("64.9%");
    expect(fmtFraction(null)).toBe("n/a");
  });
});

describe("estimate rendering (values come from the response verbatim)", () => {
  it("renders the headline preset total", () => {
    const html = renderEstimate(estimate);
    expect(html).toContain("927.4389");
    expect(html).toContain("602.1609");
  });

  it("renders per-stage rows for the stage-level scenario", () => {
    const html = renderReportTable(stages.report);
    expect(html).toContain("35.4635");
    expect(html).toContain("24.3266");
    expect(html).toContain("867.6489");
  });

  it("does not recompute: a mutated response value is shown verbatim", () => {
    const doc = JSON.parse(JSON.stringify(estimate)) as EstimateDoc;
    doc.report.cumulative.water_total_l = 111.2222;
    doc.report.cumulative.water_on_l = 1.0;
    doc.report.cumulative.water_off_l = 2.0;
    const html = renderEstimate(doc);
    expect(html).toContain("111.2222"); // impossible if the UI re-derived totals
  });

  it("renders clamp diagnostics verbatim", () => {
    const doc = JSON.parse(JSON.stringify(estimate)) as EstimateDoc;
    doc.report.diagnostics = ["wet-bulb 20 F is below the evaporative range"];
    expect(renderEstimate(doc)).toContain("wet-bulb 20 F is below the evaporative range");
  });

  it("draws stacked bars with widths from on_fraction", () => {
    const html = renderBreakdownBars(estimate.report);
    const fraction = estimate.report.cumulative.on_fraction!;
    expect(html).toContain(`width:${(100 * fraction).toFixed(2)}%`);
  });

  it("escapes HTML in names and messages", () => {
    const doc = JSON.parse(JSON.stringify(estimate)) as EstimateDoc;
    doc.report.stages[0].name = "<script>alert(1)</script>";
    expect(renderEstimate(doc)).not.toContain("<script>alert(1)</script>");
  });
});

describe("comparison rendering", () => {
  it("shows the server-computed diurnal delta near 32.2 L", () => {
    expect(Math.abs(sweep.delta_l! - 32.2)).toBeLessThan(0.1);
    const html = renderCompare(morning, afternoon, sweep);
    expect(html).toContain(fmtWater(sweep.delta_l!));
    expect(html).toContain("afternoon - morning");
    // the sweep response's on-site waters are shown verbatim
    for (const entry of sweep.entries) {
      expect(html).toContain(fmtWater(entry.water_on_l!));
    }
  });

  it("identical variants give a zero total delta", () => {
    const html = renderCompare(estimate, estimate);
    expect(html).toContain("+0.0000");
  });

  it("renders per-stage base and variant columns", () => {
    const html = renderCompare(morning, afternoon);
    expect(html).toContain(fmtWater(morning.report.stages[0].water_total_l));
    expect(html).toContain(fmtWater(afternoon.report.stages[0].water_total_l));
  });
});

describe("field errors", () => {
  it("lists field and message", () => {
    const html = renderFieldErrors([
      { field: "environment.pue", message: "PUE must be >= 1" },
    ]);
    expect(html).toContain("environment.pue");
    expect(html).toContain("PUE must be &gt;= 1");
  });
});
