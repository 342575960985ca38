import { describe, expect, it } from "vitest";

import bm25Fixture from "./fixtures/project-bm25.json";
import monobertFixture from "./fixtures/project-monobert.json";
import { chartGeometry, renderProjectionChart } from "../src/chart.js";
import type { ProjectDoc } from "../src/types.js";

const monobert = monobertFixture as unknown as ProjectDoc;
const bm25 = bm25Fixture as unknown as ProjectDoc;

describe("projection chart geometry", () => {
  it("shades beyond single-machine capacity for the heavy reranker", () => {
    const geometry = chartGeometry(monobert);
    expect(geometry.capacity).toBeCloseTo(301.12, 1);
    expect(geometry.shadedFromX).not.toBeNull();
    // 10000 q/h sits inside the shaded region
    const energyPanel = geometry.panels[0];
    const point = energyPanel.points.find((p) => p.qph === 10000)!;
    expect(point.value).toBeCloseTo(15.47, 2);
    expect(point.x).toBeGreaterThan(geometry.shadedFromX!);
  });

  it("leaves the sparse-index searcher unshaded below its capacity", () => {
    const geometry = chartGeometry(bm25);
    expect(geometry.capacity).toBeGreaterThan(1e6);
    expect(geometry.shadedFromX).toBeNull();
  });

  it("positions points from response values only", () => {
    const geometry = chartGeometry(monobert);
    for (const panel of geometry.panels) {
      const max = Math.max(...panel.points.map((p) => p.value));
      for (const point of panel.points) {
        expect(point.value).toBe(
          (monobert.rows.find((r) => r.queries_per_hour === point.qph) as any)[
            panel.metric === "Energy"
              ? "energy_kwh_per_hour"
              : panel.metric === "Emissions"
                ? "emissions_kgco2e_per_hour"
                : "water_l_per_hour"
          ],
        );
      }
      expect(max).toBeGreaterThan(0);
    }
  });

  it("orders rows by rate regardless of response order", () => {
    const shuffled = {
      ...monobert,
      rows: [...monobert.rows].reverse(),
    } as ProjectDoc;
    const geometry = chartGeometry(shuffled);
    const xs = geometry.panels[0].points.map((p) => p.x);
    expect([...xs].sort((a, b) => a - b)).toEqual(xs);
  });
});

describe("projection chart svg", () => {
  it("marks the over-capacity region and note", () => {
    const svg = renderProjectionChart(monobert);
    expect(svg).toContain('class="over-capacity"');
    expect(svg).toContain("beyond single-machine capacity");
    expect(svg).toContain("301");
  });

  it("renders three aligned panels", () => {
    const svg = renderProjectionChart(monobert);
    expect(svg).toContain("Energy (kWh/h)");
    expect(svg).toContain("Emissions (kgCO2e/h)");
    expect(svg).toContain("Water (L/h)");
  });

  it("has no shading when capacity exceeds the charted range", () => {
    const svg = renderProjectionChart(bm25);
    expect(svg).not.toContain('class="over-capacity"');
  });
});
