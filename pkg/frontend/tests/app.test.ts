/**
 * Mounted-app tests: the controller wired to a fetch mock that serves
 * recorded API responses, so every asserted number is a genuine service
 * output. Covers the acceptance paths: headline preset total, diurnal
 * delta, and over-capacity shading.
 */

import { beforeEach, describe, expect, it } from "vitest";

import defaultsFixture from "./fixtures/defaults.json";
import estimateFixture from "./fixtures/estimate-tildev2-doctquery.json";
import stagesFixture from "./fixtures/estimate-tildev2-doctquery-stages.json";
import morningFixture from "./fixtures/estimate-tildev2-doctquery-morning.json";
import afternoonFixture from "./fixtures/estimate-tildev2-doctquery-afternoon.json";
import towerBFixture from "./fixtures/estimate-tildev2-doctquery-towerB.json";
import zeroGridFixture from "./fixtures/estimate-tildev2-doctquery-zerogrid.json";
import sweepFixture from "./fixtures/sweep-diurnal.json";
import projectMonobertFixture from "./fixtures/project-monobert.json";
import projectBm25Fixture from "./fixtures/project-bm25.json";

import { ApiClient } from "../src/api.js";
import { initApp, AppController } from "../src/main.js";
import type { DefaultsDoc, ScenarioPayload } from "../src/types.js";

const defaults = defaultsFixture as unknown as DefaultsDoc;

let fetchCalls: { path: string; body?: ScenarioPayload }[] = [];

function jsonResponse(body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status: 200,
    headers: { "content-type": "application/json" },
  });
}

function routeEstimate(body: ScenarioPayload): Response {
  const wetBulb = body.environment.wet_bulb.constant_f;
  const cycles = body.environment.cooling_tower.cycles_of_concentration;
  const wueOff = body.environment.grid.wue_off;
  if (wetBulb === 53.6) return jsonResponse(morningFixture);
  if (wetBulb === 57.02) return jsonResponse(afternoonFixture);
  if (cycles === 1.33) return jsonResponse(towerBFixture);
  if (wueOff === 0) return jsonResponse(zeroGridFixture);
  if (body.pipeline.label.includes("per-stage")) return jsonResponse(stagesFixture);
  return jsonResponse(estimateFixture);
}

const mockFetch = async (input: string, init?: RequestInit): Promise<Response> => {
  const path = input.replace(/^https?:\/\/[^/]+/, "");
  const body = init?.body ? (JSON.parse(init.body as string) as ScenarioPayload) : undefined;
  fetchCalls.push({ path, body });
  if (path === "/v1/defaults") return jsonResponse(defaults);
  if (path === "/v1/estimate" && body) return routeEstimate(body);
  if (path === "/v1/sweep") return jsonResponse(sweepFixture);
  if (path === "/v1/project" && body) {
    return jsonResponse(
      body.pipeline.label === "BM25" ? projectBm25Fixture : projectMonobertFixture,
    );
  }
  return new Response("not found", { status: 404 });
};

function mount(): { app: AppController; root: HTMLElement } {
  document.body.innerHTML = `<div id="app"></div>`;
  const root = document.getElementById("app")!;
  const app = initApp(root, new ApiClient("http://test", mockFetch), defaults);
  return { app, root };
}

beforeEach(() => {
  fetchCalls = [];
});

describe("estimate view", () => {
  it("headline preset renders the service's 927.4389 L total", async () => {
    const { app, root } = mount();
    app.loadPreset("tildev2-doctquery");
    await app.runEstimate();
    expect(root.querySelector("#estimate-panel")!.innerHTML).toContain("927.4389");
    expect(root.querySelector("#estimate-panel")!.innerHTML).toContain("602.1609");
  });

  it("per-stage preset renders each stage row", async () => {
    const { app, root } = mount();
    app.loadPreset("tildev2-doctquery-stages");
    await app.runEstimate();
    const html = root.querySelector("#estimate-panel")!.innerHTML;
    expect(html).toContain("867.6489");
    expect(html).toContain("TILDEv2 Training");
  });

  it("S = 1.0 blocks submission with an inline error and sends no request", async () => {
    const { app, root } = mount();
    app.loadPreset("tildev2-doctquery");
    app.form.cycles = "1.0";
    const before = fetchCalls.length;
    await app.runEstimate();
    expect(fetchCalls.length).toBe(before);
    expect(root.querySelector("#form-errors")!.innerHTML).toContain("exceed 1");
    const input = root.querySelector(
      '[data-field="environment.cooling_tower.cycles_of_concentration"]',
    )!;
    expect(input.classList.contains("invalid")).toBe(true);
  });

  it("form round-trip through the preset keeps the request equal to the bundle", async () => {
    const { app } = mount();
    app.loadPreset("tildev2-doctquery");
    await app.runEstimate();
    const sent = fetchCalls.find((c) => c.path === "/v1/estimate")!.body!;
    const bundled = defaults.scenarios["tildev2-doctquery"];
    expect(sent.environment).toEqual(bundled.environment);
    expect(sent.pipeline).toEqual(bundled.pipeline);
  });
});

describe("unit toggle", () => {
  it("switching to Celsius shows 18.5 for 65.3 F and preserves the canonical value", () => {
    const { app, root } = mount();
    app.loadPreset("tildev2-doctquery");
    expect(app.form.wetBulbF).toBeCloseTo(65.3, 9);
    (root.querySelector('[data-form="unit-toggle"]') as HTMLButtonElement).click();
    const input = root.querySelector('[data-form="wet-bulb"]') as HTMLInputElement;
    expect(Number(input.value)).toBeCloseTo(18.5, 6);
    expect(app.form.wetBulbF).toBeCloseTo(65.3, 9);
    (root.querySelector('[data-form="unit-toggle"]') as HTMLButtonElement).click();
    const back = root.querySelector('[data-form="wet-bulb"]') as HTMLInputElement;
    expect(Number(back.value)).toBeCloseTo(65.3, 9);
  });
});

describe("what-if comparison", () => {
  it("diurnal preset renders the server delta of about 32.2 L", async () => {
    const { app, root } = mount();
    app.loadPreset("tildev2-doctquery");
    await app.runCompare("diurnal");
    const html = root.querySelector("#compare-output")!.innerHTML;
    expect(html).toContain("32.1556"); // sweep fixture's delta_l, 4 dp
    expect(html).toContain("482.8983");
    expect(html).toContain("515.0539");
  });

  it("tower A/B preset shows the worse tower consuming more", async () => {
    const { app, root } = mount();
    app.loadPreset("tildev2-doctquery");
    await app.runCompare("water-quality");
    const html = root.querySelector("#compare-output")!.innerHTML;
    expect(html).toContain("927.4389"); // tower A total
    expect(html).toContain("1673.5508"); // tower B total from the recorded response
  });

  it("zero-water grid collapses off-site to 0 with on-site unchanged", async () => {
    const { app, root } = mount();
    app.loadPreset("tildev2-doctquery");
    await app.runCompare("zero-grid");
    const html = root.querySelector("#compare-output")!.innerHTML;
    expect(html).toContain("602.1609"); // variant total = on-site only
    expect(html).toContain("-325.2780"); // delta is exactly the off-site share
  });
});

describe("projection view", () => {
  it("monoBERT at 10000 q/h draws the over-capacity shading", async () => {
    const { app, root } = mount();
    app.loadPreset("monobert");
    expect(app.form.queriesPerHour).toBe(10000);
    await app.runProjection();
    const html = root.querySelector("#projection-output")!.innerHTML;
    expect(html).toContain("over-capacity");
    expect(html).toContain("beyond single-machine capacity");
    expect(html).toContain("301");
  });

  it("BM25 stays unshaded across the preset range", async () => {
    const { app, root } = mount();
    app.loadPreset("bm25");
    app.form.queriesPerHour = 10000;
    await app.runProjection();
    const html = root.querySelector("#projection-output")!.innerHTML;
    expect(html).toContain("<svg");
    expect(html).not.toContain("over-capacity");
  });
});

describe("in-flight behaviour", () => {
  it("identical concurrent estimates collapse to one request", async () => {
    const { app } = mount();
    app.loadPreset("tildev2-doctquery");
    const before = fetchCalls.length;
    await Promise.all([app.runEstimate(), app.runEstimate()]);
    const estimates = fetchCalls.slice(before).filter((c) => c.path === "/v1/estimate");
    expect(estimates.length).toBe(1);
  });
});
