import { describe, expect, it } from "vitest";

import defaultsFixture from "./fixtures/defaults.json";
import { emptyForm, formToRequest, requestToForm } from "../src/form.js";
import type { DefaultsDoc, ScenarioPayload } from "../src/types.js";

const defaults = defaultsFixture as unknown as DefaultsDoc;

describe("form <-> request mapping", () => {
  it("form -> request -> form is the identity", () => {
    const form = emptyForm();
    form.label = "loop";
    form.pue = "1.89";
    form.cycles = "2.25";
    form.towerLabel = "A";
    form.wetBulbF = 65.3;
    form.stages = [
      { name: "train", hours: "15.73", kwh: "6.91", basis: "facility" },
      { name: "search", hours: "0.0025", kwh: "0.00006", basis: "server" },
    ];
    form.projectionStage = "search";
    form.devQueryCount = "6980";
    form.queriesPerHour = 10000;
    const again = requestToForm(formToRequest(form));
    expect(again).toEqual(form);
  });

  it("request -> form -> request preserves every bundled scenario", () => {
    for (const [name, payload] of Object.entries(defaults.scenarios)) {
      const scenario = payload as ScenarioPayload;
      const rebuilt = formToRequest(requestToForm(scenario));
      expect(rebuilt.label, name).toBe(scenario.label);
      expect(rebuilt.environment, name).toEqual(scenario.environment);
      expect(rebuilt.pipeline, name).toEqual(scenario.pipeline);
      if (scenario.projection) {
        expect(rebuilt.projection?.stage, name).toBe(scenario.projection.stage);
        expect(rebuilt.projection?.dev_query_count, name).toBe(
          scenario.projection.dev_query_count,
        );
        // the single slider collapses the rate list to its maximum
        expect(rebuilt.projection?.queries_per_hour, name).toEqual([
          Math.max(...scenario.projection.queries_per_hour),
        ]);
      }
    }
  });

  it("fuel-mix grids survive the round trip", () => {
    const scenario: ScenarioPayload = {
      label: "mix",
      environment: {
        pue: 1.89,
        cooling_tower: { cycles_of_concentration: 2.25, label: "" },
        wet_bulb: { constant_f: 65.3 },
        grid: {
          fuel_mix: [
            { fuel: "coal", share: 0.5, ewif: 1.7 },
            { fuel: "nuclear", share: 0.5, ewif: 2.3 },
          ],
          carbon_intensity: 0.766,
        },
      },
      pipeline: {
        label: "mix",
        stages: [{ name: "run", running_time_h: 1, power_kwh: 1, basis: "facility" }],
      },
    };
    expect(formToRequest(requestToForm(scenario)).environment).toEqual(scenario.environment);
  });

  it("monthly wet-bulb lists survive the round trip", () => {
    const scenario: ScenarioPayload = {
      label: "monthly",
      environment: {
        pue: 1.89,
        cooling_tower: { cycles_of_concentration: 2.25, label: "" },
        wet_bulb: { monthly_f: [61, 61, 59, 56, 51, 47, 46, 48, 52, 55, 58, 60] },
        grid: { wue_off: 1.8, carbon_intensity: 0.766 },
      },
      pipeline: {
        label: "monthly",
        stages: [{ name: "run", running_time_h: 1, power_kwh: 1, basis: "facility" }],
      },
    };
    expect(formToRequest(requestToForm(scenario)).environment).toEqual(scenario.environment);
  });
});
