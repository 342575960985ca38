import { describe, expect, it } from "vitest";

import type { ScenarioPayload } from "../src/types.js";
import { isValid, validateScenario } from "../src/validate.js";

function scenario(): ScenarioPayload {
  return {
    label: "t",
    environment: {
      pue: 1.89,
      cooling_tower: { cycles_of_concentration: 2.25, label: "A" },
      wet_bulb: { constant_f: 65.3 },
      grid: { wue_off: 1.8, carbon_intensity: 0.766 },
    },
    pipeline: {
      label: "t",
      stages: [{ name: "run", running_time_h: 1, power_kwh: 2, basis: "facility" }],
    },
  };
}

describe("client-side validation mirrors server bounds", () => {
  it("accepts the reference parameters", () => {
    expect(validateScenario(scenario())).toEqual({});
    expect(isValid({})).toBe(true);
  });

  it("rejects S <= 1 before any request is sent", () => {
    const p = scenario();
    p.environment.cooling_tower.cycles_of_concentration = 1.0;
    const errors = validateScenario(p);
    expect(errors["environment.cooling_tower.cycles_of_concentration"]).toMatch(/exceed 1/);
  });

  it("rejects PUE < 1", () => {
    const p = scenario();
    p.environment.pue = 0.8;
    expect(validateScenario(p)["environment.pue"]).toMatch(/>= 1/);
  });

  it("rejects negative stage energy with an indexed field path", () => {
    const p = scenario();
    p.pipeline.stages[0].power_kwh = -1;
    expect(validateScenario(p)["pipeline.stages[0].power_kwh"]).toBeDefined();
  });

  it("rejects an empty pipeline", () => {
    const p = scenario();
    p.pipeline.stages = [];
    expect(validateScenario(p)["pipeline.stages"]).toMatch(/at least one stage/);
  });

  it("rejects a monthly list that is not 12 long", () => {
    const p = scenario();
    p.environment.wet_bulb = { monthly_f: Array(11).fill(60) };
    expect(validateScenario(p)["environment.wet_bulb"]).toMatch(/12/);
  });

  it("rejects out-of-range wet-bulb values", () => {
    const p = scenario();
    p.environment.wet_bulb = { constant_f: 200 };
    expect(validateScenario(p)["environment.wet_bulb"]).toMatch(/150/);
  });

  it("checks fuel mixes: shares and intensities", () => {
    const p = scenario();
    p.environment.grid = {
      fuel_mix: [
        { fuel: "coal", share: 0, ewif: 1.7 },
        { fuel: "solar", share: 0, ewif: -1 },
      ],
      carbon_intensity: 0.766,
    };
    const errors = validateScenario(p);
    expect(errors["environment.grid.fuel_mix"]).toMatch(/sum to more than 0/);
    expect(errors["environment.grid.fuel_mix[1].ewif"]).toBeDefined();
  });

  it("flags duplicate stage names", () => {
    const p = scenario();
    p.pipeline.stages.push({ name: "run", running_time_h: 1, power_kwh: 1, basis: "server" });
    expect(validateScenario(p)["pipeline.stages[1].name"]).toMatch(/duplicate/);
  });

  it("requires the projection stage to exist", () => {
    const p = scenario();
    p.projection = { stage: "missing", dev_query_count: 100, queries_per_hour: [0] };
    expect(validateScenario(p)["projection.stage"]).toMatch(/not found/);
  });

  it("requires a positive integer benchmark count", () => {
    const p = scenario();
    p.projection = { stage: "run", dev_query_count: 0, queries_per_hour: [0] };
    expect(validateScenario(p)["projection.dev_query_count"]).toMatch(/positive integer/);
  });
});
