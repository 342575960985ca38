/**
 * Client-side validation mirroring the server's bounds, so obviously bad
 * input is highlighted before any request is sent. Field paths match the
 * server's 422 error fields, letting both sources drive the same
 * highlighting.
 */

import type { ScenarioPayload } from "./types.js";

export type FormErrors = Record<string, string>;

const TEMP_MIN_F = -60;
const TEMP_MAX_F = 150;

function bad(value: unknown): boolean {
  return typeof value !== "number" || !Number.isFinite(value);
}

export function validateScenario(payload: ScenarioPayload): FormErrors {
  const errors: FormErrors = {};
  const env = payload.environment;

  if (bad(env.pue)) {
    errors["environment.pue"] = "PUE must be a number";
  } else if (env.pue < 1) {
    errors["environment.pue"] = "PUE must be >= 1";
  }

  const s = env.cooling_tower.cycles_of_concentration;
  if (bad(s)) {
    errors["environment.cooling_tower.cycles_of_concentration"] =
      "cycles of concentration must be a number";
  } else if (s <= 1) {
    errors["environment.cooling_tower.cycles_of_concentration"] =
      "cycles of concentration must exceed 1";
  }

  const wb = env.wet_bulb;
  if (wb.constant_f !== undefined) {
    if (bad(wb.constant_f) || wb.constant_f < TEMP_MIN_F || wb.constant_f > TEMP_MAX_F) {
      errors["environment.wet_bulb"] =
        `wet-bulb temperature must be within [${TEMP_MIN_F}, ${TEMP_MAX_F}] F`;
    }
  } else if (wb.monthly_f !== undefined) {
    if (wb.monthly_f.length !== 12) {
      errors["environment.wet_bulb"] = "expected 12 monthly temperatures";
    } else if (wb.monthly_f.some((t) => bad(t) || t < TEMP_MIN_F || t > TEMP_MAX_F)) {
      errors["environment.wet_bulb"] =
        `every monthly temperature must be within [${TEMP_MIN_F}, ${TEMP_MAX_F}] F`;
    }
  }

  const grid = env.grid;
  if (grid.fuel_mix !== undefined && grid.wue_off !== undefined) {
    errors["environment.grid"] = "set either a direct WUE_off or a fuel mix, not both";
  } else if (grid.fuel_mix !== undefined) {
    if (grid.fuel_mix.length === 0) {
      errors["environment.grid.fuel_mix"] = "fuel mix requires at least one entry";
    } else {
      let total = 0;
      grid.fuel_mix.forEach((entry, i) => {
        if (bad(entry.share) || entry.share < 0) {
          errors[`environment.grid.fuel_mix[${i}].share`] = "share must be a number >= 0";
        } else {
          total += entry.share;
        }
        if (bad(entry.ewif) || entry.ewif < 0) {
          errors[`environment.grid.fuel_mix[${i}].ewif`] = "EWIF must be a number >= 0 L/kWh";
        }
      });
      if (total <= 0 && !Object.keys(errors).some((k) => k.includes("share"))) {
        errors["environment.grid.fuel_mix"] = "fuel shares must sum to more than 0";
      }
    }
  } else {
    const wue = grid.wue_off;
    if (bad(wue) || (wue as number) < 0) {
      errors["environment.grid.wue_off"] = "WUE_off must be a number >= 0 L/kWh";
    }
  }
  if (bad(grid.carbon_intensity) || grid.carbon_intensity < 0) {
    errors["environment.grid.carbon_intensity"] =
      "carbon intensity must be a number >= 0 kgCO2e/kWh";
  }

  if (payload.pipeline.stages.length === 0) {
    errors["pipeline.stages"] = "pipeline requires at least one stage";
  }
  const seen = new Set<string>();
  payload.pipeline.stages.forEach((stage, i) => {
    if (!stage.name) {
      errors[`pipeline.stages[${i}].name`] = "stage name must not be empty";
    } else if (seen.has(stage.name)) {
      errors[`pipeline.stages[${i}].name`] = `duplicate stage name "${stage.name}"`;
    }
    seen.add(stage.name);
    if (bad(stage.running_time_h) || stage.running_time_h < 0) {
      errors[`pipeline.stages[${i}].running_time_h`] = "hours must be a number >= 0";
    }
    if (bad(stage.power_kwh) || stage.power_kwh < 0) {
      errors[`pipeline.stages[${i}].power_kwh`] = "energy must be a number >= 0 kWh";
    }
  });

  const proj = payload.projection;
  if (proj !== undefined) {
    if (!Number.isInteger(proj.dev_query_count) || proj.dev_query_count <= 0) {
      errors["projection.dev_query_count"] = "benchmark query count must be a positive integer";
    }
    if (proj.stage && !payload.pipeline.stages.some((s) => s.name === proj.stage)) {
      errors["projection.stage"] = `stage "${proj.stage}" not found in the pipeline`;
    }
    proj.queries_per_hour.forEach((q, i) => {
      if (bad(q) || q < 0) {
        errors[`projection.queries_per_hour[${i}]`] = "query rate must be a number >= 0";
      }
    });
  }

  return errors;
}

export function isValid(errors: FormErrors): boolean {
  return Object.keys(errors).length === 0;
}
