/**
 * Form state and its mapping to/from scenario payloads.
 *
 * Numeric inputs live as strings while being edited; `formToRequest` parses
 * them into a payload and `requestToForm` goes the other way. The mapping
 * is lossless: request -> form -> request reproduces every value.
 */

import type {
  Basis,
  EnvironmentPayload,
  ScenarioPayload,
  StagePayload,
} from "./types.js";

export interface StageForm {
  name: string;
  hours: string;
  kwh: string;
  basis: Basis;
}

export interface FuelRowForm {
  fuel: string;
  share: string;
  ewif: string;
}

export interface ScenarioForm {
  label: string;
  pue: string;
  cycles: string;
  towerLabel: string;
  /** Canonical wet-bulb value in F; the unit toggle is display-only. */
  wetBulbF: number;
  wetBulbUnit: "F" | "C";
  monthlyF: number[] | null;
  gridMode: "direct" | "mix";
  wueOff: string;
  fuelMix: FuelRowForm[];
  carbonIntensity: string;
  stages: StageForm[];
  projectionStage: string;
  devQueryCount: string;
  queriesPerHour: number;
}

export const REFERENCE_DEFAULTS = {
  pue: 1.89,
  cycles: 2.25,
  wetBulbF: 65.3,
  wueOff: 1.8,
  carbonIntensity: 0.766,
};

export function emptyForm(): ScenarioForm {
  return {
    label: "my scenario",
    pue: String(REFERENCE_DEFAULTS.pue),
    cycles: String(REFERENCE_DEFAULTS.cycles),
    towerLabel: "",
    wetBulbF: REFERENCE_DEFAULTS.wetBulbF,
    wetBulbUnit: "F",
    monthlyF: null,
    gridMode: "direct",
    wueOff: String(REFERENCE_DEFAULTS.wueOff),
    fuelMix: [],
    carbonIntensity: String(REFERENCE_DEFAULTS.carbonIntensity),
    stages: [{ name: "stage-1", hours: "1", kwh: "1", basis: "facility" }],
    projectionStage: "",
    devQueryCount: "6980",
    queriesPerHour: 1000,
  };
}

const num = (text: string): number => Number(text);

export function formToRequest(form: ScenarioForm): ScenarioPayload {
  const environment: EnvironmentPayload = {
    pue: num(form.pue),
    cooling_tower: {
      cycles_of_concentration: num(form.cycles),
      label: form.towerLabel,
    },
    wet_bulb: form.monthlyF !== null
      ? { monthly_f: [...form.monthlyF] }
      : { constant_f: form.wetBulbF },
    grid: form.gridMode === "mix"
      ? {
          fuel_mix: form.fuelMix.map((row) => ({
            fuel: row.fuel,
            share: num(row.share),
            ewif: num(row.ewif),
          })),
          carbon_intensity: num(form.carbonIntensity),
        }
      : {
          wue_off: num(form.wueOff),
          carbon_intensity: num(form.carbonIntensity),
        },
  };
  const stages: StagePayload[] = form.stages.map((s) => ({
    name: s.name,
    running_time_h: num(s.hours),
    power_kwh: num(s.kwh),
    basis: s.basis,
  }));
  const payload: ScenarioPayload = {
    label: form.label,
    environment,
    pipeline: { label: form.label, stages },
  };
  if (form.projectionStage) {
    payload.projection = {
      stage: form.projectionStage,
      dev_query_count: num(form.devQueryCount),
      queries_per_hour: [form.queriesPerHour],
    };
  }
  return payload;
}

export function requestToForm(payload: ScenarioPayload): ScenarioForm {
  const env = payload.environment;
  const grid = env.grid;
  const form = emptyForm();
  form.label = payload.label;
  form.pue = String(env.pue);
  form.cycles = String(env.cooling_tower.cycles_of_concentration);
  form.towerLabel = env.cooling_tower.label ?? "";
  if (env.wet_bulb.monthly_f !== undefined) {
    form.monthlyF = [...env.wet_bulb.monthly_f];
  } else {
    form.monthlyF = null;
    form.wetBulbF = env.wet_bulb.constant_f ?? REFERENCE_DEFAULTS.wetBulbF;
  }
  if (grid.fuel_mix !== undefined) {
    form.gridMode = "mix";
    form.fuelMix = grid.fuel_mix.map((e) => ({
      fuel: e.fuel,
      share: String(e.share),
      ewif: String(e.ewif),
    }));
  } else {
    form.gridMode = "direct";
    form.wueOff = String(grid.wue_off ?? REFERENCE_DEFAULTS.wueOff);
  }
  form.carbonIntensity = String(grid.carbon_intensity);
  form.stages = payload.pipeline.stages.map((s) => ({
    name: s.name,
    hours: String(s.running_time_h),
    kwh: String(s.power_kwh),
    basis: s.basis,
  }));
  if (payload.projection) {
    form.projectionStage = payload.projection.stage;
    form.devQueryCount = String(payload.projection.dev_query_count);
    // slider explores up to the largest rate the scenario mentions
    if (payload.projection.queries_per_hour.length > 0) {
      form.queriesPerHour = Math.max(...payload.projection.queries_per_hour);
    }
  }
  return form;
}
