/**
 * Presets: one per bundled pipeline (fetched from GET /v1/defaults, so the
 * numbers live server-side only) plus canned what-if comparisons for time
 * of day and cooling-water quality.
 */

import type { DefaultsDoc, ScenarioPayload } from "./types.js";

export interface Preset {
  id: string;
  label: string;
  scenario: ScenarioPayload;
}

const PRESET_ORDER = [
  "bm25",
  "lambdamart",
  "dpr",
  "monobert",
  "tildev2-tilde",
  "tildev2-doctquery",
  "tildev2-doctquery-stages",
  "unicoil-tilde",
  "unicoil-doctquery",
];

export function pipelinePresets(defaults: DefaultsDoc): Preset[] {
  const names = Object.keys(defaults.scenarios);
  names.sort((a, b) => {
    const ia = PRESET_ORDER.indexOf(a);
    const ib = PRESET_ORDER.indexOf(b);
    return (ia === -1 ? 99 : ia) - (ib === -1 ? 99 : ib);
  });
  return names.map((id) => ({
    id,
    label: defaults.scenarios[id].label || id,
    scenario: defaults.scenarios[id],
  }));
}

function clone<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}

export interface ComparePreset {
  id: string;
  label: string;
  description: string;
  /** Base scenario for the comparison. */
  base: (scenario: ScenarioPayload) => ScenarioPayload;
  /** Variant produced by editing the base. */
  variant: (scenario: ScenarioPayload) => ScenarioPayload;
}

export const DIURNAL_PRESET: ComparePreset = {
  id: "diurnal",
  label: "Morning 9am vs afternoon 3pm (July)",
  description: "Same workload at the July mean wet-bulb: 53.6 F at 9am vs 57.02 F at 3pm.",
  base: (scenario) => {
    const edited = clone(scenario);
    edited.environment.wet_bulb = { constant_f: 53.6 };
    edited.label = `${scenario.label} @ 9am`;
    return edited;
  },
  variant: (scenario) => {
    const edited = clone(scenario);
    edited.environment.wet_bulb = { constant_f: 57.02 };
    edited.label = `${scenario.label} @ 3pm`;
    return edited;
  },
};

export const WATER_QUALITY_PRESET: ComparePreset = {
  id: "water-quality",
  label: "Cooling tower A (S=2.25) vs B (S=1.33)",
  description:
    "Good feed water allows 2.25 cycles of concentration; poorer water forces blow-down at 1.33.",
  base: (scenario) => {
    const edited = clone(scenario);
    edited.environment.cooling_tower = { cycles_of_concentration: 2.25, label: "tower-A" };
    edited.label = `${scenario.label} (tower A)`;
    return edited;
  },
  variant: (scenario) => {
    const edited = clone(scenario);
    edited.environment.cooling_tower = { cycles_of_concentration: 1.33, label: "tower-B" };
    edited.label = `${scenario.label} (tower B)`;
    return edited;
  },
};

export const ZERO_GRID_PRESET: ComparePreset = {
  id: "zero-grid",
  label: "Current grid vs zero-water grid (WUE_off 0)",
  description:
    "A solar-style grid consumes no generation water: the off-site column collapses to zero while on-site cooling is untouched.",
  base: (scenario) => clone(scenario),
  variant: (scenario) => {
    const edited = clone(scenario);
    edited.environment.grid = {
      wue_off: 0.0,
      carbon_intensity: scenario.environment.grid.carbon_intensity,
    };
    edited.label = `${scenario.label} (zero-water grid)`;
    return edited;
  },
};

export const COMPARE_PRESETS: ComparePreset[] = [
  DIURNAL_PRESET,
  WATER_QUALITY_PRESET,
  ZERO_GRID_PRESET,
];
