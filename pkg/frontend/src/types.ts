/**
 * Wire types for the estimator API.
 *
 * These mirror the JSON documents the service accepts and returns; the UI
 * never computes footprint numbers itself, so everything rendered comes
 * from a `ReportPayload`, `SweepDoc` or `ProjectDoc` received over HTTP.
 */

export type Basis = "server" | "facility";

export interface StagePayload {
  name: string;
  running_time_h: number;
  power_kwh: number;
  basis: Basis;
}

export interface PipelinePayload {
  label: string;
  stages: StagePayload[];
}

export interface FuelEntryPayload {
  fuel: string;
  share: number;
  ewif: number;
}

export interface GridPayload {
  wue_off?: number;
  fuel_mix?: FuelEntryPayload[];
  carbon_intensity: number;
}

export interface WetBulbPayload {
  constant_f?: number;
  constant_c?: number;
  monthly_f?: number[];
  schedule_f?: [number, number][];
}

export interface CoolingTowerPayload {
  cycles_of_concentration: number;
  label: string;
}

export interface EnvironmentPayload {
  pue: number;
  cooling_tower: CoolingTowerPayload;
  wet_bulb: WetBulbPayload;
  grid: GridPayload;
}

export interface SweepSpecPayload {
  monthly_f?: number[];
  diurnal?: { morning_f: number; afternoon_f: number };
}

export interface ProjectionSpecPayload {
  stage: string;
  dev_query_count: number;
  queries_per_hour: number[];
}

export interface EquivalencePayload {
  label: string;
  kg_co2e_per_unit: number;
  unit: string;
}

export interface ScenarioPayload {
  version?: string;
  label: string;
  environment: EnvironmentPayload;
  pipeline: PipelinePayload;
  sweep?: SweepSpecPayload;
  projection?: ProjectionSpecPayload;
  equivalents?: EquivalencePayload[];
  mode?: "monthly" | "diurnal";
}

export interface ReportRowPayload {
  name: string;
  running_time_h: number;
  facility_energy_kwh: number;
  emissions_kgco2e: number;
  water_total_l: number;
  water_on_l: number;
  water_off_l: number;
  on_fraction: number | null;
}

export interface ReportPayload {
  label: string;
  stages: ReportRowPayload[];
  cumulative: ReportRowPayload;
  diagnostics: string[];
}

export interface EquivalentRow {
  label: string;
  units: number;
  unit: string;
}

export interface EstimateDoc {
  scenario: ScenarioPayload;
  report: ReportPayload;
  equivalents?: EquivalentRow[];
}

export interface SweepEntry {
  tag: string;
  report?: ReportPayload;
  water_on_l?: number;
}

export interface SweepDoc {
  scenario: ScenarioPayload;
  mode: "monthly" | "diurnal";
  entries: SweepEntry[];
  delta_l?: number;
}

export interface ProjectRow {
  queries_per_hour: number;
  energy_kwh_per_hour: number;
  emissions_kgco2e_per_hour: number;
  water_l_per_hour: number;
  implied_single_machine_qph: number;
  over_capacity: boolean;
}

export interface ProjectDoc {
  scenario: ScenarioPayload;
  rows: ProjectRow[];
}

export interface DefaultsDoc {
  version: string;
  defaults: {
    pue: number;
    cycles_of_concentration: number;
    wet_bulb_f: number;
    wue_off: number;
    carbon_intensity: number;
  };
  scenarios: Record<string, ScenarioPayload>;
}

export interface FieldError {
  field: string;
  message: string;
}
