/**
 * Calculator controller: scenario form, estimate panel, what-if comparison
 * and production projection, all backed by the estimator API. All numbers
 * shown come from API responses; this module only moves state around.
 */

import { ApiClient, FieldValidationError, LatestGate } from "./api.js";
import { renderProjectionChart } from "./chart.js";
import { displayTemperature, parseTemperature } from "./convert.js";
import { emptyForm, formToRequest, requestToForm, type ScenarioForm } from "./form.js";
import { COMPARE_PRESETS, pipelinePresets, type Preset } from "./presets.js";
import {
  escapeHtml,
  renderCompare,
  renderEstimate,
  renderFieldErrors,
} from "./render.js";
import type {
  DefaultsDoc,
  EstimateDoc,
  FieldError,
  ProjectDoc,
  ScenarioPayload,
  SweepDoc,
} from "./types.js";
import { isValid, validateScenario, type FormErrors } from "./validate.js";

const QPH_SLIDER_MAX = 1e7;

export class AppController {
  form: ScenarioForm = emptyForm();
  presets: Preset[];
  private estimateGate = new LatestGate();
  private compareGate = new LatestGate();
  private projectGate = new LatestGate();

  constructor(
    private root: HTMLElement,
    private client: ApiClient,
    defaults: DefaultsDoc,
  ) {
    this.presets = pipelinePresets(defaults);
    this.renderSkeleton();
    this.renderForm();
  }

  private el<T extends HTMLElement>(selector: string): T {
    const node = this.root.querySelector<T>(selector);
    if (!node) throw new Error(`missing element ${selector}`);
    return node;
  }

  private renderSkeleton(): void {
    const presetOptions = this.presets
      .map((p) => `<option value="${escapeHtml(p.id)}">${escapeHtml(p.label)}</option>`)
      .join("");
    const compareOptions = COMPARE_PRESETS.map(
      (p) => `<option value="${escapeHtml(p.id)}">${escapeHtml(p.label)}</option>`,
    ).join("");
    this.root.innerHTML = `
    <section class="panel form-panel">
      <h2>Scenario</h2>
      <label>Preset
        <select id="preset-select"><option value="">(custom)</option>${presetOptions}</select>
      </label>
      <form id="scenario-form"></form>
      <div id="form-errors" class="form-errors"></div>
      <button id="estimate-button" type="button">Estimate footprint</button>
    </section>
    <section class="panel" id="estimate-panel"><p class="hint">Pick a preset or fill the form, then estimate.</p></section>
    <section class="panel" id="compare-panel">
      <h2>What-if comparison</h2>
      <label>Comparison
        <select id="compare-select">${compareOptions}</select>
      </label>
      <button id="compare-button" type="button">Compare</button>
      <div id="compare-output"></div>
    </section>
    <section class="panel" id="projection-panel">
      <h2>Production projection</h2>
      <label>Queries per hour
        <input type="range" id="qph-slider" min="0" max="${QPH_SLIDER_MAX}" step="1000"/>
        <input type="number" id="qph-value" min="0" max="${QPH_SLIDER_MAX}"/>
      </label>
      <button id="project-button" type="button">Project</button>
      <div id="projection-output"></div>
    </section>`;

    this.el<HTMLSelectElement>("#preset-select").addEventListener("change", (event) => {
      const id = (event.target as HTMLSelectElement).value;
      if (id) this.loadPreset(id);
    });
    this.el("#estimate-button").addEventListener("click", () => void this.runEstimate());
    this.el("#compare-button").addEventListener("click", () => {
      const id = this.el<HTMLSelectElement>("#compare-select").value;
      void this.runCompare(id);
    });
    this.el("#project-button").addEventListener("click", () => void this.runProjection());
    const slider = this.el<HTMLInputElement>("#qph-slider");
    const value = this.el<HTMLInputElement>("#qph-value");
    slider.addEventListener("input", () => {
      this.form.queriesPerHour = Number(slider.value);
      value.value = slider.value;
    });
    value.addEventListener("change", () => {
      this.form.queriesPerHour = Math.max(0, Math.min(QPH_SLIDER_MAX, Number(value.value) || 0));
      slider.value = String(this.form.queriesPerHour);
      value.value = String(this.form.queriesPerHour);
    });
  }

  /** Rebuild the form inputs from state (called on preset load / row edits). */
  renderForm(): void {
    const f = this.form;
    const stageRows = f.stages
      .map(
        (s, i) => `
      <tr>
        <td><input data-field="pipeline.stages[${i}].name" data-form="stage-name" data-index="${i}" value="${escapeHtml(s.name)}"/></td>
        <td><input data-field="pipeline.stages[${i}].running_time_h" data-form="stage-hours" data-index="${i}" value="${escapeHtml(s.hours)}"/></td>
        <td><input data-field="pipeline.stages[${i}].power_kwh" data-form="stage-kwh" data-index="${i}" value="${escapeHtml(s.kwh)}"/></td>
        <td><select data-form="stage-basis" data-index="${i}">
          <option value="facility"${s.basis === "facility" ? " selected" : ""}>facility</option>
          <option value="server"${s.basis === "server" ? " selected" : ""}>server</option>
        </select></td>
        <td><button type="button" data-form="stage-remove" data-index="${i}">x</button></td>
      </tr>`,
      )
      .join("");
    const fuelRows = f.fuelMix
      .map(
        (row, i) => `
      <tr>
        <td><input data-form="fuel-name" data-index="${i}" value="${escapeHtml(row.fuel)}"/></td>
        <td><input data-field="environment.grid.fuel_mix[${i}].share" data-form="fuel-share" data-index="${i}" value="${escapeHtml(row.share)}"/></td>
        <td><input data-field="environment.grid.fuel_mix[${i}].ewif" data-form="fuel-ewif" data-index="${i}" value="${escapeHtml(row.ewif)}"/></td>
        <td><button type="button" data-form="fuel-remove" data-index="${i}">x</button></td>
      </tr>`,
      )
      .join("");
    const gridDirect = f.gridMode === "direct";
    const projectionOptions = f.stages
      .map(
        (s) =>
          `<option value="${escapeHtml(s.name)}"${s.name === f.projectionStage ? " selected" : ""}>${escapeHtml(s.name)}</option>`,
      )
      .join("");
    this.el("#scenario-form").innerHTML = `
      <label>Label <input data-form="label" value="${escapeHtml(f.label)}"/></label>
      <fieldset><legend>Data center</legend>
        <label>PUE <input data-field="environment.pue" data-form="pue" value="${escapeHtml(f.pue)}"/></label>
        <label>Cycles of concentration (S)
          <input data-field="environment.cooling_tower.cycles_of_concentration" data-form="cycles" value="${escapeHtml(f.cycles)}"/>
        </label>
        <label>Wet-bulb (<span id="wet-bulb-unit">${f.wetBulbUnit === "F" ? "&deg;F" : "&deg;C"}</span>)
          <input data-field="environment.wet_bulb" data-form="wet-bulb" value="${escapeHtml(displayTemperature(f.wetBulbF, f.wetBulbUnit))}"/>
          <button type="button" data-form="unit-toggle">use &deg;${f.wetBulbUnit === "F" ? "C" : "F"}</button>
        </label>
      </fieldset>
      <fieldset><legend>Grid</legend>
        <label><input type="radio" name="grid-mode" data-form="grid-direct"${gridDirect ? " checked" : ""}/> direct WUE_off</label>
        <label><input type="radio" name="grid-mode" data-form="grid-mix"${gridDirect ? "" : " checked"}/> fuel mix</label>
        <label class="${gridDirect ? "" : "hidden"}">WUE_off (L/kWh)
          <input data-field="environment.grid.wue_off" data-form="wue-off" value="${escapeHtml(f.wueOff)}"/>
        </label>
        <table class="${gridDirect ? "hidden" : ""}" id="fuel-table">
          <thead><tr><th>Fuel</th><th>Share</th><th>EWIF (L/kWh)</th><th></th></tr></thead>
          <tbody>${fuelRows}</tbody>
        </table>
        <button type="button" data-form="fuel-add" class="${gridDirect ? "hidden" : ""}">Add fuel</button>
        <label>Carbon intensity (kgCO2e/kWh)
          <input data-field="environment.grid.carbon_intensity" data-form="ci" value="${escapeHtml(f.carbonIntensity)}"/>
        </label>
      </fieldset>
      <fieldset><legend>Pipeline stages</legend>
        <table id="stage-table">
          <thead><tr><th>Name</th><th>Hours</th><th>kWh</th><th>Basis</th><th></th></tr></thead>
          <tbody>${stageRows}</tbody>
        </table>
        <button type="button" data-form="stage-add">Add stage</button>
      </fieldset>
      <fieldset><legend>Projection</legend>
        <label>Search stage
          <select data-form="projection-stage" data-field="projection.stage">
            <option value="">(none)</option>${projectionOptions}
          </select>
        </label>
        <label>Benchmark query count
          <input data-field="projection.dev_query_count" data-form="dev-query-count" value="${escapeHtml(f.devQueryCount)}"/>
        </label>
      </fieldset>`;
    this.bindFormEvents();
    this.el<HTMLInputElement>("#qph-slider").value = String(f.queriesPerHour);
    this.el<HTMLInputElement>("#qph-value").value = String(f.queriesPerHour);
  }

  private bindFormEvents(): void {
    const form = this.el("#scenario-form");
    form.querySelectorAll<HTMLElement>("[data-form]").forEach((node) => {
      const kind = node.dataset.form!;
      const index = Number(node.dataset.index ?? -1);
      if (kind === "stage-remove") {
        node.addEventListener("click", () => {
          this.form.stages.splice(index, 1);
          this.renderForm();
        });
      } else if (kind === "stage-add") {
        node.addEventListener("click", () => {
          this.form.stages.push({
            name: `stage-${this.form.stages.length + 1}`,
            hours: "1",
            kwh: "1",
            basis: "facility",
          });
          this.renderForm();
        });
      } else if (kind === "fuel-remove") {
        node.addEventListener("click", () => {
          this.form.fuelMix.splice(index, 1);
          this.renderForm();
        });
      } else if (kind === "fuel-add") {
        node.addEventListener("click", () => {
          this.form.fuelMix.push({ fuel: "coal", share: "1", ewif: "1.7" });
          this.renderForm();
        });
      } else if (kind === "unit-toggle") {
        node.addEventListener("click", () => {
          this.form.wetBulbUnit = this.form.wetBulbUnit === "F" ? "C" : "F";
          this.renderForm();
        });
      } else if (kind === "grid-direct" || kind === "grid-mix") {
        node.addEventListener("change", () => {
          this.form.gridMode = kind === "grid-mix" ? "mix" : "direct";
          if (this.form.gridMode === "mix" && this.form.fuelMix.length === 0) {
            this.form.fuelMix.push({ fuel: "coal", share: "1", ewif: "1.7" });
          }
          this.renderForm();
        });
      } else {
        node.addEventListener("change", () => this.readField(kind, index, node));
      }
    });
  }

  private readField(kind: string, index: number, node: HTMLElement): void {
    const value = (node as HTMLInputElement | HTMLSelectElement).value;
    const f = this.form;
    switch (kind) {
      case "label":
        f.label = value;
        break;
      case "pue":
        f.pue = value;
        break;
      case "cycles":
        f.cycles = value;
        break;
      case "wet-bulb": {
        const canonical = parseTemperature(value, f.wetBulbUnit);
        if (Number.isFinite(canonical)) f.wetBulbF = canonical;
        break;
      }
      case "wue-off":
        f.wueOff = value;
        break;
      case "ci":
        f.carbonIntensity = value;
        break;
      case "stage-name":
        f.stages[index].name = value;
        break;
      case "stage-hours":
        f.stages[index].hours = value;
        break;
      case "stage-kwh":
        f.stages[index].kwh = value;
        break;
      case "stage-basis":
        f.stages[index].basis = value as "server" | "facility";
        break;
      case "fuel-name":
        f.fuelMix[index].fuel = value;
        break;
      case "fuel-share":
        f.fuelMix[index].share = value;
        break;
      case "fuel-ewif":
        f.fuelMix[index].ewif = value;
        break;
      case "projection-stage":
        f.projectionStage = value;
        break;
      case "dev-query-count":
        f.devQueryCount = value;
        break;
    }
  }

  loadPreset(id: string): void {
    const preset = this.presets.find((p) => p.id === id);
    if (!preset) return;
    this.form = requestToForm(preset.scenario);
    if (!this.form.projectionStage && this.form.stages.length > 0) {
      this.form.projectionStage = this.form.stages[this.form.stages.length - 1].name;
    }
    this.renderForm();
    const select = this.root.querySelector<HTMLSelectElement>("#preset-select");
    if (select) select.value = id;
  }

  /** Validate locally; returns null (and highlights) when invalid. */
  private buildRequest(): ScenarioPayload | null {
    const payload = formToRequest(this.form);
    const errors = validateScenario(payload);
    this.showFormErrors(errors);
    if (!isValid(errors)) return null;
    return payload;
  }

  private showFormErrors(errors: FormErrors): void {
    this.root.querySelectorAll(".invalid").forEach((n) => n.classList.remove("invalid"));
    const list = Object.entries(errors).map(([field, message]) => ({ field, message }));
    this.el("#form-errors").innerHTML = list.length ? renderFieldErrors(list) : "";
    for (const { field } of list) {
      this.root
        .querySelector(`[data-field="${CSS.escape(field)}"]`)
        ?.classList.add("invalid");
    }
  }

  private showServerErrors(errors: FieldError[]): void {
    this.el("#form-errors").innerHTML = renderFieldErrors(errors);
    for (const { field } of errors) {
      this.root
        .querySelector(`[data-field="${CSS.escape(field)}"]`)
        ?.classList.add("invalid");
    }
  }

  async runEstimate(): Promise<void> {
    const payload = this.buildRequest();
    if (!payload) return;
    const token = this.estimateGate.next();
    const panel = this.el("#estimate-panel");
    panel.innerHTML = `<p class="hint">estimating&hellip;</p>`;
    try {
      const doc = await this.client.post<EstimateDoc>("/v1/estimate", payload);
      if (!this.estimateGate.isCurrent(token)) return;
      panel.innerHTML = renderEstimate(doc);
    } catch (error) {
      if (!this.estimateGate.isCurrent(token)) return;
      if (error instanceof FieldValidationError) {
        this.showServerErrors(error.errors);
        panel.innerHTML = `<p class="hint">fix the highlighted fields</p>`;
      } else {
        panel.innerHTML = `<p class="error">${escapeHtml(String(error))}</p>`;
      }
    }
  }

  async runCompare(presetId: string): Promise<void> {
    const preset = COMPARE_PRESETS.find((p) => p.id === presetId);
    const payload = this.buildRequest();
    if (!preset || !payload) return;
    const token = this.compareGate.next();
    const output = this.el("#compare-output");
    output.innerHTML = `<p class="hint">comparing&hellip;</p>`;
    try {
      const basePayload = preset.base(payload);
      const variantPayload = preset.variant(payload);
      const [base, variant] = await Promise.all([
        this.client.post<EstimateDoc>("/v1/estimate", basePayload),
        this.client.post<EstimateDoc>("/v1/estimate", variantPayload),
      ]);
      let sweepDoc: SweepDoc | undefined;
      if (preset.id === "diurnal") {
        sweepDoc = await this.client.post<SweepDoc>("/v1/sweep", {
          ...payload,
          sweep: { diurnal: { morning_f: 53.6, afternoon_f: 57.02 } },
          mode: "diurnal",
        });
      }
      if (!this.compareGate.isCurrent(token)) return;
      output.innerHTML =
        `<p class="hint">${escapeHtml(preset.description)}</p>` +
        renderCompare(base, variant, sweepDoc);
    } catch (error) {
      if (!this.compareGate.isCurrent(token)) return;
      if (error instanceof FieldValidationError) {
        output.innerHTML = renderFieldErrors(error.errors);
      } else {
        output.innerHTML = `<p class="error">${escapeHtml(String(error))}</p>`;
      }
    }
  }

  async runProjection(): Promise<void> {
    const payload = this.buildRequest();
    if (!payload) return;
    if (!payload.projection) {
      this.el("#projection-output").innerHTML =
        `<p class="error">pick a search stage and benchmark query count first</p>`;
      return;
    }
    // chart the whole range up to the slider value
    const top = Math.max(this.form.queriesPerHour, 0);
    const samples = 8;
    const rates = Array.from({ length: samples + 1 }, (_, i) =>
      Math.round((top * i) / samples),
    );
    payload.projection.queries_per_hour = [...new Set(rates)];
    const token = this.projectGate.next();
    const output = this.el("#projection-output");
    output.innerHTML = `<p class="hint">projecting&hellip;</p>`;
    try {
      const doc = await this.client.post<ProjectDoc>("/v1/project", payload);
      if (!this.projectGate.isCurrent(token)) return;
      const selected = doc.rows[doc.rows.length - 1];
      const flag = selected?.over_capacity
        ? `<p class="over-capacity-note">beyond single-machine capacity (${Math.round(selected.implied_single_machine_qph)} q/h); figures are a lower bound</p>`
        : "";
      output.innerHTML = renderProjectionChart(doc) + flag;
    } catch (error) {
      if (!this.projectGate.isCurrent(token)) return;
      output.innerHTML = `<p class="error">${escapeHtml(String(error))}</p>`;
    }
  }
}

export function initApp(root: HTMLElement, client: ApiClient, defaults: DefaultsDoc): AppController {
  return new AppController(root, client, defaults);
}
