/**
 * Pure HTML renderers for API documents.
 *
 * Everything displayed is formatted straight from response values; there is
 * no recomputation here, only string building (deltas in the comparison
 * panel are differences of two response values, shown as presentation).
 */

import type {
  EstimateDoc,
  FieldError,
  ReportPayload,
  ReportRowPayload,
  SweepDoc,
} from "./types.js";

export function escapeHtml(value: unknown): string {
  return String(value ?? "")
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Water always at 4 decimals; other quantities 4 below 1, else 2. */
export function fmtWater(value: number): string {
  return value.toFixed(4);
}

export function fmtNumber(value: number): string {
  return Math.abs(value) < 1 ? value.toFixed(4) : value.toFixed(2);
}

export function fmtFraction(value: number | null): string {
  return value === null ? "n/a" : `${(100 * value).toFixed(1)}%`;
}

export function fmtSigned(value: number, fmt: (v: number) => string = fmtWater): string {
  const text = fmt(Math.abs(value));
  return value < 0 ? `-${text}` : `+${text}`;
}

function rowCells(row: ReportRowPayload): string {
  return `
    <td>${escapeHtml(row.name)}</td>
    <td class="num">${fmtNumber(row.running_time_h)}</td>
    <td class="num">${fmtNumber(row.facility_energy_kwh)}</td>
    <td class="num">${fmtNumber(row.emissions_kgco2e)}</td>
    <td class="num">${fmtWater(row.water_total_l)}</td>
    <td class="num">${fmtWater(row.water_on_l)}</td>
    <td class="num">${fmtWater(row.water_off_l)}</td>
    <td class="num">${fmtFraction(row.on_fraction)}</td>`;
}

const REPORT_HEAD = `
  <tr>
    <th>Stage</th><th>Hours</th><th>Energy (kWh)</th><th>Emissions (kgCO2e)</th>
    <th>Water (L)</th><th>On-site (L)</th><th>Off-site (L)</th><th>On-site share</th>
  </tr>`;

export function renderReportTable(report: ReportPayload): string {
  const body = report.stages.map((row) => `<tr>${rowCells(row)}</tr>`).join("");
  return `
  <table class="report">
    <thead>${REPORT_HEAD}</thead>
    <tbody>${body}</tbody>
    <tfoot><tr class="total">${rowCells(report.cumulative)}</tr></tfoot>
  </table>`;
}

/** Stacked on/off-site bar per stage, widths straight from on_fraction. */
export function renderBreakdownBars(report: ReportPayload): string {
  const rows = [...report.stages, report.cumulative]
    .map((row) => {
      if (row.on_fraction === null) {
        return `
        <div class="bar-row">
          <span class="bar-label">${escapeHtml(row.name)}</span>
          <span class="bar-empty">no water</span>
        </div>`;
      }
      const onPct = (100 * row.on_fraction).toFixed(2);
      const offPct = (100 * (1 - row.on_fraction)).toFixed(2);
      return `
      <div class="bar-row">
        <span class="bar-label">${escapeHtml(row.name)}</span>
        <span class="bar">
          <span class="bar-on" style="width:${onPct}%" title="on-site ${fmtFraction(row.on_fraction)}"></span>
          <span class="bar-off" style="width:${offPct}%" title="off-site"></span>
        </span>
      </div>`;
    })
    .join("");
  return `<div class="breakdown">${rows}</div>`;
}

export function renderDiagnostics(diagnostics: string[]): string {
  if (diagnostics.length === 0) return "";
  const items = diagnostics
    .map((d) => `<li class="diagnostic">${escapeHtml(d)}</li>`)
    .join("");
  return `<ul class="diagnostics">${items}</ul>`;
}

export function renderEstimate(doc: EstimateDoc): string {
  const equivalents = doc.equivalents?.length
    ? `<h3>Emission equivalents</h3><ul>${doc.equivalents
        .map((e) => `<li>${escapeHtml(e.label)}: ${fmtNumber(e.units)} ${escapeHtml(e.unit)}</li>`)
        .join("")}</ul>`
    : "";
  return `
  <h2>${escapeHtml(doc.report.label)}</h2>
  ${renderReportTable(doc.report)}
  <h3>On-site vs off-site</h3>
  ${renderBreakdownBars(doc.report)}
  ${renderDiagnostics(doc.report.diagnostics)}
  ${equivalents}`;
}

/**
 * Side-by-side comparison. Per-stage deltas are differences of the two
 * reports' values (presentation only); when a diurnal sweep response is
 * supplied, its on-site waters and delta are shown verbatim.
 */
export function renderCompare(
  base: EstimateDoc,
  variant: EstimateDoc,
  sweep?: SweepDoc,
): string {
  const stages = base.report.stages.map((row, i) => {
    const other = variant.report.stages[i];
    if (!other) return "";
    return `
    <tr>
      <td>${escapeHtml(row.name)}</td>
      <td class="num">${fmtWater(row.water_total_l)}</td>
      <td class="num">${fmtWater(other.water_total_l)}</td>
      <td class="num delta">${fmtSigned(other.water_total_l - row.water_total_l)}</td>
    </tr>`;
  });
  const baseTotal = base.report.cumulative.water_total_l;
  const variantTotal = variant.report.cumulative.water_total_l;
  let sweepBlock = "";
  if (sweep?.mode === "diurnal" && sweep.delta_l !== undefined) {
    const rows = sweep.entries
      .map(
        (e) =>
          `<tr><td>${escapeHtml(e.tag)}</td><td class="num">${fmtWater(e.water_on_l ?? 0)}</td></tr>`,
      )
      .join("");
    sweepBlock = `
    <h3>On-site water by time of day</h3>
    <table class="report">
      <thead><tr><th>Time</th><th>On-site water (L)</th></tr></thead>
      <tbody>${rows}</tbody>
    </table>
    <p class="delta-headline">On-site delta (afternoon - morning): <strong>${fmtWater(sweep.delta_l)} L</strong></p>`;
  }
  return `
  <h2>${escapeHtml(base.scenario.label)} vs ${escapeHtml(variant.scenario.label)}</h2>
  <table class="report compare">
    <thead><tr><th>Stage</th><th>Base water (L)</th><th>Variant water (L)</th><th>Delta (L)</th></tr></thead>
    <tbody>${stages.join("")}</tbody>
    <tfoot><tr class="total">
      <td>TOTAL</td>
      <td class="num">${fmtWater(baseTotal)}</td>
      <td class="num">${fmtWater(variantTotal)}</td>
      <td class="num delta">${fmtSigned(variantTotal - baseTotal)}</td>
    </tr></tfoot>
  </table>
  <p class="delta-headline">Total water delta: <strong>${fmtSigned(variantTotal - baseTotal)} L</strong></p>
  ${sweepBlock}
  ${renderDiagnostics([...base.report.diagnostics, ...variant.report.diagnostics])}`;
}

export function renderFieldErrors(errors: FieldError[]): string {
  const items = errors
    .map((e) => `<li><code>${escapeHtml(e.field)}</code>: ${escapeHtml(e.message)}</li>`)
    .join("");
  return `<ul class="errors">${items}</ul>`;
}
