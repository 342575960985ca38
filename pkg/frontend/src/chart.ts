/**
 * Dependency-free SVG chart for production projections.
 *
 * Three aligned panels (energy, emissions, water per hour) over the same
 * query-rate axis. The region beyond the benchmark machine's implied
 * throughput is shaded: past that rate the figures are a lower bound, since
 * a real deployment adds load-balanced replicas. Coordinates derive only
 * from response values.
 */

import type { ProjectDoc, ProjectRow } from "./types.js";

export interface PanelGeometry {
  metric: string;
  unit: string;
  points: { x: number; y: number; qph: number; value: number }[];
}

export interface ChartGeometry {
  width: number;
  height: number;
  xMax: number;
  capacity: number | null;
  /** Pixel x where shading starts, or null when capacity exceeds the range. */
  shadedFromX: number | null;
  panels: PanelGeometry[];
}

const METRICS: { key: keyof ProjectRow; metric: string; unit: string }[] = [
  { key: "energy_kwh_per_hour", metric: "Energy", unit: "kWh/h" },
  { key: "emissions_kgco2e_per_hour", metric: "Emissions", unit: "kgCO2e/h" },
  { key: "water_l_per_hour", metric: "Water", unit: "L/h" },
];

const MARGIN = { left: 64, right: 16, top: 22, bottom: 28 };

export function chartGeometry(doc: ProjectDoc, width = 720, panelHeight = 130): ChartGeometry {
  const rows = [...doc.rows].sort((a, b) => a.queries_per_hour - b.queries_per_hour);
  const xMax = rows.length ? Math.max(...rows.map((r) => r.queries_per_hour)) : 0;
  const capacity = rows.length ? rows[0].implied_single_machine_qph : null;
  const plotWidth = width - MARGIN.left - MARGIN.right;
  const innerHeight = panelHeight - MARGIN.top - MARGIN.bottom;

  const xPixel = (qph: number): number =>
    MARGIN.left + (xMax > 0 ? (qph / xMax) * plotWidth : 0);

  const panels: PanelGeometry[] = METRICS.map(({ key, metric, unit }) => {
    const values = rows.map((r) => r[key] as number);
    const yMax = Math.max(...values, 0) || 1;
    return {
      metric,
      unit,
      points: rows.map((r, i) => ({
        qph: r.queries_per_hour,
        value: values[i],
        x: xPixel(r.queries_per_hour),
        y: MARGIN.top + innerHeight - (values[i] / yMax) * innerHeight,
      })),
    };
  });

  const shadedFromX =
    capacity !== null && capacity < xMax ? xPixel(Math.max(capacity, 0)) : null;

  return {
    width,
    height: panelHeight * METRICS.length,
    xMax,
    capacity,
    shadedFromX,
    panels,
  };
}

function fmtAxis(value: number): string {
  if (value >= 1e6) return `${value / 1e6}M`;
  if (value >= 1e3) return `${value / 1e3}k`;
  return String(Math.round(value * 100) / 100);
}

export function renderProjectionChart(doc: ProjectDoc, width = 720, panelHeight = 130): string {
  const geometry = chartGeometry(doc, width, panelHeight);
  const plotRight = width - MARGIN.right;
  const panels = geometry.panels
    .map((panel, index) => {
      const top = index * panelHeight;
      const innerBottom = top + panelHeight - MARGIN.bottom;
      const shade =
        geometry.shadedFromX !== null
          ? `<rect class="over-capacity" x="${geometry.shadedFromX.toFixed(1)}" y="${top + MARGIN.top}"
               width="${(plotRight - geometry.shadedFromX).toFixed(1)}"
               height="${panelHeight - MARGIN.top - MARGIN.bottom}" fill="#d9534f" opacity="0.14"/>`
          : "";
      const path = panel.points
        .map((p, i) => `${i === 0 ? "M" : "L"}${p.x.toFixed(1)},${(top + p.y).toFixed(1)}`)
        .join(" ");
      const dots = panel.points
        .map(
          (p) =>
            `<circle cx="${p.x.toFixed(1)}" cy="${(top + p.y).toFixed(1)}" r="3">
               <title>${p.qph} queries/h: ${p.value} ${panel.unit}</title></circle>`,
        )
        .join("");
      const xLabels =
        index === METRICS.length - 1
          ? `<text x="${MARGIN.left}" y="${innerBottom + 18}" class="axis">0</text>
             <text x="${plotRight}" y="${innerBottom + 18}" class="axis" text-anchor="end">${fmtAxis(geometry.xMax)} q/h</text>`
          : "";
      return `
      <g class="panel">
        <text x="4" y="${top + 14}" class="panel-title">${panel.metric} (${panel.unit})</text>
        <line x1="${MARGIN.left}" y1="${innerBottom}" x2="${plotRight}" y2="${innerBottom}" class="axis-line"/>
        ${shade}
        <path d="${path}" class="series" fill="none"/>
        ${dots}
        ${xLabels}
      </g>`;
    })
    .join("");
  const legend =
    geometry.shadedFromX !== null
      ? `<text x="${plotRight}" y="14" text-anchor="end" class="axis shaded-note">shaded: beyond single-machine capacity (${Math.round(geometry.capacity ?? 0)} q/h)</text>`
      : "";
  return `<svg viewBox="0 0 ${geometry.width} ${geometry.height}" class="projection-chart" role="img">
    ${legend}${panels}
  </svg>`;
}
