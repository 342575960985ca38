"""Report documents and their table/CSV presentations.

The JSON documents built here are the single wire format: the CLI's
``--format json`` output and the HTTP API's response bodies are the same
dicts, so the two surfaces agree to the last unrounded digit by
construction. Table and CSV renderings are derived views; only the table
applies display rounding (water to 4 decimals; energy/emissions to 4
decimals below 1 and 2 above, mirroring how such results are usually
printed). CSV carries full-precision values for plotting.
"""

from __future__ import annotations

import csv
import io

from .estimator import (
    DiurnalComparison,
    FootprintReport,
    FootprintRow,
    ProductionProjection,
    SweepResult,
)
from .scenario import Scenario, scenario_to_payload


def fmt_water(value: float) -> str:
    return f"{value:.4f}"


def fmt_number(value: float) -> str:
    return f"{value:.4f}" if abs(value) < 1 else f"{value:.2f}"


def fmt_fraction(value: float | None) -> str:
    return "n/a" if value is None else f"{100 * value:.1f}%"


def _row_payload(row: FootprintRow) -> dict:
    return {
        "name": row.name,
        "running_time_h": row.running_time_h,
        "facility_energy_kwh": row.facility_energy.value,
        "emissions_kgco2e": row.emissions.value,
        "water_total_l": row.water_total.value,
        "water_on_l": row.water_on.value,
        "water_off_l": row.water_off.value,
        "on_fraction": row.on_fraction,
    }


def report_payload(report: FootprintReport) -> dict:
    return {
        "label": report.label,
        "stages": [_row_payload(r) for r in report.rows],
        "cumulative": _row_payload(report.cumulative),
        "diagnostics": list(report.diagnostics),
    }


def estimate_document(scenario: Scenario, report: FootprintReport) -> dict:
    """Full estimate response: resolved scenario echo + report."""
    doc = {
        "scenario": scenario_to_payload(scenario),
        "report": report_payload(report),
    }
    if scenario.equivalents is not None:
        from .estimator import equivalents

        doc["equivalents"] = [
            {"label": label, "units": units, "unit": unit_name}
            for label, units, unit_name in equivalents(
                report.cumulative.emissions, scenario.equivalents
            )
        ]
    return doc


def sweep_document(scenario: Scenario, mode: str, result: SweepResult | DiurnalComparison) -> dict:
    doc: dict[str, object] = {
        "scenario": scenario_to_payload(scenario),
        "mode": mode,
    }
    if isinstance(result, SweepResult):
        doc["entries"] = [
            {"tag": tag, "report": report_payload(report)} for tag, report in result.entries
        ]
    else:
        doc["entries"] = [
            {"tag": "morning", "water_on_l": result.morning_on_site.value},
            {"tag": "afternoon", "water_on_l": result.afternoon_on_site.value},
        ]
        doc["delta_l"] = result.delta_l
    return doc


def project_document(scenario: Scenario, projections: list[ProductionProjection]) -> dict:
    return {
        "scenario": scenario_to_payload(scenario),
        "rows": [
            {
                "queries_per_hour": p.queries_per_hour,
                "energy_kwh_per_hour": p.energy_per_hour.value,
                "emissions_kgco2e_per_hour": p.emissions_per_hour.value,
                "water_l_per_hour": p.water_per_hour.value,
                "implied_single_machine_qph": p.implied_single_machine_qph,
                "over_capacity": p.over_capacity,
            }
            for p in projections
        ],
    }


def _render_columns(
    headers: list[str],
    rows: list[list[str]],
    style=None,
    footer: list[str] | None = None,
) -> str:
    widths = [len(h) for h in headers]
    for row in rows + ([footer] if footer else []):
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    header_line = "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()
    lines.append(style(header_line, bold=True) if style else header_line)
    lines.append("-" * len(header_line))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    if footer:
        lines.append("-" * len(header_line))
        footer_line = "  ".join(c.ljust(w) for c, w in zip(footer, widths)).rstrip()
        lines.append(style(footer_line, bold=True) if style else footer_line)
    return "\n".join(lines)


REPORT_HEADERS = [
    "Stage", "Hours", "Energy (kWh)", "Emissions (kgCO2e)",
    "Water (L)", "On-site (L)", "Off-site (L)", "On-site share",
]


def render_report_table(doc: dict, style=None) -> str:
    """Human-readable table for an estimate document."""
    report = doc["report"]
    env = doc["scenario"]["environment"]
    grid = env["grid"]
    wue_desc = (
        f"WUE_off {grid['wue_off']:g} L/kWh" if "wue_off" in grid
        else f"fuel mix ({len(grid['fuel_mix'])} entries)"
    )
    lines = [
        f"Scenario: {doc['scenario']['label']}",
        f"Environment: PUE {env['pue']:g}, cycles of concentration "
        f"{env['cooling_tower']['cycles_of_concentration']:g}, {wue_desc}, "
        f"CI {grid['carbon_intensity']:g} kgCO2e/kWh",
        "",
    ]
    rows = [_report_cells_from_payload(r) for r in report["stages"]]
    total_cells = _report_cells_from_payload(report["cumulative"])
    lines.append(_render_columns(REPORT_HEADERS, rows, style=style, footer=total_cells))
    for warning in report["diagnostics"]:
        line = f"warning: {warning}"
        lines.append(style(line, fg="yellow") if style else line)
    if "equivalents" in doc:
        lines.append("")
        lines.append("Equivalents (cumulative emissions):")
        for eq in doc["equivalents"]:
            lines.append(f"  {eq['label']}: {fmt_number(eq['units'])} {eq['unit']}")
    return "\n".join(lines)


def _report_cells_from_payload(r: dict) -> list[str]:
    return [
        r["name"],
        fmt_number(r["running_time_h"]),
        fmt_number(r["facility_energy_kwh"]),
        fmt_number(r["emissions_kgco2e"]),
        fmt_water(r["water_total_l"]),
        fmt_water(r["water_on_l"]),
        fmt_water(r["water_off_l"]),
        fmt_fraction(r["on_fraction"]),
    ]


REPORT_CSV_HEADER = [
    "stage", "running_time_h", "facility_energy_kwh", "emissions_kgco2e",
    "water_total_l", "water_on_l", "water_off_l", "on_fraction",
]


def render_report_csv(doc: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(REPORT_CSV_HEADER)
    report = doc["report"]
    for r in [*report["stages"], report["cumulative"]]:
        writer.writerow([
            r["name"], repr(r["running_time_h"]), repr(r["facility_energy_kwh"]),
            repr(r["emissions_kgco2e"]), repr(r["water_total_l"]), repr(r["water_on_l"]),
            repr(r["water_off_l"]),
            "" if r["on_fraction"] is None else repr(r["on_fraction"]),
        ])
    return out.getvalue()


def render_sweep_table(doc: dict, style=None) -> str:
    lines = [f"Scenario: {doc['scenario']['label']}", f"Sweep: {doc['mode']}", ""]
    if doc["mode"] == "diurnal":
        headers = ["Time", "On-site water (L)"]
        rows = [[e["tag"], fmt_water(e["water_on_l"])] for e in doc["entries"]]
        lines.append(_render_columns(headers, rows, style=style))
        lines.append(f"delta (afternoon - morning): {fmt_water(doc['delta_l'])} L")
    else:
        headers = ["Month", "Water (L)", "On-site (L)", "Off-site (L)", "Emissions (kgCO2e)"]
        rows = []
        for e in doc["entries"]:
            c = e["report"]["cumulative"]
            rows.append([
                e["tag"], fmt_water(c["water_total_l"]), fmt_water(c["water_on_l"]),
                fmt_water(c["water_off_l"]), fmt_number(c["emissions_kgco2e"]),
            ])
        lines.append(_render_columns(headers, rows, style=style))
        warnings = {w for e in doc["entries"] for w in e["report"]["diagnostics"]}
        for warning in sorted(warnings):
            line = f"warning: {warning}"
            lines.append(style(line, fg="yellow") if style else line)
    return "\n".join(lines)


def render_sweep_csv(doc: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if doc["mode"] == "diurnal":
        writer.writerow(["tag", "water_on_l"])
        for e in doc["entries"]:
            writer.writerow([e["tag"], repr(e["water_on_l"])])
        writer.writerow(["delta", repr(doc["delta_l"])])
    else:
        writer.writerow([
            "tag", "water_total_l", "water_on_l", "water_off_l",
            "emissions_kgco2e", "facility_energy_kwh",
        ])
        for e in doc["entries"]:
            c = e["report"]["cumulative"]
            writer.writerow([
                e["tag"], repr(c["water_total_l"]), repr(c["water_on_l"]),
                repr(c["water_off_l"]), repr(c["emissions_kgco2e"]),
                repr(c["facility_energy_kwh"]),
            ])
    return out.getvalue()


def render_project_table(doc: dict, style=None) -> str:
    lines = [f"Scenario: {doc['scenario']['label']}", ""]
    headers = ["Queries/h", "kWh/h", "kgCO2e/h", "L/h", "Capacity flag"]
    rows = []
    for r in doc["rows"]:
        flag = "OVER single-machine capacity" if r["over_capacity"] else ""
        if flag and style:
            flag = style(flag, fg="red")
        rows.append([
            f"{r['queries_per_hour']:g}",
            fmt_number(r["energy_kwh_per_hour"]),
            fmt_number(r["emissions_kgco2e_per_hour"]),
            fmt_water(r["water_l_per_hour"]),
            flag,
        ])
    lines.append(_render_columns(headers, rows, style=style))
    if doc["rows"]:
        qph = doc["rows"][0]["implied_single_machine_qph"]
        lines.append(f"implied single-machine throughput: {qph:.0f} queries/h")
    return "\n".join(lines)


def render_project_csv(doc: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([
        "queries_per_hour", "energy_kwh_per_hour", "emissions_kgco2e_per_hour",
        "water_l_per_hour", "implied_single_machine_qph", "over_capacity",
    ])
    for r in doc["rows"]:
        writer.writerow([
            repr(r["queries_per_hour"]), repr(r["energy_kwh_per_hour"]),
            repr(r["emissions_kgco2e_per_hour"]), repr(r["water_l_per_hour"]),
            repr(r["implied_single_machine_qph"]), str(r["over_capacity"]).lower(),
        ])
    return out.getvalue()
