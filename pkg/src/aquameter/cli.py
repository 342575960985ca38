"""Command-line front end.

Commands: ``estimate`` (footprint report), ``sweep`` (seasonal/diurnal
what-if), ``project`` (production query-volume projection), ``validate``
(scenario lint). Exit codes are a stable contract: 0 success, 1 I/O
failure, 2 validation failure. ``AQUAMETER_NO_COLOR`` disables ANSI
styling.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .quantities import ValidationError
from .render import (
    render_project_csv,
    render_project_table,
    render_report_csv,
    render_report_table,
    render_sweep_csv,
    render_sweep_table,
)
from .run import run_estimate, run_project, run_sweep
from .scenario import BUILTIN_PREFIX, builtin_scenario_names, resolve_scenario

EXIT_IO = 1
EXIT_VALIDATION = 2


def _style_enabled() -> bool:
    return not os.environ.get("AQUAMETER_NO_COLOR") and sys.stdout.isatty()


def _style(text: str, **kwargs) -> str:
    return click.style(text, **kwargs)


def _load(scenario_ref: str):
    try:
        return resolve_scenario(scenario_ref)
    except FileNotFoundError:
        click.echo(f"error: scenario file not found: {scenario_ref}", err=True)
        sys.exit(EXIT_IO)
    except OSError as err:
        click.echo(f"error: cannot read {scenario_ref}: {err}", err=True)
        sys.exit(EXIT_IO)
    except ValidationError as err:
        _fail_validation(err)


def _fail_validation(err: ValidationError):
    for issue in err.issues:
        click.echo(f"error: {issue}", err=True)
    sys.exit(EXIT_VALIDATION)


def _emit(text: str, out: str | None):
    if out:
        try:
            Path(out).write_text(text + ("" if text.endswith("\n") else "\n"), encoding="utf-8")
        except OSError as err:
            click.echo(f"error: cannot write {out}: {err}", err=True)
            sys.exit(EXIT_IO)
    else:
        click.echo(text)


def _apply_overrides(payload: dict, pue, wue_off, cycles, wet_bulb_f, ci) -> dict:
    """Flag overrides beat file values; returns the edited payload."""
    env = payload.setdefault("environment", {})
    if pue is not None:
        env["pue"] = pue
    if cycles is not None:
        env.setdefault("cooling_tower", {})["cycles_of_concentration"] = cycles
    if wet_bulb_f is not None:
        env["wet_bulb"] = {"constant_f": wet_bulb_f}
    grid = env.setdefault("grid", {})
    if wue_off is not None:
        grid.pop("fuel_mix", None)
        grid["wue_off"] = wue_off
    if ci is not None:
        grid["carbon_intensity"] = ci
    return payload


def _scenario_with_overrides(scenario_ref, pue, wue_off, cycles, wet_bulb_f, ci):
    scenario = _load(scenario_ref)
    if all(v is None for v in (pue, wue_off, cycles, wet_bulb_f, ci)):
        return scenario
    from .scenario import scenario_from_payload, scenario_to_payload

    payload = _apply_overrides(scenario_to_payload(scenario), pue, wue_off, cycles, wet_bulb_f, ci)
    try:
        return scenario_from_payload(payload)
    except ValidationError as err:
        _fail_validation(err)


def _scenario_option(f):
    return click.option(
        "--scenario", "scenario_ref", required=True, metavar="PATH",
        help=f"Scenario JSON file, or {BUILTIN_PREFIX}NAME for a bundled one.",
    )(f)


def _override_options(f):
    for args, kwargs in [
        (("--pue",), dict(type=float, default=None, help="Override PUE.")),
        (("--wue-off",), dict(type=float, default=None, help="Override off-site WUE (L/kWh); replaces any fuel mix.")),
        (("--cycles",), dict(type=float, default=None, help="Override cooling-tower cycles of concentration.")),
        (("--wet-bulb-f",), dict(type=float, default=None, help="Override wet-bulb temperature (F, constant).")),
        (("--ci",), dict(type=float, default=None, help="Override carbon intensity (kgCO2e/kWh).")),
    ]:
        f = click.option(*args, **kwargs)(f)
    return f


def _format_option(f):
    return click.option(
        "--format", "fmt", type=click.Choice(["table", "csv", "json"]),
        default="table", show_default=True, help="Output format.",
    )(f)


def _out_option(f):
    return click.option("--out", default=None, metavar="PATH", help="Write output to a file.")(f)


@click.group()
@click.version_option(package_name="aquameter")
def main():
    """Estimate the energy, emissions and water footprint of compute workloads."""


@main.command()
@_scenario_option
@_format_option
@_out_option
@_override_options
def estimate(scenario_ref, fmt, out, pue, wue_off, cycles, wet_bulb_f, ci):
    """Per-stage and cumulative footprint report for a scenario."""
    scenario = _scenario_with_overrides(scenario_ref, pue, wue_off, cycles, wet_bulb_f, ci)
    try:
        doc = run_estimate(scenario)
    except ValidationError as err:
        _fail_validation(err)
    if fmt == "json":
        _emit(json.dumps(doc, indent=2), out)
    elif fmt == "csv":
        _emit(render_report_csv(doc), out)
    else:
        style = _style if _style_enabled() and not out else None
        _emit(render_report_table(doc, style=style), out)


@main.command()
@_scenario_option
@click.option("--monthly", "mode", flag_value="monthly", help="Run the 12-month sweep.")
@click.option("--diurnal", "mode", flag_value="diurnal", help="Run the morning/afternoon comparison.")
@_format_option
@_out_option
@_override_options
def sweep(scenario_ref, mode, fmt, out, pue, wue_off, cycles, wet_bulb_f, ci):
    """What-if sweep over months of the year or times of day."""
    scenario = _scenario_with_overrides(scenario_ref, pue, wue_off, cycles, wet_bulb_f, ci)
    try:
        doc = run_sweep(scenario, mode)
    except ValidationError as err:
        _fail_validation(err)
    if fmt == "json":
        _emit(json.dumps(doc, indent=2), out)
    elif fmt == "csv":
        _emit(render_sweep_csv(doc), out)
    else:
        style = _style if _style_enabled() and not out else None
        _emit(render_sweep_table(doc, style=style), out)


@main.command()
@_scenario_option
@click.option(
    "--qph", "qph_list", type=float, multiple=True, metavar="N",
    help="Query rates to project (repeatable); defaults to the scenario's list.",
)
@_format_option
@_out_option
@_override_options
def project(scenario_ref, qph_list, fmt, out, pue, wue_off, cycles, wet_bulb_f, ci):
    """Project a benchmark search stage to production query volumes."""
    for q in qph_list:
        if q < 0:
            click.echo(f"error: projection.queries_per_hour: must be >= 0, got {q}", err=True)
            sys.exit(EXIT_VALIDATION)
    scenario = _scenario_with_overrides(scenario_ref, pue, wue_off, cycles, wet_bulb_f, ci)
    try:
        doc = run_project(scenario, list(qph_list) if qph_list else None)
    except ValidationError as err:
        _fail_validation(err)
    if fmt == "json":
        _emit(json.dumps(doc, indent=2), out)
    elif fmt == "csv":
        _emit(render_project_csv(doc), out)
    else:
        style = _style if _style_enabled() and not out else None
        _emit(render_project_table(doc, style=style), out)


@main.command()
@_scenario_option
def validate(scenario_ref):
    """Check a scenario file; lists every violation."""
    scenario = _load(scenario_ref)
    workload = (
        f"pipeline {scenario.pipeline.label!r} ({len(scenario.pipeline.stages)} stages)"
        if scenario.pipeline is not None
        else f"trace ({len(scenario.trace.intervals)} intervals)"
    )
    click.echo(f"valid: {scenario.label} [{workload}]")


@main.command()
def scenarios():
    """List the scenario documents bundled with the package."""
    for name in builtin_scenario_names():
        click.echo(f"{BUILTIN_PREFIX}{name}")


if __name__ == "__main__":
    main()
