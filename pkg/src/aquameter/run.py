"""Execute scenarios into response documents.

The CLI commands and the HTTP endpoints both call these functions, so the
two front ends cannot drift apart numerically.
"""

from __future__ import annotations

from .estimator import (
    monthly_sweep,
    pipeline_report,
    project_production,
    time_of_day_compare,
    trace_report,
)
from .quantities import ValidationError
from .render import estimate_document, project_document, sweep_document
from .scenario import Scenario


def run_estimate(scenario: Scenario) -> dict:
    if scenario.pipeline is not None:
        report = pipeline_report(scenario.pipeline, scenario.environment)
    else:
        assert scenario.trace is not None
        report = trace_report(scenario.label, scenario.trace, scenario.environment)
    return estimate_document(scenario, report)


def run_sweep(scenario: Scenario, mode: str | None = None) -> dict:
    """Run the scenario's seasonal or diurnal sweep.

    ``mode`` picks between them when both specs are present; when omitted,
    the single spec present is used.
    """
    spec = scenario.sweep
    if spec is None:
        raise ValidationError("scenario has no sweep spec", "sweep")
    if scenario.pipeline is None:
        raise ValidationError("sweeps require a pipeline scenario", "sweep")
    if mode is None:
        if spec.monthly_f is not None and spec.diurnal is not None:
            raise ValidationError(
                "scenario defines both sweeps; pick mode 'monthly' or 'diurnal'", "sweep"
            )
        mode = "monthly" if spec.monthly_f is not None else "diurnal"
    if mode == "monthly":
        if spec.monthly_f is None:
            raise ValidationError("scenario has no monthly sweep spec", "sweep.monthly_f")
        result = monthly_sweep(scenario.pipeline, scenario.environment, spec.monthly_f)
    elif mode == "diurnal":
        if spec.diurnal is None:
            raise ValidationError("scenario has no diurnal sweep spec", "sweep.diurnal")
        result = time_of_day_compare(
            scenario.pipeline, scenario.environment, spec.diurnal[0], spec.diurnal[1]
        )
    else:
        raise ValidationError(f"unknown sweep mode {mode!r}", "sweep")
    return sweep_document(scenario, mode, result)


def run_project(scenario: Scenario, qph_override: list[float] | None = None) -> dict:
    spec = scenario.projection
    if spec is None:
        raise ValidationError("scenario has no projection spec", "projection")
    if scenario.pipeline is None:
        raise ValidationError("projections require a pipeline scenario", "projection")
    stage = scenario.pipeline.stage(spec.stage_name)
    rates = qph_override if qph_override is not None else list(spec.queries_per_hour)
    if not rates:
        raise ValidationError(
            "no query rates given; set projection.queries_per_hour or pass rates explicitly",
            "projection.queries_per_hour",
        )
    projections = [
        project_production(stage, spec.dev_query_count, q, scenario.environment)
        for q in rates
    ]
    return project_document(scenario, projections)
