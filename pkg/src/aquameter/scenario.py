"""Scenario documents: one JSON file bundling workload + environment.

A scenario is the archival unit for a footprint calculation: the pipeline
(or a trace file reference), the data-center and grid context, and any
what-if specs (seasonal sweep, diurnal pair, production projection,
emission equivalents). Documents carry a ``version`` field, currently
``aquameter/1``; unknown versions are rejected loudly because reports built
from scenarios end up in archival artifacts.

Omitted environment fields fall back to the documented defaults. Parsing
collects *all* violations with their field paths rather than stopping at
the first, so a bad file can be fixed in one pass.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .cooling import CoolingTower, WetBulbSource
from .energy import EnergyTrace, Pipeline, ingest_trace, pipeline_from_payload, pipeline_to_payload
from .estimator import Environment, EquivalenceRef, EquivalenceSet, validate_environment
from .grid import DataCenter, FuelMix, FuelShare, GridProfile
from .quantities import TemperatureF, ValidationError, ValidationIssue, Wue

SCENARIO_VERSION = "aquameter/1"

# Reference defaults: a Brisbane-style site (PUE 1.89, cooling tower with
# S = 2.25, annual mean 3pm wet-bulb 65.3 F) on a grid with combined
# WUE_off 1.8 L/kWh and carbon intensity 0.766 kgCO2e/kWh.
DEFAULTS = {
    "pue": 1.89,
    "cycles_of_concentration": 2.25,
    "wet_bulb_f": 65.3,
    "wue_off": 1.8,
    "carbon_intensity": 0.766,
}


@dataclass(frozen=True, slots=True)
class SweepSpec:
    monthly_f: tuple[TemperatureF, ...] | None = None
    diurnal: tuple[TemperatureF, TemperatureF] | None = None


@dataclass(frozen=True, slots=True)
class ProjectionSpec:
    stage_name: str
    dev_query_count: int
    queries_per_hour: tuple[float, ...] = ()


@dataclass(frozen=True, slots=True)
class Scenario:
    label: str
    environment: Environment
    pipeline: Pipeline | None = None
    trace: EnergyTrace | None = None
    trace_file: str | None = None
    sweep: SweepSpec | None = None
    projection: ProjectionSpec | None = None
    equivalents: EquivalenceSet | None = None

    @property
    def workload_label(self) -> str:
        return self.pipeline.label if self.pipeline is not None else self.label


class _Issues:
    """Accumulates validation issues across independent sub-parsers."""

    def __init__(self):
        self.items: list[ValidationIssue] = []

    def add(self, field: str, message: str) -> None:
        self.items.append(ValidationIssue(field, message))

    def absorb(self, err: ValidationError) -> None:
        self.items.extend(err.issues)

    def raise_if_any(self) -> None:
        if self.items:
            raise ValidationError(self.items)


def _number(payload: dict, key: str, path: str, issues: _Issues, default=None):
    value = payload.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        issues.add(f"{path}.{key}", f"must be a number, got {value!r}")
        return None
    return float(value)


def _wet_bulb_from_payload(raw: object, issues: _Issues) -> WetBulbSource | None:
    path = "environment.wet_bulb"
    if raw is None:
        return WetBulbSource.constant_f(DEFAULTS["wet_bulb_f"])
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        try:
            return WetBulbSource.constant_f(float(raw))
        except ValidationError as err:
            issues.absorb(err.prefixed(path))
            return None
    if not isinstance(raw, dict):
        issues.add(path, f"must be a number or an object, got {raw!r}")
        return None
    keys = [k for k in ("constant_f", "constant_c", "monthly_f", "schedule_f") if k in raw]
    if len(keys) != 1:
        issues.add(path, "exactly one of constant_f/constant_c/monthly_f/schedule_f must be set")
        return None
    key = keys[0]
    try:
        if key == "constant_f":
            return WetBulbSource.constant_f(raw[key])
        if key == "constant_c":
            from .quantities import fahrenheit_from_celsius

            return WetBulbSource(constant=fahrenheit_from_celsius(raw[key]))
        if key == "monthly_f":
            values = raw[key]
            if not isinstance(values, list) or len(values) != 12:
                issues.add(f"{path}.monthly_f", "expected 12 monthly temperatures")
                return None
            return WetBulbSource.from_monthly(values)
        entries = raw[key]
        if not isinstance(entries, list):
            issues.add(f"{path}.schedule_f", "expected a list of [interval_index, temperature_f]")
            return None
        return WetBulbSource.from_schedule((e[0], e[1]) for e in entries)
    except (ValidationError, TypeError, IndexError) as err:
        if isinstance(err, ValidationError):
            issues.absorb(err.prefixed(path))
        else:
            issues.add(path, f"malformed wet-bulb specification: {err}")
        return None


def _grid_from_payload(raw: object, issues: _Issues) -> GridProfile | None:
    path = "environment.grid"
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        issues.add(path, f"must be an object, got {raw!r}")
        return None
    ci = _number(raw, "carbon_intensity", path, issues, DEFAULTS["carbon_intensity"])
    mix_raw = raw.get("fuel_mix")
    wue_raw = raw.get("wue_off")
    if mix_raw is not None and wue_raw is not None:
        issues.add(path, "exactly one of fuel_mix/wue_off must be set")
        return None
    try:
        if mix_raw is not None:
            if not isinstance(mix_raw, list) or not mix_raw:
                issues.add(f"{path}.fuel_mix", "fuel mix requires at least one entry")
                return None
            entries = []
            for i, entry in enumerate(mix_raw):
                if not isinstance(entry, dict):
                    issues.add(f"{path}.fuel_mix[{i}]", "must be an object")
                    return None
                try:
                    entries.append(FuelShare(
                        fuel=str(entry.get("fuel", f"fuel-{i}")),
                        share=entry.get("share", 0.0),
                        ewif=Wue(entry.get("ewif", 0.0)),
                    ))
                except ValidationError as err:
                    issues.absorb(err.prefixed(f"{path}.fuel_mix[{i}]"))
                    return None
            profile = GridProfile.from_mix(FuelMix(tuple(entries)), ci)
        else:
            wue = wue_raw if wue_raw is not None else DEFAULTS["wue_off"]
            if isinstance(wue, bool) or not isinstance(wue, (int, float)):
                issues.add(f"{path}.wue_off", f"must be a number, got {wue!r}")
                return None
            profile = GridProfile.from_wue_off(float(wue), ci)
        profile.validate(path)
        return profile
    except ValidationError as err:
        issues.absorb(err if err.issues[0].field.startswith(path) else err.prefixed(path))
        return None


def environment_from_payload(raw: object) -> Environment:
    """Build and fully validate an Environment, collecting every violation."""
    issues = _Issues()
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ValidationError("must be an object", "environment")

    pue = _number(raw, "pue", "environment", issues, DEFAULTS["pue"])

    tower_raw = raw.get("cooling_tower", {})
    if not isinstance(tower_raw, dict):
        issues.add("environment.cooling_tower", f"must be an object, got {tower_raw!r}")
        tower = None
    else:
        cycles = _number(
            tower_raw, "cycles_of_concentration", "environment.cooling_tower",
            issues, DEFAULTS["cycles_of_concentration"],
        )
        tower = CoolingTower(
            cycles_of_concentration=cycles if cycles is not None else DEFAULTS["cycles_of_concentration"],
            label=str(tower_raw.get("label", "")),
        )

    wet_bulb = _wet_bulb_from_payload(raw.get("wet_bulb"), issues)
    grid = _grid_from_payload(raw.get("grid"), issues)

    # Bound-check whatever parsed, so one bad section does not mask another.
    dc = None
    if pue is not None and tower is not None and wet_bulb is not None:
        dc = DataCenter(pue=pue, tower=tower, wet_bulb=wet_bulb)
        try:
            dc.validate("environment")
        except ValidationError as err:
            issues.absorb(err)
    issues.raise_if_any()
    if dc is None or grid is None:
        raise ValidationError("environment could not be constructed", "environment")
    return validate_environment(Environment(dc=dc, grid=grid))


def _sweep_from_payload(raw: object, issues: _Issues) -> SweepSpec | None:
    if raw is None:
        return None
    path = "sweep"
    if not isinstance(raw, dict):
        issues.add(path, f"must be an object, got {raw!r}")
        return None
    monthly = None
    diurnal = None
    if "monthly_f" in raw:
        values = raw["monthly_f"]
        if not isinstance(values, list) or len(values) != 12:
            got = len(values) if isinstance(values, list) else values
            issues.add(f"{path}.monthly_f", f"expected 12 monthly temperatures, got {got!r}")
        else:
            try:
                monthly = tuple(TemperatureF(v) for v in values)
            except ValidationError as err:
                issues.absorb(err.prefixed(f"{path}.monthly_f"))
    if "diurnal" in raw:
        d = raw["diurnal"]
        if not isinstance(d, dict) or "morning_f" not in d or "afternoon_f" not in d:
            issues.add(f"{path}.diurnal", "expected an object with morning_f and afternoon_f")
        else:
            try:
                diurnal = (TemperatureF(d["morning_f"]), TemperatureF(d["afternoon_f"]))
            except ValidationError as err:
                issues.absorb(err.prefixed(f"{path}.diurnal"))
    if monthly is None and diurnal is None and not issues.items:
        issues.add(path, "sweep spec must define monthly_f and/or diurnal")
    if monthly is None and diurnal is None:
        return None
    return SweepSpec(monthly_f=monthly, diurnal=diurnal)


def _projection_from_payload(raw: object, issues: _Issues) -> ProjectionSpec | None:
    if raw is None:
        return None
    path = "projection"
    if not isinstance(raw, dict):
        issues.add(path, f"must be an object, got {raw!r}")
        return None
    stage = raw.get("stage")
    if not isinstance(stage, str) or not stage:
        issues.add(f"{path}.stage", "must name a pipeline stage")
        return None
    count = raw.get("dev_query_count")
    if isinstance(count, bool) or not isinstance(count, int) or count <= 0:
        issues.add(f"{path}.dev_query_count", f"must be a positive integer, got {count!r}")
        return None
    qph_raw = raw.get("queries_per_hour", [])
    if not isinstance(qph_raw, list):
        issues.add(f"{path}.queries_per_hour", "must be a list of rates")
        return None
    rates = []
    for i, q in enumerate(qph_raw):
        if isinstance(q, bool) or not isinstance(q, (int, float)) or q < 0:
            issues.add(f"{path}.queries_per_hour[{i}]", f"must be a number >= 0, got {q!r}")
        else:
            rates.append(float(q))
    return ProjectionSpec(stage_name=stage, dev_query_count=count, queries_per_hour=tuple(rates))


def _equivalents_from_payload(raw: object, issues: _Issues) -> EquivalenceSet | None:
    if raw is None:
        return None
    path = "equivalents"
    if not isinstance(raw, list):
        issues.add(path, f"must be a list, got {raw!r}")
        return None
    refs = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict) or "label" not in entry or "kg_co2e_per_unit" not in entry:
            issues.add(f"{path}[{i}]", "expected an object with label and kg_co2e_per_unit")
            continue
        try:
            refs.append(EquivalenceRef(
                label=str(entry["label"]),
                kg_co2e_per_unit=entry["kg_co2e_per_unit"],
                unit_name=str(entry.get("unit", "units")),
            ))
        except ValidationError as err:
            issues.absorb(err.prefixed(f"{path}[{i}]"))
    if not refs and not issues.items:
        issues.add(path, "equivalence set must not be empty")
    return EquivalenceSet(tuple(refs)) if refs else None


def scenario_from_payload(
    payload: object,
    base_dir: Path | None = None,
    require_version: bool = True,
) -> Scenario:
    """Parse a scenario document, collecting every validation issue.

    ``base_dir`` resolves relative pipeline/trace file references; when
    None, file references are rejected (the inline-only form used by the
    HTTP API). ``require_version`` is relaxed for API requests, where the
    envelope already scopes the format.
    """
    if not isinstance(payload, dict):
        raise ValidationError(f"scenario must be an object, got {type(payload).__name__}", "")

    issues = _Issues()
    version = payload.get("version")
    if version is None and require_version:
        issues.add("version", f"missing version; expected {SCENARIO_VERSION!r}")
    elif version is not None and version != SCENARIO_VERSION:
        issues.add("version", f"unsupported version {version!r}; this build reads {SCENARIO_VERSION!r}")

    label = payload.get("label", "")
    if not isinstance(label, str):
        issues.add("label", f"must be a string, got {label!r}")
        label = ""

    environment = None
    try:
        environment = environment_from_payload(payload.get("environment"))
    except ValidationError as err:
        issues.absorb(err)

    pipeline = None
    trace = None
    trace_file = None
    pipeline_raw = payload.get("pipeline")
    trace_raw = payload.get("trace")
    if pipeline_raw is None and trace_raw is None:
        issues.add("pipeline", "scenario requires a pipeline or a trace reference")
    elif pipeline_raw is not None and trace_raw is not None:
        issues.add("pipeline", "scenario cannot carry both a pipeline and a trace")
    elif pipeline_raw is not None:
        try:
            if isinstance(pipeline_raw, str):
                if base_dir is None:
                    issues.add("pipeline", "file references are not allowed here; inline the pipeline")
                else:
                    from .energy import load_pipeline

                    pipeline = load_pipeline(base_dir / pipeline_raw)
            else:
                pipeline = pipeline_from_payload(pipeline_raw)
        except ValidationError as err:
            issues.absorb(err)
        except OSError as err:
            issues.add("pipeline", f"cannot read referenced file: {err}")
    else:
        if not isinstance(trace_raw, dict) or not isinstance(trace_raw.get("file"), str):
            issues.add("trace", "expected an object with a file path")
        elif base_dir is None:
            issues.add("trace", "file references are not allowed here; inline the pipeline")
        else:
            trace_file = trace_raw["file"]
            try:
                trace = ingest_trace(base_dir / trace_file)
            except ValidationError as err:
                issues.absorb(err.prefixed("trace"))
            except OSError as err:
                issues.add("trace", f"cannot read referenced file: {err}")

    sweep = _sweep_from_payload(payload.get("sweep"), issues)
    projection = _projection_from_payload(payload.get("projection"), issues)
    equivalence = _equivalents_from_payload(payload.get("equivalents"), issues)

    if projection is not None and pipeline is not None:
        try:
            pipeline.stage(projection.stage_name)
        except ValidationError:
            issues.add(
                "projection.stage",
                f"stage {projection.stage_name!r} not found in pipeline {pipeline.label!r}",
            )

    issues.raise_if_any()
    assert environment is not None
    return Scenario(
        label=label or (pipeline.label if pipeline else "scenario"),
        environment=environment,
        pipeline=pipeline,
        trace=trace,
        trace_file=trace_file,
        sweep=sweep,
        projection=projection,
        equivalents=equivalence,
    )


def load_scenario(path: str | Path) -> Scenario:
    """Read a scenario JSON file; file references resolve next to it."""
    p = Path(path)
    try:
        payload = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise ValidationError(f"invalid JSON: {err}", str(path)) from None
    return scenario_from_payload(payload, base_dir=p.parent)


def _wet_bulb_to_payload(source: WetBulbSource) -> object:
    if source.constant is not None:
        return {"constant_f": source.constant.value}
    if source.monthly is not None:
        return {"monthly_f": [t.value for t in source.monthly]}
    assert source.schedule is not None
    return {"schedule_f": [[i, t.value] for i, t in source.schedule]}


def environment_to_payload(env: Environment) -> dict:
    grid: dict[str, object] = {"carbon_intensity": env.grid.carbon_intensity.value}
    if env.grid.direct_wue_off is not None:
        grid["wue_off"] = env.grid.direct_wue_off.value
    else:
        grid["fuel_mix"] = [
            {"fuel": e.fuel, "share": e.share, "ewif": e.ewif.value}
            for e in env.grid.mix.entries
        ]
    return {
        "pue": env.dc.pue,
        "cooling_tower": {
            "cycles_of_concentration": env.dc.tower.cycles_of_concentration,
            "label": env.dc.tower.label,
        },
        "wet_bulb": _wet_bulb_to_payload(env.dc.wet_bulb),
        "grid": grid,
    }


def scenario_to_payload(scenario: Scenario) -> dict:
    """Normalized document form: defaults resolved, references inlined."""
    payload: dict[str, object] = {
        "version": SCENARIO_VERSION,
        "label": scenario.label,
        "environment": environment_to_payload(scenario.environment),
    }
    if scenario.pipeline is not None:
        payload["pipeline"] = pipeline_to_payload(scenario.pipeline)
    if scenario.trace_file is not None:
        payload["trace"] = {"file": scenario.trace_file}
    if scenario.sweep is not None:
        sweep: dict[str, object] = {}
        if scenario.sweep.monthly_f is not None:
            sweep["monthly_f"] = [t.value for t in scenario.sweep.monthly_f]
        if scenario.sweep.diurnal is not None:
            sweep["diurnal"] = {
                "morning_f": scenario.sweep.diurnal[0].value,
                "afternoon_f": scenario.sweep.diurnal[1].value,
            }
        payload["sweep"] = sweep
    if scenario.projection is not None:
        payload["projection"] = {
            "stage": scenario.projection.stage_name,
            "dev_query_count": scenario.projection.dev_query_count,
            "queries_per_hour": list(scenario.projection.queries_per_hour),
        }
    if scenario.equivalents is not None:
        payload["equivalents"] = [
            {"label": r.label, "kg_co2e_per_unit": r.kg_co2e_per_unit, "unit": r.unit_name}
            for r in scenario.equivalents.refs
        ]
    return payload


BUILTIN_PREFIX = "builtin:"


def builtin_scenario_names() -> list[str]:
    """Names of the scenario documents shipped with the package."""
    root = resources.files("aquameter.data") / "scenarios"
    return sorted(p.name[: -len(".json")] for p in root.iterdir() if p.name.endswith(".json"))


def load_builtin_scenario(name: str) -> Scenario:
    payload = builtin_scenario_payload(name)
    return scenario_from_payload(payload)


def builtin_scenario_payload(name: str) -> dict:
    root = resources.files("aquameter.data") / "scenarios"
    candidate = root / f"{name}.json"
    if not candidate.is_file():
        known = ", ".join(builtin_scenario_names())
        raise ValidationError(f"unknown builtin scenario {name!r}; available: {known}", "scenario")
    return json.loads(candidate.read_text(encoding="utf-8"))


def resolve_scenario(ref: str) -> Scenario:
    """Load ``builtin:NAME`` or a filesystem path."""
    if ref.startswith(BUILTIN_PREFIX):
        return load_builtin_scenario(ref[len(BUILTIN_PREFIX):])
    return load_scenario(ref)
