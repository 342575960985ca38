"""Compose the cooling and grid models into footprint reports.

Total water for a workload decomposes into the data center's own cooling
water plus the water embedded in generating its electricity:

    W = W_on + W_off

Reports carry that decomposition per pipeline stage and cumulatively, next
to facility energy and carbon emissions. Cumulative rows are computed from
unrounded stage values and only rounded at display time; published tables
that re-sum their own rounded entries drift in the fourth decimal, and this
module does not reproduce that drift.

Also here: seasonal and diurnal what-if sweeps, the production query-volume
projection, and emission-equivalents conversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .cooling import Diagnostics, WetBulbSource, on_site_water
from .energy import (
    Basis,
    EnergyTrace,
    Pipeline,
    StageRecord,
    to_server_basis,
    trace_from_stage,
)
from .grid import DataCenter, GridProfile, emissions, off_site_water
from .quantities import (
    CarbonIntensity,
    Emissions,
    Energy,
    TemperatureF,
    ValidationError,
    ValidationIssue,
    Water,
)

CUMULATIVE_LABEL = "TOTAL"
MONTH_NAMES = (
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
)


@dataclass(frozen=True, slots=True)
class Environment:
    """Everything about where a workload runs: facility plus grid."""

    dc: DataCenter
    grid: GridProfile


def validate_environment(env: Environment) -> Environment:
    """Check every environment invariant, collecting all violations.

    Returns the environment unchanged when valid; idempotent. Raises a
    single ValidationError listing every violated bound with its field path
    (cycles of concentration > 1, PUE >= 1, fuel shares summing positive,
    EWIF and carbon intensity >= 0).
    """
    issues: list[ValidationIssue] = []
    try:
        env.dc.validate("environment")
    except ValidationError as err:
        issues.extend(err.issues)
    try:
        env.grid.validate("environment.grid")
    except ValidationError as err:
        issues.extend(err.issues)
    if issues:
        raise ValidationError(issues)
    return env


@dataclass(frozen=True, slots=True)
class WaterBreakdown:
    on: Water
    off: Water

    @property
    def total(self) -> Water:
        return Water(self.on.value + self.off.value)


def total_water(
    trace: EnergyTrace,
    env: Environment,
    diagnostics: Diagnostics | None = None,
) -> WaterBreakdown:
    """On-site + off-site water for a trace under an environment.

    The trace is normalized to server basis through the environment's PUE
    before either component is evaluated.
    """
    validate_environment(env)
    server = to_server_basis(trace, env.dc.pue)
    on = on_site_water(server, env.dc.tower, env.dc.wet_bulb, diagnostics)
    off = off_site_water(server, env.dc, env.grid)
    return WaterBreakdown(on=on, off=off)


@dataclass(frozen=True, slots=True)
class FootprintRow:
    """One report line: a stage or the cumulative total."""

    name: str
    running_time_h: float
    facility_energy: Energy
    emissions: Emissions
    water_on: Water
    water_off: Water

    @property
    def water_total(self) -> Water:
        return Water(self.water_on.value + self.water_off.value)

    @property
    def on_fraction(self) -> float | None:
        """Share of total water consumed on site; None when no water flows."""
        total = self.water_total.value
        if total == 0:
            return None
        return self.water_on.value / total


@dataclass(frozen=True, slots=True)
class FootprintReport:
    label: str
    rows: tuple[FootprintRow, ...]
    cumulative: FootprintRow
    diagnostics: tuple[str, ...] = ()


def _stage_row(
    stage: StageRecord,
    env: Environment,
    ci: CarbonIntensity,
    diagnostics: Diagnostics,
) -> FootprintRow:
    trace = trace_from_stage(stage)
    water = total_water(trace, env, diagnostics)
    if stage.basis is Basis.FACILITY:
        facility = stage.power
    else:
        facility = Energy(stage.power.value * env.dc.pue)
    return FootprintRow(
        name=stage.name,
        running_time_h=stage.running_time_h,
        facility_energy=facility,
        emissions=emissions(facility, ci),
        water_on=water.on,
        water_off=water.off,
    )


def _cumulative_row(rows: tuple[FootprintRow, ...]) -> FootprintRow:
    return FootprintRow(
        name=CUMULATIVE_LABEL,
        running_time_h=sum(r.running_time_h for r in rows),
        facility_energy=Energy(sum(r.facility_energy.value for r in rows)),
        emissions=Emissions(sum(r.emissions.value for r in rows)),
        water_on=Water(sum(r.water_on.value for r in rows)),
        water_off=Water(sum(r.water_off.value for r in rows)),
    )


def pipeline_report(
    p: Pipeline,
    env: Environment,
    ci: CarbonIntensity | None = None,
) -> FootprintReport:
    """Per-stage and cumulative footprint for a pipeline.

    ``ci`` overrides the grid profile's carbon intensity when given.
    """
    validate_environment(env)
    ci = ci if ci is not None else env.grid.carbon_intensity
    diagnostics = Diagnostics()
    rows = tuple(_stage_row(s, env, ci, diagnostics) for s in p.stages)
    return FootprintReport(
        label=p.label,
        rows=rows,
        cumulative=_cumulative_row(rows),
        diagnostics=tuple(diagnostics.warnings),
    )


def trace_report(
    label: str,
    trace: EnergyTrace,
    env: Environment,
    ci: CarbonIntensity | None = None,
) -> FootprintReport:
    """Footprint for a timestamped trace, reported as a single row."""
    validate_environment(env)
    ci = ci if ci is not None else env.grid.carbon_intensity
    diagnostics = Diagnostics()
    water = total_water(trace, env, diagnostics)
    if trace.basis is Basis.FACILITY:
        facility = trace.total_energy
    else:
        facility = Energy(trace.total_energy.value * env.dc.pue)
    row = FootprintRow(
        name=label,
        running_time_h=trace.total_duration_s / 3600.0,
        facility_energy=facility,
        emissions=emissions(facility, ci),
        water_on=water.on,
        water_off=water.off,
    )
    return FootprintReport(
        label=label,
        rows=(row,),
        cumulative=_cumulative_row((row,)),
        diagnostics=tuple(diagnostics.warnings),
    )


def on_off_breakdown(report: FootprintReport) -> list[tuple[str, float | None]]:
    """On-site fraction per stage plus the cumulative row.

    Stages that consumed no water at all report None rather than a 0/0.
    """
    rows = [*report.rows, report.cumulative]
    return [(r.name, r.on_fraction) for r in rows]


@dataclass(frozen=True, slots=True)
class SweepResult:
    entries: tuple[tuple[str, FootprintReport], ...]


def _with_wet_bulb(env: Environment, source: WetBulbSource) -> Environment:
    return Environment(dc=replace(env.dc, wet_bulb=source), grid=env.grid)


def monthly_sweep(
    p: Pipeline,
    env_base: Environment,
    monthly_temps: tuple[TemperatureF, ...] | list[TemperatureF],
) -> SweepResult:
    """Twelve reports, one per month's mean wet-bulb temperature."""
    temps = tuple(monthly_temps)
    if len(temps) != 12:
        raise ValidationError(
            f"expected 12 monthly temperatures, got {len(temps)}", "sweep.monthly_f"
        )
    entries = []
    for month, temp in zip(MONTH_NAMES, temps):
        env = _with_wet_bulb(env_base, WetBulbSource(constant=temp))
        entries.append((month, pipeline_report(p, env)))
    return SweepResult(entries=tuple(entries))


@dataclass(frozen=True, slots=True)
class DiurnalComparison:
    """On-site water at two times of day; delta is afternoon minus morning."""

    morning_on_site: Water
    afternoon_on_site: Water

    @property
    def delta_l(self) -> float:
        return self.afternoon_on_site.value - self.morning_on_site.value


def time_of_day_compare(
    p: Pipeline,
    env_base: Environment,
    t_morning: TemperatureF,
    t_afternoon: TemperatureF,
) -> DiurnalComparison:
    """Cumulative on-site water run at a morning vs an afternoon wet-bulb.

    The delta may be negative when mornings are the warmer time.
    """
    waters = []
    for temp in (t_morning, t_afternoon):
        env = _with_wet_bulb(env_base, WetBulbSource(constant=temp))
        waters.append(pipeline_report(p, env).cumulative.water_on)
    return DiurnalComparison(morning_on_site=waters[0], afternoon_on_site=waters[1])


@dataclass(frozen=True, slots=True)
class ProductionProjection:
    """Per-hour footprint of serving a query stream at a given rate.

    Figures assume the per-query cost observed on the benchmark run and a
    single machine; ``over_capacity`` flags rates beyond what that machine
    demonstrably sustained, where the figures become a lower bound (a real
    deployment would add load-balanced replicas).
    """

    queries_per_hour: float
    energy_per_hour: Energy  # facility basis
    emissions_per_hour: Emissions
    water_per_hour: Water
    implied_single_machine_qph: float
    over_capacity: bool


def project_production(
    search_stage: StageRecord,
    dev_query_count: int,
    queries_per_hour: float,
    env: Environment,
    ci: CarbonIntensity | None = None,
) -> ProductionProjection:
    """Scale a benchmark search stage to a production query rate.

    Energy per query is the stage's total energy divided by the number of
    benchmark queries; per-hour figures scale linearly in the rate. The
    stage's own throughput (queries / running time) is the single-machine
    capacity estimate used for the over-capacity flag.
    """
    if not isinstance(dev_query_count, int) or isinstance(dev_query_count, bool) or dev_query_count <= 0:
        raise ValidationError(
            f"dev query count must be a positive integer, got {dev_query_count!r}",
            "projection.dev_query_count",
        )
    if isinstance(queries_per_hour, bool) or not isinstance(queries_per_hour, (int, float)) \
            or not math.isfinite(queries_per_hour) or queries_per_hour < 0:
        raise ValidationError(
            f"queries per hour must be a finite number >= 0, got {queries_per_hour!r}",
            "projection.queries_per_hour",
        )
    if search_stage.running_time_h <= 0:
        raise ValidationError(
            "search stage running time must be positive to estimate throughput",
            "projection.stage",
        )
    validate_environment(env)
    ci = ci if ci is not None else env.grid.carbon_intensity

    if search_stage.basis is Basis.FACILITY:
        facility_per_query = search_stage.power.value / dev_query_count
    else:
        facility_per_query = search_stage.power.value * env.dc.pue / dev_query_count
    facility_per_hour = Energy(facility_per_query * queries_per_hour)
    hourly_trace = trace_from_stage(StageRecord("hourly", 1.0, facility_per_hour, Basis.FACILITY))
    water = total_water(hourly_trace, env)
    implied_qph = dev_query_count / search_stage.running_time_h
    return ProductionProjection(
        queries_per_hour=float(queries_per_hour),
        energy_per_hour=facility_per_hour,
        emissions_per_hour=emissions(facility_per_hour, ci),
        water_per_hour=water.total,
        implied_single_machine_qph=implied_qph,
        over_capacity=queries_per_hour > implied_qph,
    )


@dataclass(frozen=True, slots=True)
class EquivalenceRef:
    """A familiar reference point: kgCO2e per one unit of it."""

    label: str
    kg_co2e_per_unit: float
    unit_name: str = "units"

    def __post_init__(self):
        r = self.kg_co2e_per_unit
        if isinstance(r, bool) or not isinstance(r, (int, float)) or not math.isfinite(r) or r <= 0:
            raise ValidationError(
                f"equivalence rate must be a positive number, got {r!r}",
                "equivalents.kg_co2e_per_unit",
            )


@dataclass(frozen=True, slots=True)
class EquivalenceSet:
    refs: tuple[EquivalenceRef, ...]

    def __post_init__(self):
        object.__setattr__(self, "refs", tuple(self.refs))


def equivalents(em: Emissions, refs: EquivalenceSet) -> list[tuple[str, float, str]]:
    """Express emissions as multiples of each reference: (label, units, unit name)."""
    return [(r.label, em.value / r.kg_co2e_per_unit, r.unit_name) for r in refs.refs]
