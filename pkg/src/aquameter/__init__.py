"""Energy, CO2-emissions and water-footprint estimation for compute workloads.

Water is the overlooked column in sustainability accounting: beyond the
electricity a workload draws (and the emissions behind it), the data center
evaporates cooling water on site and the supplying power plants consume
water off site. This package models both, reports them per pipeline stage,
and supports what-if analysis over seasons, times of day, water quality and
fuel mix, plus projection from benchmark runs to production query volumes.
"""

from .cooling import CoolingTower, Diagnostics, WetBulbSource, evaporative_rate, on_site_water, wue_on
from .energy import (
    Basis,
    EnergyTrace,
    Interval,
    Pipeline,
    StageRecord,
    ingest_trace,
    parse_trace,
    serialize_trace,
    to_server_basis,
    trace_from_stage,
)
from .estimator import (
    DiurnalComparison,
    Environment,
    EquivalenceRef,
    EquivalenceSet,
    FootprintReport,
    FootprintRow,
    ProductionProjection,
    SweepResult,
    WaterBreakdown,
    equivalents,
    monthly_sweep,
    on_off_breakdown,
    pipeline_report,
    project_production,
    time_of_day_compare,
    total_water,
    trace_report,
    validate_environment,
)
from .grid import DataCenter, FuelMix, FuelShare, GridProfile, emissions, off_site_water, wue_off
from .quantities import (
    CarbonIntensity,
    Emissions,
    Energy,
    TemperatureF,
    ValidationError,
    ValidationIssue,
    Water,
    Wue,
    celsius_from_fahrenheit,
    fahrenheit_from_celsius,
)
from .scenario import (
    DEFAULTS,
    SCENARIO_VERSION,
    Scenario,
    builtin_scenario_names,
    load_builtin_scenario,
    load_scenario,
    resolve_scenario,
    scenario_from_payload,
    scenario_to_payload,
)

__version__ = "0.1.0"
