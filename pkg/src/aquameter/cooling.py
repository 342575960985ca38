"""On-site water consumption: the cooling-tower water-intensity model.

A data center's evaporative cooling tower consumes water two ways: spray
evaporation while cooling the return loop, and blow-down flushes that keep
dissolved solids in check. Both are captured by a single water-usage
effectiveness figure (litres per kWh of server energy):

    WUE_on(T) = S/(S-1) * (6e-5*T^3 - 0.01*T^2 + 0.61*T - 10.40)

where T is the outside wet-bulb temperature in degrees F and S the tower's
cycles of concentration (S > 1; the blow-down share scales with S/(S-1)).
The cubic is F-calibrated. It crosses zero a little above 27 F; below that
the tower is modeled as consuming no water (free cooling), so the value is
clamped to zero and a diagnostic is recorded. The clamp tests the cubic's
sign directly rather than hardcoding the root.

On-site water for a workload is the energy-weighted sum of WUE_on over the
workload's trace intervals, with the wet-bulb source sampled once per
interval at the interval's start.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from datetime import datetime

from .energy import Basis, EnergyTrace
from .quantities import TemperatureF, ValidationError, Water, Wue

# Cubic fit of evaporative loss per kWh against wet-bulb temperature (F).
_CUBIC = 6e-5
_QUAD = -0.01
_LIN = 0.61
_CONST = -10.40


def evaporative_rate(t_fahrenheit: float) -> float:
    """Raw cubic: litres per kWh before the cycles-of-concentration factor.

    May be negative for cold wet-bulb temperatures; callers clamp.
    """
    t = t_fahrenheit
    return _CUBIC * t**3 + _QUAD * t**2 + _LIN * t + _CONST


@dataclass(frozen=True, slots=True)
class CoolingTower:
    """Cooling tower described by its cycles of concentration S.

    S counts how many times circulating water is concentrated before
    blow-down; better feed-water quality allows higher S and less flushing.
    The model divides by S-1, so S must exceed 1.
    """

    cycles_of_concentration: float
    label: str = ""

    def validate(self, path: str = "cooling_tower") -> "CoolingTower":
        s = self.cycles_of_concentration
        if not isinstance(s, (int, float)) or isinstance(s, bool) or not math.isfinite(s):
            raise ValidationError(
                f"cycles of concentration must be a finite number, got {s!r}",
                f"{path}.cycles_of_concentration",
            )
        if s <= 1:
            raise ValidationError(
                f"cycles of concentration must exceed 1, got {s}",
                f"{path}.cycles_of_concentration",
            )
        return self


@dataclass
class Diagnostics:
    """Collects non-fatal warnings raised while evaluating a model."""

    warnings: list[str] = field(default_factory=list)
    clamped: bool = False

    def warn(self, message: str) -> None:
        if message not in self.warnings:
            self.warnings.append(message)

    def merge(self, other: "Diagnostics") -> None:
        for w in other.warnings:
            self.warn(w)
        self.clamped = self.clamped or other.clamped


@dataclass(frozen=True, slots=True)
class WetBulbSource:
    """Wet-bulb temperature as a function of time.

    Exactly one representation is set: a constant, 12 monthly means
    (sampled by each interval's calendar month), or an explicit per-interval
    schedule (sampled by interval index).
    """

    constant: TemperatureF | None = None
    monthly: tuple[TemperatureF, ...] | None = None
    schedule: tuple[tuple[int, TemperatureF], ...] | None = None

    def __post_init__(self):
        forms = [f for f in (self.constant, self.monthly, self.schedule) if f is not None]
        if len(forms) != 1:
            raise ValidationError(
                "exactly one of constant/monthly/schedule must be set", "wet_bulb"
            )
        if self.monthly is not None and len(self.monthly) != 12:
            raise ValidationError(
                f"expected 12 monthly temperatures, got {len(self.monthly)}",
                "wet_bulb.monthly",
            )

    @classmethod
    def constant_f(cls, t_fahrenheit: float) -> "WetBulbSource":
        return cls(constant=TemperatureF(t_fahrenheit))

    @classmethod
    def from_monthly(cls, temps_fahrenheit) -> "WetBulbSource":
        return cls(monthly=tuple(
            t if isinstance(t, TemperatureF) else TemperatureF(t) for t in temps_fahrenheit
        ))

    @classmethod
    def from_schedule(cls, entries) -> "WetBulbSource":
        return cls(schedule=tuple(
            (int(i), t if isinstance(t, TemperatureF) else TemperatureF(t))
            for i, t in entries
        ))

    def temperature_for(self, interval_index: int, start: datetime) -> TemperatureF:
        """Resolve the wet-bulb temperature for one trace interval."""
        if self.constant is not None:
            return self.constant
        if self.monthly is not None:
            return self.monthly[start.month - 1]
        assert self.schedule is not None
        for idx, temp in self.schedule:
            if idx == interval_index:
                return temp
        raise ValidationError(
            f"schedule has no temperature for interval {interval_index} "
            f"(starting {start.isoformat()})",
            "wet_bulb.schedule",
        )


def wue_on(
    t_w: TemperatureF,
    tower: CoolingTower,
    diagnostics: Diagnostics | None = None,
) -> Wue:
    """On-site water usage effectiveness for one wet-bulb reading.

    Clamps to zero when the cubic goes negative (very cold wet-bulb means
    free cooling, no evaporative loss) and flags the clamp on
    ``diagnostics`` when one is supplied.
    """
    tower.validate()
    s = tower.cycles_of_concentration
    rate = (s / (s - 1.0)) * evaporative_rate(t_w.value)
    if rate < 0:
        if diagnostics is not None:
            diagnostics.clamped = True
            label = f" (tower {tower.label})" if tower.label else ""
            diagnostics.warn(
                f"wet-bulb {t_w.value:g} F is below the evaporative range{label}; "
                "on-site water intensity clamped to 0 L/kWh"
            )
        return Wue(0.0)
    return Wue(rate)


def on_site_water(
    trace: EnergyTrace,
    tower: CoolingTower,
    wet_bulb: WetBulbSource,
    diagnostics: Diagnostics | None = None,
) -> Water:
    """Cooling-tower water consumed by a server-basis energy trace.

    Sums e(t) * WUE_on(T_w(t)) over the trace's intervals. The trace must be
    server-basis energy; facility totals have to be normalized first so the
    cooling load is not double-counted through the facility overhead factor.
    """
    if trace.basis is not Basis.SERVER:
        raise ValidationError(
            "on-site water requires a server-basis trace; "
            "divide facility energy by PUE first",
            "trace.basis",
        )
    total = 0.0
    for index, interval in enumerate(trace.intervals):
        t_w = wet_bulb.temperature_for(index, interval.start)
        total += interval.energy.value * wue_on(t_w, tower, diagnostics).value
    return Water(total)
