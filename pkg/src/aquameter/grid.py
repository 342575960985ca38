"""Off-site water consumption and carbon emissions from the electricity grid.

Power plants consume water too: cooling a thermal station or driving a
hydroelectric one. Each fuel type carries an energy water intensity factor
(EWIF, litres per kWh generated; typical figures are 1.7 for coal and 2.3
for nuclear, while solar is essentially zero). A grid's combined off-site
water usage effectiveness is the generation-share-weighted mean:

    WUE_off = sum_k(b_k * EWIF_k) / sum_k(b_k)

Off-site water for a workload re-applies the data center's PUE, because the
power plant supplies the whole facility, not just the servers:

    W_off = sum_t e(t) * PUE(t) * WUE_off(t)

Researchers rarely know b_k at fine time resolution, so constant yearly
figures are the default; per-interval overrides are accepted for the cases
where finer data exists. Emissions use the same facility energy times a
grid carbon-intensity factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .cooling import CoolingTower, WetBulbSource
from .energy import Basis, EnergyTrace
from .quantities import (
    CarbonIntensity,
    Emissions,
    Energy,
    ValidationError,
    ValidationIssue,
    Water,
    Wue,
)


@dataclass(frozen=True, slots=True)
class FuelShare:
    """One fuel's share of generation and its water intensity."""

    fuel: str
    share: float
    ewif: Wue


@dataclass(frozen=True, slots=True)
class FuelMix:
    """Generation mix; shares are relative weights, not forced to sum to 1."""

    entries: tuple[FuelShare, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    def validate(self, path: str = "fuel_mix") -> "FuelMix":
        issues: list[ValidationIssue] = []
        if not self.entries:
            issues.append(ValidationIssue(path, "fuel mix requires at least one entry"))
        total = 0.0
        for i, entry in enumerate(self.entries):
            s = entry.share
            if isinstance(s, bool) or not isinstance(s, (int, float)) or not math.isfinite(s) or s < 0:
                issues.append(ValidationIssue(
                    f"{path}[{i}].share", f"share must be a finite number >= 0, got {s!r}"
                ))
            else:
                total += s
        if self.entries and not total > 0:
            issues.append(ValidationIssue(path, "fuel shares must sum to more than 0"))
        if issues:
            raise ValidationError(issues)
        return self


def wue_off(mix: FuelMix) -> Wue:
    """Share-weighted mean EWIF of the mix, in L/kWh."""
    mix.validate()
    total_share = sum(e.share for e in mix.entries)
    weighted = sum(e.share * e.ewif.value for e in mix.entries)
    return Wue(weighted / total_share)


@dataclass(frozen=True, slots=True)
class GridProfile:
    """Electricity supply context: water intensity plus carbon intensity.

    Water intensity is given either as an explicit fuel mix or directly as
    a combined WUE_off figure (the usual form in supplier reporting);
    exactly one of the two is set.
    """

    carbon_intensity: CarbonIntensity
    mix: FuelMix | None = None
    direct_wue_off: Wue | None = None

    @classmethod
    def from_wue_off(cls, wue_l_per_kwh: float, ci_kg_per_kwh: float) -> "GridProfile":
        return cls(
            carbon_intensity=CarbonIntensity(ci_kg_per_kwh),
            direct_wue_off=Wue(wue_l_per_kwh),
        )

    @classmethod
    def from_mix(cls, mix: FuelMix, ci_kg_per_kwh: float) -> "GridProfile":
        return cls(carbon_intensity=CarbonIntensity(ci_kg_per_kwh), mix=mix)

    def validate(self, path: str = "grid") -> "GridProfile":
        if (self.mix is None) == (self.direct_wue_off is None):
            raise ValidationError(
                "exactly one of fuel_mix/wue_off must be set", path
            )
        if self.mix is not None:
            self.mix.validate(f"{path}.fuel_mix")
        return self

    @property
    def wue_off(self) -> Wue:
        self.validate()
        if self.direct_wue_off is not None:
            return self.direct_wue_off
        return wue_off(self.mix)


@dataclass(frozen=True, slots=True)
class DataCenter:
    """Facility context: PUE plus the cooling tower and its climate."""

    pue: float
    tower: CoolingTower
    wet_bulb: WetBulbSource

    def validate(self, path: str = "dc") -> "DataCenter":
        issues: list[ValidationIssue] = []
        p = self.pue
        if isinstance(p, bool) or not isinstance(p, (int, float)) or not math.isfinite(p):
            issues.append(ValidationIssue(f"{path}.pue", f"PUE must be a finite number, got {p!r}"))
        elif p < 1:
            issues.append(ValidationIssue(
                f"{path}.pue", f"PUE must be >= 1 (facility energy cannot be less than server energy), got {p}"
            ))
        try:
            self.tower.validate(f"{path}.cooling_tower")
        except ValidationError as err:
            issues.extend(err.issues)
        if issues:
            raise ValidationError(issues)
        return self


def off_site_water(
    trace: EnergyTrace,
    dc: DataCenter,
    grid: GridProfile,
    interval_overrides: Mapping[int, GridProfile] | None = None,
) -> Water:
    """Generation-side water consumed by a server-basis energy trace.

    ``interval_overrides`` swaps in a different grid profile for specific
    interval indices, for workloads with known supply variation; everything
    else uses the constant profile.
    """
    if trace.basis is not Basis.SERVER:
        raise ValidationError(
            "off-site water requires a server-basis trace; "
            "divide facility energy by PUE first",
            "trace.basis",
        )
    dc.validate()
    grid.validate()
    total = 0.0
    for index, interval in enumerate(trace.intervals):
        profile = grid
        if interval_overrides and index in interval_overrides:
            profile = interval_overrides[index].validate(f"grid_overrides[{index}]")
        total += interval.energy.value * dc.pue * profile.wue_off.value
    return Water(total)


def emissions(facility_energy: Energy, ci: CarbonIntensity) -> Emissions:
    """Carbon emissions for a facility-basis energy total."""
    return Emissions(facility_energy.value * ci.value)
