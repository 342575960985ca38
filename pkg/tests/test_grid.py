from datetime import datetime, timezone

import pytest

from aquameter.cooling import CoolingTower, WetBulbSource
from aquameter.energy import Basis, EnergyTrace, Interval
from aquameter.grid import (
    DataCenter,
    FuelMix,
    FuelShare,
    GridProfile,
    emissions,
    off_site_water,
    wue_off,
)
from aquameter.quantities import CarbonIntensity, Energy, ValidationError, Wue


def mix(*entries):
    return FuelMix(tuple(FuelShare(fuel, share, Wue(ewif)) for fuel, share, ewif in entries))


def server_trace(energy_kwh):
    start = datetime(2022, 1, 1, tzinfo=timezone.utc)
    return EnergyTrace(intervals=(Interval(start, 3600.0, Energy(energy_kwh)),), basis=Basis.SERVER)


DC = DataCenter(pue=1.89, tower=CoolingTower(2.25, "A"), wet_bulb=WetBulbSource.constant_f(65.3))


class TestWueOff:
    def test_pure_coal(self):
        assert wue_off(mix(("coal", 1.0, 1.7))).value == pytest.approx(1.7)

    def test_equal_split_is_mean(self):
        assert wue_off(mix(("coal", 0.5, 1.7), ("nuclear", 0.5, 2.3))).value == pytest.approx(2.0)

    def test_pure_solar_is_zero(self):
        assert wue_off(mix(("solar", 1.0, 0.0))).value == 0.0

    def test_share_scale_invariance(self):
        a = wue_off(mix(("coal", 0.3, 1.7), ("nuclear", 0.7, 2.3)))
        b = wue_off(mix(("coal", 30, 1.7), ("nuclear", 70, 2.3)))
        assert a.value == pytest.approx(b.value, rel=1e-12)

    def test_convex_combination_bounds(self):
        value = wue_off(mix(("coal", 0.4, 1.7), ("nuclear", 0.5, 2.3), ("solar", 0.1, 0.0))).value
        assert 0.0 <= value <= 2.3

    def test_all_zero_shares_rejected(self):
        with pytest.raises(ValidationError, match="sum to more than 0"):
            wue_off(mix(("coal", 0.0, 1.7), ("solar", 0.0, 0.0)))

    def test_empty_mix_rejected(self):
        with pytest.raises(ValidationError, match="at least one"):
            wue_off(FuelMix(()))


class TestGridProfile:
    def test_exactly_one_form(self):
        with pytest.raises(ValidationError, match="exactly one"):
            GridProfile(carbon_intensity=CarbonIntensity(0.766)).validate()
        with pytest.raises(ValidationError, match="exactly one"):
            GridProfile(
                carbon_intensity=CarbonIntensity(0.766),
                mix=mix(("coal", 1.0, 1.7)),
                direct_wue_off=Wue(1.8),
            ).validate()

    def test_wue_off_resolves_either_form(self):
        direct = GridProfile.from_wue_off(1.8, 0.766)
        mixed = GridProfile.from_mix(mix(("coal", 0.5, 1.7), ("nuclear", 0.5, 2.3)), 0.766)
        assert direct.wue_off.value == 1.8
        assert mixed.wue_off.value == pytest.approx(2.0)


class TestOffSiteWater:
    def test_reference_workload(self):
        water = off_site_water(server_trace(95.6138), DC, GridProfile.from_wue_off(1.8, 0.766))
        assert water.value == pytest.approx(325.278, abs=1e-3)

    def test_small_workload(self):
        water = off_site_water(server_trace(0.0011111), DC, GridProfile.from_wue_off(1.8, 0.766))
        assert water.value == pytest.approx(0.00378, abs=1e-5)

    def test_zero_water_grid(self):
        dc = DataCenter(pue=1.0, tower=CoolingTower(2.25), wet_bulb=WetBulbSource.constant_f(65.3))
        assert off_site_water(server_trace(10.0), dc, GridProfile.from_wue_off(0.0, 0.766)).value == 0.0

    def test_requires_server_basis(self):
        start = datetime(2022, 1, 1, tzinfo=timezone.utc)
        facility = EnergyTrace(
            intervals=(Interval(start, 3600.0, Energy(10.0)),), basis=Basis.FACILITY
        )
        with pytest.raises(ValidationError, match="server-basis"):
            off_site_water(facility, DC, GridProfile.from_wue_off(1.8, 0.766))

    def test_independent_of_wet_bulb_and_cycles(self):
        grid = GridProfile.from_wue_off(1.8, 0.766)
        trace = server_trace(5.0)
        base = off_site_water(trace, DC, grid).value
        other_dc = DataCenter(
            pue=1.89, tower=CoolingTower(1.1, "B"), wet_bulb=WetBulbSource.constant_f(20.0)
        )
        assert off_site_water(trace, other_dc, grid).value == base

    def test_per_interval_override(self):
        start = datetime(2022, 1, 1, tzinfo=timezone.utc)
        trace = EnergyTrace(
            intervals=(
                Interval(start, 900.0, Energy(1.0)),
                Interval(datetime(2022, 1, 1, 0, 15, tzinfo=timezone.utc), 900.0, Energy(1.0)),
            ),
            basis=Basis.SERVER,
        )
        base = GridProfile.from_wue_off(1.8, 0.766)
        solar = GridProfile.from_wue_off(0.0, 0.0)
        water = off_site_water(trace, DC, base, interval_overrides={1: solar})
        assert water.value == pytest.approx(1.0 * 1.89 * 1.8, rel=1e-12)


class TestEmissions:
    def test_fitted_intensity_reproduces_reference_row(self):
        value = emissions(Energy(57.95), CarbonIntensity(0.7658)).value
        assert round(value, 2) == 44.38

    def test_zero_energy(self):
        assert emissions(Energy(0.0), CarbonIntensity(123.0)).value == 0.0

    def test_identity_intensity(self):
        assert emissions(Energy(1.0), CarbonIntensity(1.0)).value == 1.0

    def test_linear_in_energy(self):
        ci = CarbonIntensity(0.766)
        assert emissions(Energy(14.0), ci).value == pytest.approx(
            2 * emissions(Energy(7.0), ci).value, rel=1e-12
        )
