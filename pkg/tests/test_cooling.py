from datetime import datetime, timezone

import pytest

from aquameter.cooling import (
    CoolingTower,
    Diagnostics,
    WetBulbSource,
    evaporative_rate,
    on_site_water,
    wue_on,
)
from aquameter.energy import Basis, EnergyTrace, Interval
from aquameter.quantities import Energy, TemperatureF, ValidationError

TOWER_A = CoolingTower(cycles_of_concentration=2.25, label="A")


def single_interval_trace(energy_kwh, basis=Basis.SERVER, month=1):
    start = datetime(2022, month, 15, 9, tzinfo=timezone.utc)
    return EnergyTrace(intervals=(Interval(start, 3600.0, Energy(energy_kwh)),), basis=basis)


class TestWueOn:
    # Expected values frozen from an independent exact-decimal evaluation
    # of the cubic and the S/(S-1) factor.
    def test_brisbane_afternoon_mean(self):
        assert wue_on(TemperatureF(65.3), TOWER_A).value == pytest.approx(6.297848316, abs=1e-9)

    def test_july_morning_mean(self):
        assert wue_on(TemperatureF(53.6), TOWER_A).value == pytest.approx(5.050510848, abs=1e-9)

    def test_july_afternoon_mean(self):
        assert wue_on(TemperatureF(57.02), TOWER_A).value == pytest.approx(5.386817708064, abs=1e-9)

    def test_cold_clamps_to_zero_with_flag(self):
        diag = Diagnostics()
        assert wue_on(TemperatureF(20), TOWER_A, diag).value == 0.0
        assert diag.clamped
        assert any("clamped" in w for w in diag.warnings)
        # the raw cubic is negative there
        assert evaporative_rate(20) == pytest.approx(-1.72, abs=1e-9)

    def test_no_flag_above_root(self):
        diag = Diagnostics()
        wue_on(TemperatureF(65.3), TOWER_A, diag)
        assert not diag.clamped
        assert diag.warnings == []

    def test_large_s_limit(self):
        huge = CoolingTower(cycles_of_concentration=1e9)
        assert wue_on(TemperatureF(65.3), huge).value == pytest.approx(3.4988, abs=1e-4)

    def test_invalid_tower_rejected(self):
        with pytest.raises(ValidationError, match="exceed 1"):
            wue_on(TemperatureF(65.3), CoolingTower(cycles_of_concentration=1.0))

    def test_never_negative(self):
        for t in range(-60, 151, 3):
            assert wue_on(TemperatureF(t), TOWER_A).value >= 0.0

    def test_strictly_increasing_in_temperature_above_root(self):
        temps = [28 + 0.5 * i for i in range(200)]
        values = [wue_on(TemperatureF(t), TOWER_A).value for t in temps]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_strictly_decreasing_in_cycles(self):
        cycles = [1.01, 1.33, 1.5, 2.0, 2.25, 3.0, 10.0, 100.0]
        values = [
            wue_on(TemperatureF(65.3), CoolingTower(cycles_of_concentration=s)).value
            for s in cycles
        ]
        assert all(a > b for a, b in zip(values, values[1:]))


class TestWetBulbSource:
    def test_exactly_one_form(self):
        with pytest.raises(ValidationError):
            WetBulbSource()
        with pytest.raises(ValidationError):
            WetBulbSource(
                constant=TemperatureF(65.3),
                monthly=tuple(TemperatureF(60) for _ in range(12)),
            )

    def test_monthly_requires_twelve(self):
        with pytest.raises(ValidationError, match="12"):
            WetBulbSource.from_monthly([60.0] * 11)

    def test_monthly_sampled_by_calendar_month(self):
        temps = [40.0 + i for i in range(12)]
        source = WetBulbSource.from_monthly(temps)
        july = datetime(2022, 7, 1, tzinfo=timezone.utc)
        assert source.temperature_for(0, july).value == 46.0

    def test_schedule_gap_names_interval(self):
        source = WetBulbSource.from_schedule([(0, 65.3)])
        start = datetime(2022, 1, 1, tzinfo=timezone.utc)
        with pytest.raises(ValidationError, match="interval 1"):
            source.temperature_for(1, start)


class TestOnSiteWater:
    def test_published_water_quality_anchor(self):
        # 180.71 facility kWh at PUE 1.89 on tower A, constant 65.3 F
        trace = single_interval_trace(180.71 / 1.89)
        water = on_site_water(trace, TOWER_A, WetBulbSource.constant_f(65.3))
        assert water.value == pytest.approx(602.1609, abs=0.01)

    def test_morning_and_afternoon_anchors(self):
        trace = single_interval_trace(95.6138)
        morning = on_site_water(trace, TOWER_A, WetBulbSource.constant_f(53.6))
        afternoon = on_site_water(trace, TOWER_A, WetBulbSource.constant_f(57.02))
        assert morning.value == pytest.approx(482.90, abs=0.1)
        assert afternoon.value == pytest.approx(515.1, abs=0.1)

    def test_intermediate_cycle_value_follows_model(self):
        # Tower B (S=1.33) water for the same workload, straight from the
        # model: S/(S-1) * cubic(65.3) * 95.6137566 kWh.
        trace = single_interval_trace(180.71 / 1.89)
        water = on_site_water(
            trace, CoolingTower(cycles_of_concentration=1.33, label="B"),
            WetBulbSource.constant_f(65.3),
        )
        expected = (1.33 / 0.33) * evaporative_rate(65.3) * (180.71 / 1.89)
        assert water.value == pytest.approx(expected, rel=1e-12)

    def test_zero_energy_zero_water(self):
        trace = single_interval_trace(0.0)
        assert on_site_water(trace, TOWER_A, WetBulbSource.constant_f(65.3)).value == 0.0

    def test_rejects_facility_basis(self):
        trace = single_interval_trace(10.0, basis=Basis.FACILITY)
        with pytest.raises(ValidationError, match="server-basis"):
            on_site_water(trace, TOWER_A, WetBulbSource.constant_f(65.3))

    def test_additive_over_concatenation_and_linear_in_energy(self):
        start = datetime(2022, 1, 1, tzinfo=timezone.utc)
        source = WetBulbSource.constant_f(65.3)
        one = EnergyTrace(
            intervals=(Interval(start, 900.0, Energy(2.0)),), basis=Basis.SERVER
        )
        two = EnergyTrace(
            intervals=(
                Interval(start, 900.0, Energy(2.0)),
                Interval(datetime(2022, 1, 1, 0, 15, tzinfo=timezone.utc), 900.0, Energy(3.0)),
            ),
            basis=Basis.SERVER,
        )
        w1 = on_site_water(one, TOWER_A, source).value
        w2 = on_site_water(two, TOWER_A, source).value
        assert w2 == pytest.approx(w1 * 2.5, rel=1e-12)

    def test_schedule_must_cover_every_interval(self):
        start = datetime(2022, 1, 1, tzinfo=timezone.utc)
        trace = EnergyTrace(
            intervals=(
                Interval(start, 900.0, Energy(1.0)),
                Interval(datetime(2022, 1, 1, 0, 15, tzinfo=timezone.utc), 900.0, Energy(1.0)),
            ),
            basis=Basis.SERVER,
        )
        source = WetBulbSource.from_schedule([(0, 65.3)])
        with pytest.raises(ValidationError, match="interval 1"):
            on_site_water(trace, TOWER_A, source)

    def test_per_interval_schedule_weighting(self):
        start = datetime(2022, 1, 1, tzinfo=timezone.utc)
        trace = EnergyTrace(
            intervals=(
                Interval(start, 900.0, Energy(1.0)),
                Interval(datetime(2022, 1, 1, 0, 15, tzinfo=timezone.utc), 900.0, Energy(2.0)),
            ),
            basis=Basis.SERVER,
        )
        source = WetBulbSource.from_schedule([(0, 53.6), (1, 65.3)])
        water = on_site_water(trace, TOWER_A, source)
        expected = 1.0 * 5.050510848 + 2.0 * 6.297848316
        assert water.value == pytest.approx(expected, abs=1e-9)
