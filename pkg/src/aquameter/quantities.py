"""Dimension-tagged scalar quantities and the shared validation machinery.

Five dimensions are modeled: energy (kWh), water (L), emissions (kgCO2e),
temperature (degrees Fahrenheit) and water-usage-effectiveness (L/kWh),
plus grid carbon intensity (kgCO2e/kWh). Quantities are immutable plain
finite reals; NaN and infinities are rejected at construction, as are
negative values for the non-negative dimensions. Cross-dimension addition
is a TypeError.

Temperatures are stored in Fahrenheit throughout: the cooling-tower water
intensity curve is calibrated in degrees F, and applying it to a Celsius
value silently produces garbage. Celsius appears only at input boundaries
via :func:`fahrenheit_from_celsius`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True, slots=True)
class ValidationIssue:
    """A single violated bound: where it happened and what was expected."""

    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.field}: {self.message}" if self.field else self.message


class ValidationError(ValueError):
    """One or more violated invariants, collected rather than first-only."""

    def __init__(self, issues: Iterable[ValidationIssue] | str, field: str = ""):
        if isinstance(issues, str):
            issues = [ValidationIssue(field, issues)]
        self.issues: tuple[ValidationIssue, ...] = tuple(issues)
        super().__init__("; ".join(str(i) for i in self.issues))

    def prefixed(self, prefix: str) -> "ValidationError":
        """Re-raise helper: prepend a path segment to every issue's field."""
        return ValidationError(
            ValidationIssue(f"{prefix}.{i.field}" if i.field else prefix, i.message)
            for i in self.issues
        )


def _require_finite(value: float, field: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValidationError(f"must be a real number, got {value!r}", field)
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"must be finite, got {value!r}", field)
    return value


class _Scalar:
    """Shared arithmetic for single-dimension quantities.

    Same-type addition and non-negative scalar multiplication only; anything
    else is a TypeError so dimension mistakes fail fast.
    """

    __slots__ = ()
    value: float

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self.value + other.value)

    def __radd__(self, other):
        if other == 0:  # lets sum() start from 0
            return self
        return NotImplemented

    def __mul__(self, factor):
        if isinstance(factor, bool) or not isinstance(factor, (int, float)):
            return NotImplemented
        if factor < 0:
            raise ValidationError(
                f"scale factor must be non-negative, got {factor!r}",
                type(self).__name__.lower(),
            )
        return type(self)(self.value * float(factor))

    __rmul__ = __mul__


@dataclass(frozen=True, slots=True)
class Energy(_Scalar):
    """Electrical energy in kWh; non-negative."""

    value: float

    def __post_init__(self):
        v = _require_finite(self.value, "energy")
        if v < 0:
            raise ValidationError(f"energy must be >= 0 kWh, got {v}", "energy")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True, slots=True)
class Water(_Scalar):
    """Water volume in litres; non-negative."""

    value: float

    def __post_init__(self):
        v = _require_finite(self.value, "water")
        if v < 0:
            raise ValidationError(f"water must be >= 0 L, got {v}", "water")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True, slots=True)
class Emissions(_Scalar):
    """Greenhouse-gas emissions in kgCO2e; non-negative."""

    value: float

    def __post_init__(self):
        v = _require_finite(self.value, "emissions")
        if v < 0:
            raise ValidationError(f"emissions must be >= 0 kgCO2e, got {v}", "emissions")
        object.__setattr__(self, "value", v)


# Sanity bounds for terrestrial wet-bulb readings.
TEMPERATURE_F_MIN = -60.0
TEMPERATURE_F_MAX = 150.0


@dataclass(frozen=True, slots=True)
class TemperatureF(_Scalar):
    """Wet-bulb temperature in degrees Fahrenheit, within [-60, 150]."""

    value: float

    def __post_init__(self):
        v = _require_finite(self.value, "temperature_f")
        if not TEMPERATURE_F_MIN <= v <= TEMPERATURE_F_MAX:
            raise ValidationError(
                f"temperature must be within [{TEMPERATURE_F_MIN:g}, "
                f"{TEMPERATURE_F_MAX:g}] F, got {v}",
                "temperature_f",
            )
        object.__setattr__(self, "value", v)


@dataclass(frozen=True, slots=True)
class Wue(_Scalar):
    """Water usage effectiveness in litres per kWh; non-negative."""

    value: float

    def __post_init__(self):
        v = _require_finite(self.value, "wue")
        if v < 0:
            raise ValidationError(f"WUE must be >= 0 L/kWh, got {v}", "wue")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True, slots=True)
class CarbonIntensity(_Scalar):
    """Grid carbon intensity in kgCO2e per kWh; non-negative."""

    value: float

    def __post_init__(self):
        v = _require_finite(self.value, "carbon_intensity")
        if v < 0:
            raise ValidationError(
                f"carbon intensity must be >= 0 kgCO2e/kWh, got {v}", "carbon_intensity"
            )
        object.__setattr__(self, "value", v)


CELSIUS_MIN = -51.0
CELSIUS_MAX = 66.0


def fahrenheit_from_celsius(t_celsius: float) -> TemperatureF:
    """Convert a Celsius reading to the internal Fahrenheit representation.

    Accepts [-51, 66] degrees C; out-of-range input raises a ValidationError
    naming the violated bound.
    """
    t = _require_finite(t_celsius, "temperature_c")
    if not CELSIUS_MIN <= t <= CELSIUS_MAX:
        raise ValidationError(
            f"temperature must be within [{CELSIUS_MIN:g}, {CELSIUS_MAX:g}] C, got {t}",
            "temperature_c",
        )
    return TemperatureF(t * 9.0 / 5.0 + 32.0)


def celsius_from_fahrenheit(t: TemperatureF) -> float:
    """Inverse of :func:`fahrenheit_from_celsius`."""
    return (t.value - 32.0) * 5.0 / 9.0


def collect_issues(errors: Sequence[ValidationError]) -> ValidationError:
    """Merge several ValidationErrors into one carrying every issue."""
    issues: list[ValidationIssue] = []
    for err in errors:
        issues.extend(err.issues)
    return ValidationError(issues)
