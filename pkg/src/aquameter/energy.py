"""Workload energy data: timestamped traces and aggregate stage records.

Energy shows up in two shapes. Instrumented runs produce a *trace*: ordered,
non-overlapping intervals each carrying the energy used during that slice.
Published experiment tables produce aggregate *stage records* (one total per
pipeline stage); those are first-class here, not a degenerate trace file,
because most available data is aggregate-only.

Every trace and stage carries an explicit measurement *basis*:

  - ``server``: energy metered at the compute hardware (CPU/GPU/memory);
  - ``facility``: the same multiplied by the data center's PUE, i.e. what
    the building drew to sustain the run.

On-site cooling water is driven by server-basis energy; off-site generation
water re-applies PUE. Carrying the basis on the data makes the single most
error-prone convention in footprint accounting unforgeable: conversions
happen through :func:`to_server_basis`, never by silent assumption.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from enum import Enum
from pathlib import Path

from .quantities import Energy, ValidationError

# Synthetic start for traces collapsed from aggregate stage records.
STAGE_EPOCH = datetime(2022, 1, 1, tzinfo=timezone.utc)

TRACE_HEADER = ["start_iso8601", "duration_s", "energy_kwh", "avg_watts", "basis"]


class Basis(str, Enum):
    SERVER = "server"
    FACILITY = "facility"

    @classmethod
    def parse(cls, raw: str, field: str = "basis") -> "Basis":
        try:
            return cls(raw)
        except ValueError:
            raise ValidationError(
                f"unknown basis {raw!r}; expected 'server' or 'facility'", field
            ) from None


@dataclass(frozen=True, slots=True)
class Interval:
    """One trace slice: start time, length in seconds, energy used."""

    start: datetime
    duration_s: float
    energy: Energy

    def __post_init__(self):
        if not isinstance(self.start, datetime):
            raise ValidationError(f"start must be a datetime, got {self.start!r}", "interval.start")
        d = self.duration_s
        if isinstance(d, bool) or not isinstance(d, (int, float)) or not math.isfinite(d) or d < 0:
            raise ValidationError(
                f"duration must be a finite number of seconds >= 0, got {d!r}",
                "interval.duration_s",
            )
        object.__setattr__(self, "duration_s", float(d))

    @property
    def end(self) -> datetime:
        return self.start + timedelta(seconds=self.duration_s)


@dataclass(frozen=True, slots=True)
class EnergyTrace:
    """Time-ordered, non-overlapping energy intervals on a single basis."""

    intervals: tuple[Interval, ...]
    basis: Basis

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(self.intervals))
        if not isinstance(self.basis, Basis):
            object.__setattr__(self, "basis", Basis.parse(self.basis))
        _check_ordering(self.intervals)

    @property
    def total_energy(self) -> Energy:
        return Energy(sum(i.energy.value for i in self.intervals))

    @property
    def total_duration_s(self) -> float:
        return sum(i.duration_s for i in self.intervals)


def _check_ordering(intervals: tuple[Interval, ...], lines: list[int] | None = None) -> None:
    def where(i: int) -> str:
        return f"line {lines[i]}" if lines else f"interval {i}"

    for i in range(1, len(intervals)):
        prev, cur = intervals[i - 1], intervals[i]
        try:
            overlaps = prev.end > cur.start
        except TypeError:
            raise ValidationError(
                "timestamps mix timezone-aware and naive datetimes", "trace"
            ) from None
        if overlaps:
            raise ValidationError(
                f"{where(i - 1)} (ending {prev.end.isoformat()}) overlaps "
                f"{where(i)} (starting {cur.start.isoformat()})",
                "trace",
            )


@dataclass(frozen=True, slots=True)
class StageRecord:
    """Aggregate record for one pipeline stage: total hours and total kWh."""

    name: str
    running_time_h: float
    power: Energy
    basis: Basis

    def __post_init__(self):
        rt = self.running_time_h
        if isinstance(rt, bool) or not isinstance(rt, (int, float)) or not math.isfinite(rt) or rt < 0:
            raise ValidationError(
                f"running time must be a finite number of hours >= 0, got {rt!r}",
                "stage.running_time_h",
            )
        object.__setattr__(self, "running_time_h", float(rt))
        if not isinstance(self.basis, Basis):
            object.__setattr__(self, "basis", Basis.parse(self.basis))


@dataclass(frozen=True, slots=True)
class Pipeline:
    """Named, ordered stages of one experiment (training, indexing, ...)."""

    label: str
    stages: tuple[StageRecord, ...]

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        if not self.stages:
            raise ValidationError("pipeline requires at least one stage", "pipeline.stages")
        seen: set[str] = set()
        for stage in self.stages:
            if stage.name in seen:
                raise ValidationError(
                    f"duplicate stage name {stage.name!r}", "pipeline.stages"
                )
            seen.add(stage.name)

    def stage(self, name: str) -> StageRecord:
        for s in self.stages:
            if s.name == name:
                return s
        raise ValidationError(f"pipeline has no stage named {name!r}", "pipeline.stages")

    @property
    def total_power(self) -> Energy:
        return Energy(sum(s.power.value for s in self.stages))


def trace_from_stage(stage: StageRecord, start: datetime = STAGE_EPOCH) -> EnergyTrace:
    """Collapse an aggregate stage record into a single-interval trace."""
    interval = Interval(start=start, duration_s=stage.running_time_h * 3600.0, energy=stage.power)
    return EnergyTrace(intervals=(interval,), basis=stage.basis)


def to_server_basis(trace: EnergyTrace, pue: float) -> EnergyTrace:
    """Normalize a trace to server-basis energy by dividing out PUE.

    Server-basis input is returned unchanged; the conversion is idempotent.
    """
    if trace.basis is Basis.SERVER:
        return trace
    if isinstance(pue, bool) or not isinstance(pue, (int, float)) or not math.isfinite(pue) or pue < 1:
        raise ValidationError(f"PUE must be >= 1, got {pue!r}", "pue")
    scaled = tuple(
        Interval(i.start, i.duration_s, Energy(i.energy.value / pue)) for i in trace.intervals
    )
    return EnergyTrace(intervals=scaled, basis=Basis.SERVER)


def _parse_start(raw: str, line: int) -> datetime:
    text = raw.strip()
    if text.endswith("Z"):
        text = text[:-1] + "+00:00"
    try:
        return datetime.fromisoformat(text)
    except ValueError:
        raise ValidationError(
            f"invalid ISO-8601 timestamp {raw!r}", f"line {line}"
        ) from None


def parse_trace(text: str) -> EnergyTrace:
    """Parse trace CSV content (see :data:`TRACE_HEADER` for the schema).

    Each row gives its energy either directly (``energy_kwh``) or as an
    average draw (``avg_watts``, converted as watts * duration_s / 3.6e6);
    exactly one of the two must be present. The basis column must be uniform
    across the file. Rows are ordered by start time and checked for overlap.
    Errors carry the 1-based line number of the offending row.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValidationError("trace contains no intervals", "trace") from None
    header = [h.strip() for h in header]
    if header != TRACE_HEADER:
        raise ValidationError(
            f"expected header {','.join(TRACE_HEADER)!r}, got {','.join(header)!r}",
            "line 1",
        )

    rows: list[tuple[datetime, Interval, int]] = []
    basis: Basis | None = None
    for line, row in enumerate(reader, start=2):
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(TRACE_HEADER):
            raise ValidationError(
                f"expected {len(TRACE_HEADER)} columns, got {len(row)}", f"line {line}"
            )
        start_raw, duration_raw, energy_raw, watts_raw, basis_raw = (c.strip() for c in row)
        start = _parse_start(start_raw, line)
        try:
            duration_s = float(duration_raw)
        except ValueError:
            raise ValidationError(
                f"invalid duration {duration_raw!r}", f"line {line}"
            ) from None
        if not math.isfinite(duration_s) or duration_s <= 0:
            raise ValidationError(
                f"duration must be a positive number of seconds, got {duration_raw}",
                f"line {line}",
            )

        if bool(energy_raw) == bool(watts_raw):
            raise ValidationError(
                "exactly one of energy_kwh/avg_watts must be set", f"line {line}"
            )
        try:
            if energy_raw:
                energy_kwh = float(energy_raw)
            else:
                energy_kwh = float(watts_raw) * duration_s / 3.6e6
        except ValueError:
            raise ValidationError(
                f"invalid energy value {energy_raw or watts_raw!r}", f"line {line}"
            ) from None
        try:
            energy = Energy(energy_kwh)
        except ValidationError as err:
            raise ValidationError(err.issues[0].message, f"line {line}") from None

        row_basis = Basis.parse(basis_raw, f"line {line}")
        if basis is None:
            basis = row_basis
        elif row_basis is not basis:
            raise ValidationError(
                f"basis must be uniform across the file; "
                f"{row_basis.value!r} conflicts with earlier {basis.value!r}",
                f"line {line}",
            )
        rows.append((start, Interval(start, duration_s, energy), line))

    if not rows:
        raise ValidationError("trace contains no intervals", "trace")
    rows.sort(key=lambda r: r[0])
    _check_ordering(tuple(r[1] for r in rows), lines=[r[2] for r in rows])
    return EnergyTrace(intervals=tuple(r[1] for r in rows), basis=basis)


def ingest_trace(path: str | Path) -> EnergyTrace:
    """Read and validate a trace CSV file."""
    return parse_trace(Path(path).read_text(encoding="utf-8"))


def serialize_trace(trace: EnergyTrace) -> str:
    """Canonical CSV form: energy_kwh populated, avg_watts empty.

    Ingesting the output reproduces the trace exactly, and serializing again
    reproduces the bytes (floats are written in shortest round-trip form).
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(TRACE_HEADER)
    for interval in trace.intervals:
        writer.writerow([
            interval.start.isoformat(),
            repr(interval.duration_s),
            repr(interval.energy.value),
            "",
            trace.basis.value,
        ])
    return out.getvalue()


def pipeline_from_payload(payload: object, path: str = "pipeline") -> Pipeline:
    """Build a Pipeline from its JSON document form."""
    if not isinstance(payload, dict):
        raise ValidationError(f"expected an object, got {type(payload).__name__}", path)
    label = payload.get("label")
    if not isinstance(label, str) or not label:
        raise ValidationError("label must be a non-empty string", f"{path}.label")
    stages_raw = payload.get("stages")
    if not isinstance(stages_raw, list) or not stages_raw:
        raise ValidationError("pipeline requires at least one stage", f"{path}.stages")
    stages = []
    for i, raw in enumerate(stages_raw):
        spath = f"{path}.stages[{i}]"
        if not isinstance(raw, dict):
            raise ValidationError(f"expected an object, got {type(raw).__name__}", spath)
        name = raw.get("name")
        if not isinstance(name, str) or not name:
            raise ValidationError("name must be a non-empty string", f"{spath}.name")
        try:
            stages.append(
                StageRecord(
                    name=name,
                    running_time_h=raw.get("running_time_h", 0.0),
                    power=Energy(raw.get("power_kwh", 0.0)),
                    basis=Basis.parse(raw.get("basis", "facility"), f"{spath}.basis"),
                )
            )
        except ValidationError as err:
            raise err.prefixed(spath) from None
    try:
        return Pipeline(label=label, stages=tuple(stages))
    except ValidationError as err:
        raise err.prefixed(path) from None


def pipeline_to_payload(pipeline: Pipeline) -> dict:
    return {
        "label": pipeline.label,
        "stages": [
            {
                "name": s.name,
                "running_time_h": s.running_time_h,
                "power_kwh": s.power.value,
                "basis": s.basis.value,
            }
            for s in pipeline.stages
        ],
    }


def load_pipeline(path: str | Path) -> Pipeline:
    """Read a pipeline JSON document from disk."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise ValidationError(f"invalid JSON: {err}", str(path)) from None
    return pipeline_from_payload(payload)
