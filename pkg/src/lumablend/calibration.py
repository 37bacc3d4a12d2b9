"""Storage and aggregation of human calibration outcomes.

Sessions are JSON Lines: a header line {"schema": 1} followed by one record
per line.  The format is append-only and trivially mergeable, which is what a
crowd-sourced collection needs.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

import numpy as np

from .opacity import (
    AffineOpacity,
    OpacityModel,
    PowerOpacity,
    model_from_dict,
    model_to_dict,
    opacity,
    validate_model,
)

SCHEMA_VERSION = 1
_CURVE_GRID = np.linspace(0.0, 1.0, 101)


@dataclass(frozen=True)
class CalibrationRecord:
    subject_tag: str
    model: OpacityModel
    s: float
    l_p: float
    background: str
    timestamp: float  # UTC seconds
    ui_version: str = ""
    group_tags: tuple[str, ...] = ()


def validate_record(record: CalibrationRecord) -> list[str]:
    """Invariant findings for one record; empty means valid."""
    findings = validate_model(record.model)
    if not 0.0 < record.s <= 1.0:
        findings.append(f"s={record.s} outside (0, 1]")
    if not 0.0 <= record.l_p <= 1.0:
        findings.append(f"l_p={record.l_p} outside [0, 1]")
    return findings


def record_to_dict(record: CalibrationRecord) -> dict:
    return {
        "subject_tag": record.subject_tag,
        "group_tags": list(record.group_tags),
        "model": model_to_dict(record.model),
        "s": record.s,
        "l_p": record.l_p,
        "background": record.background,
        "timestamp": record.timestamp,
        "ui_version": record.ui_version,
    }


def record_from_dict(data: dict) -> CalibrationRecord:
    return CalibrationRecord(
        subject_tag=str(data["subject_tag"]),
        group_tags=tuple(str(t) for t in data.get("group_tags", [])),
        model=model_from_dict(data["model"]),
        s=float(data["s"]),
        l_p=float(data["l_p"]),
        background=str(data.get("background", "")),
        timestamp=float(data["timestamp"]),
        ui_version=str(data.get("ui_version", "")),
    )


class SessionStore:
    """Append-only JSONL store keyed by (subject_tag, timestamp)."""

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)
        self._keys: set[tuple[str, float]] = set()
        if os.path.exists(self.path):
            for record in self.load():
                self._keys.add((record.subject_tag, record.timestamp))
        else:
            with open(self.path, "w", encoding="utf-8") as f:
                f.write(json.dumps({"schema": SCHEMA_VERSION}) + "\n")

    def append(self, record: CalibrationRecord) -> None:
        findings = validate_record(record)
        if findings:
            raise ValueError("invalid record: " + "; ".join(findings))
        key = (record.subject_tag, record.timestamp)
        if key in self._keys:
            raise ValueError(f"duplicate record key {key}")
        with open(self.path, "a", encoding="utf-8") as f:
            f.write(json.dumps(record_to_dict(record)) + "\n")
        self._keys.add(key)

    def load(self) -> list[CalibrationRecord]:
        records, _ = load_session(self.path)
        return records

    def __len__(self) -> int:
        return len(self._keys)


def load_session(path: str | os.PathLike) -> tuple[list[CalibrationRecord], list[str]]:
    """Parse a session file; returns (records, per-line findings).

    Records that fail invariant checks are excluded from the returned list and
    reported in the findings.
    """
    records: list[CalibrationRecord] = []
    findings: list[str] = []
    with open(path, encoding="utf-8") as f:
        lines = f.readlines()
    if not lines:
        raise ValueError(f"{path}: empty session file")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}:1: malformed JSON header: {exc}") from exc
    if header.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"{path}: unsupported schema {header.get('schema')!r}")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            record = record_from_dict(json.loads(line))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            findings.append(f"line {lineno}: unparseable record: {exc}")
            continue
        issues = validate_record(record)
        if issues:
            findings.extend(f"line {lineno}: {msg}" for msg in issues)
        else:
            records.append(record)
    return records, findings


@dataclass
class CoefficientStats:
    count: int
    mean: float
    median: float
    iqr: float


@dataclass
class GroupStats:
    count: int
    coefficients: dict[str, CoefficientStats] = field(default_factory=dict)


@dataclass
class AggregateReport:
    groups: dict[str, GroupStats]
    rejects: int
    disagreement: float  # max pairwise L-inf distance of group-mean curves


def _coefficient_map(model: OpacityModel) -> dict[str, float]:
    if isinstance(model, PowerOpacity):
        return {f"power.b{i}": b for i, b in enumerate(model.exponent.coefficients)}
    return {"affine.a0": model.a0, "affine.a1": model.a1}


def _mean_curve(records: list[CalibrationRecord]) -> np.ndarray:
    curves = np.array(
        [[opacity(r.model, float(s)) for s in _CURVE_GRID] for r in records]
    )
    return curves.mean(axis=0)


def aggregate(records: list[CalibrationRecord], rejects: int = 0) -> AggregateReport:
    """Descriptive statistics per group tag plus a curve-disagreement metric.

    Records without group tags fall into the "" group.  Disagreement is the
    largest L-inf distance between any two group-mean opacity curves on a
    101-point grid; with fewer than two groups it is 0.
    """
    if not records:
        raise ValueError("cannot aggregate an empty record set")
    by_group: dict[str, list[CalibrationRecord]] = {}
    for record in records:
        for tag in record.group_tags or ("",):
            by_group.setdefault(tag, []).append(record)

    groups: dict[str, GroupStats] = {}
    for tag in sorted(by_group):
        members = by_group[tag]
        values: dict[str, list[float]] = {}
        for record in members:
            for name, v in _coefficient_map(record.model).items():
                values.setdefault(name, []).append(v)
        stats = {}
        for name in sorted(values):
            arr = np.array(values[name])
            q1, q3 = np.percentile(arr, [25, 75])
            stats[name] = CoefficientStats(
                count=len(arr),
                mean=float(arr.mean()),
                median=float(np.median(arr)),
                iqr=float(q3 - q1),
            )
        groups[tag] = GroupStats(count=len(members), coefficients=stats)

    mean_curves = {tag: _mean_curve(by_group[tag]) for tag in by_group}
    tags = sorted(mean_curves)
    disagreement = 0.0
    for i, a in enumerate(tags):
        for b in tags[i + 1:]:
            dist = float(np.abs(mean_curves[a] - mean_curves[b]).max())
            disagreement = max(disagreement, dist)
    return AggregateReport(groups=groups, rejects=rejects, disagreement=disagreement)
