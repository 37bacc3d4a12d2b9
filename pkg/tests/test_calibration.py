"""Session store and aggregation."""

import json

import numpy as np
import pytest

from lumablend.bezier import BezierPolynomial
from lumablend.calibration import (
    CalibrationRecord,
    SessionStore,
    aggregate,
    load_session,
    validate_record,
)
from lumablend.opacity import AffineOpacity, PowerOpacity, opacity

QUAD = PowerOpacity(BezierPolynomial((0.20, 0.25, 1.00)))
ELEVATED_AFFINE = PowerOpacity(BezierPolynomial((0.2, 0.6, 1.0)))


def make_record(subject="s1", ts=1000.0, model=QUAD, groups=("east",), s=0.5):
    return CalibrationRecord(
        subject_tag=subject, model=model, s=s, l_p=0.5,
        background="continuous", timestamp=ts, ui_version="test", group_tags=groups,
    )


def test_store_append_and_reload(tmp_path):
    path = tmp_path / "session.jsonl"
    store = SessionStore(path)
    store.append(make_record())
    assert len(store) == 1
    lines = path.read_text().splitlines()
    assert json.loads(lines[0]) == {"schema": 1}
    assert len(lines) == 2

    reopened = SessionStore(path)
    assert len(reopened) == 1
    records = reopened.load()
    assert records[0].model == QUAD


def test_duplicate_key_rejected(tmp_path):
    store = SessionStore(tmp_path / "s.jsonl")
    store.append(make_record())
    with pytest.raises(ValueError, match="duplicate"):
        store.append(make_record())
    store.append(make_record(ts=1001.0))
    assert len(store) == 2


def test_invalid_record_rejected(tmp_path):
    store = SessionStore(tmp_path / "s.jsonl")
    bad = make_record(model=PowerOpacity(BezierPolynomial((0.2, -1.0, 1.0))))
    with pytest.raises(ValueError, match="invalid record"):
        store.append(bad)
    assert validate_record(make_record(s=1.5))


def test_load_reports_findings(tmp_path):
    path = tmp_path / "s.jsonl"
    rows = [
        {"schema": 1},
        {
            "subject_tag": "a", "group_tags": [], "s": 1.5, "l_p": 0.5,
            "background": "white", "timestamp": 1.0, "ui_version": "",
            "model": {"kind": "power", "bezier": [0.2, 0.25, 1.0]},
        },
    ]
    path.write_text("\n".join(json.dumps(r) for r in rows) + "\n")
    records, findings = load_session(path)
    assert records == []
    assert any("s=1.5" in f for f in findings)


def test_aggregate_singleton_and_identical():
    report = aggregate([make_record()])
    stats = report.groups["east"].coefficients
    assert stats["power.b1"].mean == 0.25
    assert stats["power.b1"].iqr == 0.0
    report2 = aggregate([make_record(), make_record(ts=2.0)])
    assert report2.disagreement == 0.0


def test_aggregate_disagreement_matches_grid_oracle():
    records = [
        make_record(model=QUAD, groups=("a",)),
        make_record(subject="s2", model=ELEVATED_AFFINE, groups=("b",)),
    ]
    report = aggregate(records)
    grid = np.linspace(0.0, 1.0, 101)
    oracle = max(
        abs(opacity(QUAD, float(t)) - opacity(ELEVATED_AFFINE, float(t))) for t in grid
    )
    assert report.disagreement == pytest.approx(oracle, abs=1e-12)


def test_aggregate_single_group_equals_global():
    records = [make_record(groups=("only",)), make_record(ts=2.0, groups=("only",))]
    grouped = aggregate(records)
    ungrouped = aggregate([make_record(groups=()), make_record(ts=2.0, groups=())])
    assert grouped.groups["only"].coefficients == ungrouped.groups[""].coefficients


def test_aggregate_empty_raises():
    with pytest.raises(ValueError):
        aggregate([])


def test_affine_record_stats():
    records = [
        make_record(model=AffineOpacity(0.6, 1.0), groups=("g",)),
        make_record(ts=2.0, model=AffineOpacity(0.7, 1.0), groups=("g",)),
    ]
    report = aggregate(records)
    assert report.groups["g"].coefficients["affine.a0"].mean == pytest.approx(0.65)
