"""Audit harness: findings, sweeps, rendering, mismatch detection."""
from __future__ import annotations

import json
from dataclasses import asdict, replace

import pytest

import zdg.harness as harness
from zdg.formulas import Prediction
from zdg.harness import (
    CSV_HEADER,
    AuditFinding,
    analyze,
    audit,
    csv_row,
    render,
    render_csv,
    render_json,
    sweep,
)


def test_analyze_z25():
    row = analyze(25)
    assert row == AuditFinding(
        n=25,
        factorization="5^2",
        vertices=4,
        edges=6,
        delta=3,
        kappa_e=3,
        kappa=3,
        pred_delta=3,
        pred_kappa_e=3,
        pred_kappa=3,
        tags="T4.5;T4.1;T3.1",
        match=True,
        skip_reason="",
    )


def test_analyze_z12():
    row = analyze(12)
    assert row.factorization == "2^2*3"
    assert (row.vertices, row.edges) == (7, 8)
    assert (row.delta, row.kappa_e, row.kappa) == (1, 1, 1)
    assert (row.pred_delta, row.pred_kappa_e, row.pred_kappa) == (1, 1, 1)
    assert row.tags == "T4.5;T4.3;T3.4"
    assert row.match is True


def test_analyze_prime_skips():
    row = analyze(13)
    assert row.n == 13
    assert row.factorization == "13"
    assert row.skip_reason == "NoZeroDivisors"
    assert row.match is False
    assert row.vertices is None and row.kappa is None
    assert row.tags == ""


def test_analyze_resource_skip():
    row = analyze(10**6)
    assert row.skip_reason == "ResourceLimit"
    assert row.factorization == "2^6*5^6"
    assert row.vertices is None


def test_analyze_exhaustive_oracle():
    row = analyze(25, oracle="exhaustive")
    assert (row.delta, row.kappa_e, row.kappa) == (3, 3, 3)
    assert row.match is True
    tiny = analyze(30, oracle="exhaustive", budget=10)
    assert tiny.skip_reason == "ResourceLimit"


def test_analyze_input_validation():
    with pytest.raises(ValueError):
        analyze(25, oracle="guess")
    with pytest.raises(ValueError):
        analyze(0)
    with pytest.raises(ValueError):
        analyze(2**63)


def test_sweep_range_and_order():
    rows = sweep(4, 30)
    assert [r.n for r in rows] == list(range(4, 31))
    checked = [r for r in rows if not r.skip_reason]
    assert len(checked) == 19
    skipped = [r.n for r in rows if r.skip_reason]
    assert skipped == [5, 7, 11, 13, 17, 19, 23, 29]
    assert all(r.match for r in checked)


def test_sweep_input_validation():
    with pytest.raises(ValueError):
        sweep(0, 5)
    with pytest.raises(ValueError):
        sweep(5, 4)
    with pytest.raises(ValueError):
        sweep(4, 10, jobs=0)


def test_sweep_jobs_deterministic():
    serial = render_csv(sweep(4, 60))
    parallel = render_csv(sweep(4, 60, jobs=2))
    assert serial == parallel


def test_audit_counts():
    result = audit(4, 9)
    assert result.checked == 4
    assert [r.n for r in result.rows] == [4, 5, 6, 7, 8, 9]
    assert result.mismatches == ()
    assert [r.n for r in result.skipped] == [5, 7]
    assert result.summary() == "checked 4 composite values, 0 mismatches"


def test_audit_range_4_100():
    result = audit(4, 100)
    assert result.checked == 74
    assert not result.mismatches


def test_audit_flags_planted_mismatch(monkeypatch):
    def wrong(f):
        return Prediction(f.n, "vertex_connectivity", 99, "T0.0")

    monkeypatch.setattr(harness, "predict_vertex_connectivity", wrong)
    result = audit(4, 12)
    assert len(result.mismatches) == result.checked > 0
    assert result.summary().endswith(f"{len(result.mismatches)} mismatches")
    row = result.mismatches[0]
    assert row.match is False
    assert row.pred_kappa == 99 != row.kappa


def test_csv_row_values():
    assert csv_row(analyze(25)) == (
        "25,5^2,4,6,3,3,3,3,3,3,T4.5;T4.1;T3.1,true,"
    )
    assert csv_row(analyze(13)) == "13,13,,,,,,,,,,false,NoZeroDivisors"


def test_render_csv_layout():
    text = render_csv(sweep(8, 10))
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 4
    assert text.endswith("\n")
    assert CSV_HEADER.count(",") == 12
    assert all(ln.count(",") == 12 for ln in lines[1:])


def test_render_json_round_trip():
    rows = sweep(4, 16)
    parsed = json.loads(render_json(rows))
    assert parsed == [asdict(r) for r in rows]
    assert [r["n"] for r in parsed] == list(range(4, 17))


def test_render_dispatch():
    rows = [analyze(25)]
    assert render(rows, "csv") == render_csv(rows)
    assert render(rows, "json") == render_json(rows)
    with pytest.raises(ValueError):
        render(rows, "yaml")


def test_csv_and_json_carry_same_values():
    rows = sweep(20, 28)
    parsed = json.loads(render_json(rows))
    csv_lines = render_csv(rows).splitlines()[1:]
    for obj, line in zip(parsed, csv_lines):
        cells = line.split(",")
        assert cells[0] == str(obj["n"])
        assert cells[1] == obj["factorization"]
        assert cells[11] == ("true" if obj["match"] else "false")
        assert cells[12] == obj["skip_reason"]


def test_finding_replace_keeps_schema():
    # the CSV column order is the dataclass field order
    row = replace(analyze(25), n=26)
    assert list(asdict(row)) == CSV_HEADER.split(",")
