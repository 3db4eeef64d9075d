import json

import pytest

from domcx import checks
from domcx.classes import class_from_json
from domcx.domains import annulus_domain
from domcx.surface import build_surface


def test_applicability():
    assert checks.applicable("T6", 0, 5) and not checks.applicable("T6", 1, 3)
    assert checks.applicable("T7", 1, 3) and not checks.applicable("T7", 0, 5)
    assert not checks.applicable("T3", 0, 4)
    assert not checks.applicable("T1", 0, 4)


def test_config_errors():
    with pytest.raises(checks.ConfigError):
        checks.SuiteConfig(checks=("T9",)).validate()
    with pytest.raises(checks.ConfigError):
        checks.SuiteConfig(surfaces=((0, 2),)).validate()
    with pytest.raises(checks.ConfigError):
        checks.SuiteConfig(norm=0).validate()
    with pytest.raises(checks.ConfigError):
        checks.check_T6_genus0(build_surface(1, 3), checks.default_params("T6", 1, 3))


def test_deterministic_reports():
    cfg = checks.SuiteConfig(surfaces=((0, 5),), checks=("T2", "T3"), norm=10,
                             overrides={"T3": {"pairs": 40}})
    a = [r.to_json() for r in checks.run_suite(cfg)]
    b = [r.to_json() for r in checks.run_suite(cfg)]
    for x in a + b:
        x.pop("runtime")
    assert a == b
    assert all(r["verdict"] == "pass" for r in a)


def test_failure_carries_replayable_payload(monkeypatch):
    s = build_surface(0, 5)
    real = checks.include_curve_as_annulus
    curves = checks.enumerate_classes("curve", s, 8)
    wrong = annulus_domain(curves[1])
    monkeypatch.setattr(checks, "include_curve_as_annulus",
                        lambda c: wrong if c == curves[0] else real(c))
    rep = checks.check_T2_coarse_projection(s, checks.default_params("T2", 0, 5, norm=8))
    assert rep.verdict == "fail"
    assert checks.exit_code([rep]) == 1
    ce = json.loads(json.dumps(rep.counterexample))
    assert ce["surface"] == [0, 5]
    assert class_from_json(s, ce["payload"]["curve"]) == curves[0]


def test_evidence_only_does_not_fail():
    rep = checks.CheckReport("T7", (1, 3), {})
    rep.finish(0.0)
    assert rep.verdict == "evidence-only"
    assert checks.exit_code([rep]) == 0


def test_report_schema(tmp_path):
    cfg = checks.SuiteConfig(surfaces=((0, 5),), checks=("T2",), norm=8)
    reports = checks.run_suite(cfg)
    out = tmp_path / "r.json"
    checks.dump_reports(reports, out)
    data = json.loads(out.read_text())
    assert data["schema"] == checks.REPORT_SCHEMA
    assert data["failed"] == 0
    assert data["reports"][0]["check"] == "T2"
