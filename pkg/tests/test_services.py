import json

import pytest

from core.constants import STATUS_OK
from core.logic.errors import InputValidationError, InvariantViolation, VerificationFailure
from models.problem import ProblemFile
from routes.services import VERIFY_COMMAND, command_names


def _problem(problems_dir, name):
    return ProblemFile.model_validate_json((problems_dir / name).read_text())


def test_command_names_cover_every_command():
    names = command_names()
    assert names[-1] == VERIFY_COMMAND
    for name in ("count", "coeffs", "cesaro", "module", "hn", "phi", "hecke", "optimize", "compare", "cone"):
        assert name in names


def test_count(service_worker, problems_dir):
    report = service_worker.run("count", _problem(problems_dir, "count.json"))
    assert report.status == STATUS_OK
    assert report.outputs["count"] == 9
    assert report.outputs["x"] == "4"
    assert report.inputs["algebra"]["weights"] == ["1", "2"]


def test_coeffs_and_cesaro(service_worker, problems_dir):
    problem = _problem(problems_dir, "cesaro.json")
    coeffs = service_worker.run("coeffs", problem)
    assert coeffs.outputs["a_top"] == "1/6"
    assert coeffs.outputs["log_discrepancy"] == "5"

    cesaro = service_worker.run("cesaro", problem)
    assert cesaro.outputs["T"] == "16"
    assert set(cesaro.outputs) == {"algebra", "T", "integral", "residual"}


def test_module_info(service_worker, problems_dir):
    outputs = service_worker.run("module", _problem(problems_dir, "free_module.json")).outputs
    assert outputs["rank"] == 2
    assert outputs["a_top"] == "1"
    assert outputs["degree"] == "-3/2"
    assert outputs["degree_of_dual"] == "3/2"
    assert outputs["slope"] == "-3/2"
    assert outputs["semistable"] is False
    assert outputs["dual"]["free"] == ["-1", "-2"]
    assert outputs["twisted_degree"] == "-1/2"
    assert outputs["twisted_slope"] == "-1/2"
    assert outputs["count"] == 10


def test_module_info_with_torsion(service_worker, problems_dir):
    outputs = service_worker.run("module", _problem(problems_dir, "torsion_module.json")).outputs
    assert outputs["degree"] == "3"
    assert outputs["degree_of_dual"] == "-3"
    assert "dual" not in outputs
    assert "semistable" not in outputs
    with pytest.raises(InputValidationError, match="HN restricted"):
        service_worker.run("hn", _problem(problems_dir, "torsion_module.json"))


def test_hn(service_worker, problems_dir):
    outputs = service_worker.run("hn", _problem(problems_dir, "free_module.json")).outputs
    assert outputs["slopes"] == ["-1", "-2"]
    assert outputs["mu_max"] == "-1"
    assert outputs["semistable"] is False
    assert [stage["slope"] for stage in outputs["stages"]] == ["-1", "-2"]


def test_phi_and_hecke(service_worker, problems_dir):
    problem = _problem(problems_dir, "plane_v1.json")
    phi = service_worker.run("phi", problem).outputs
    assert phi["phi"] == "1"
    assert phi["optimal"] is False
    assert phi["value"] == "3"
    assert phi["log_discrepancy"] == "3"

    hecke = service_worker.run("hecke", problem).outputs
    assert hecke["selection"] == [0]
    assert hecke["after"]["shifts"] == ["1", "1"]
    assert hecke["after"]["optimal"] is True
    assert hecke["graded"] == ["1", "1"]


def test_optimize_reports_the_trace(service_worker, problems_dir):
    report = service_worker.run("optimize", _problem(problems_dir, "descent.json"))
    assert report.outputs["steps"] == 3
    assert report.outputs["shifts"] == ["0", "0", "0"]
    assert report.outputs["phi"] == "0"
    assert len(report.trace) == 3
    assert report.trace[0]["after"] == ["0", "0", "2"]
    assert report.outputs["tangent_cone"]["semistable"] is True


def test_compare(service_worker, problems_dir):
    outputs = service_worker.run("compare", _problem(problems_dir, "compare.json")).outputs
    assert outputs == {"kind": "parallel_transport", "c": "3"}

    with pytest.raises(InputValidationError, match="not optimal"):
        service_worker.run("compare", _problem(problems_dir, "plane_v1.json"))


def test_cone(service_worker, problems_dir):
    report = service_worker.run("cone", _problem(problems_dir, "cone_g2.json"))
    assert report.outputs["optimal_shift"] == 2
    assert report.outputs["phi"] == "0"
    assert report.outputs["gr"]["semistable"] is True
    assert len(report.trace) == 2


def test_verify_examples(service_worker):
    report = service_worker.run(VERIFY_COMMAND)
    assert report.status == STATUS_OK
    assert report.outputs["failed"] == 0
    assert report.outputs["passed"] == len(report.outputs["checks"])


def test_verify_examples_on_corrupted_fixture(service_worker, expected_fixture, tmp_path):
    data = json.loads(expected_fixture.read_text())
    data["plane"]["transport"] = "-1"
    path = tmp_path / "expected.json"
    path.write_text(json.dumps(data))

    with pytest.raises(VerificationFailure) as info:
        service_worker.run(VERIFY_COMMAND, fixture=str(path))
    assert info.value.failures == ["plane.transport: expected '-1', got '1'"]


def test_verify_examples_missing_fixture(service_worker, tmp_path):
    with pytest.raises(InputValidationError, match="fixture not found"):
        service_worker.run(VERIFY_COMMAND, fixture=str(tmp_path / "absent.json"))


def test_dispatch_errors(service_worker, problems_dir):
    with pytest.raises(InputValidationError, match="unknown command"):
        service_worker.run("integrate", _problem(problems_dir, "count.json"))
    with pytest.raises(InputValidationError, match="needs a problem file"):
        service_worker.run("count")
    with pytest.raises(InputValidationError, match="missing parameter x"):
        service_worker.run("count", ProblemFile.model_validate({"algebra": {"weights": ["1"]}}))


def test_invariant_violation_propagates(service_worker, problems_dir, monkeypatch):
    monkeypatch.setattr("core.logic.valuative.descent.DESCENT_CAP_SLACK", -100)
    with pytest.raises(InvariantViolation):
        service_worker.run("optimize", _problem(problems_dir, "descent.json"))
