import json

import pytest

from config.settings import Settings
from observability.logger import NumRangeLogger


@pytest.fixture
def logger():
    return NumRangeLogger(name="NumRangeTest")


def test_settings_validate(monkeypatch):
    assert Settings.validate() is True
    monkeypatch.setattr(Settings, "SLACK_TOL", 0.0)
    with pytest.raises(ValueError, match="SLACK_TOL"):
        Settings.validate()


def test_settings_rejects_coarse_initial_grid(monkeypatch):
    monkeypatch.setattr(Settings, "BNB_INITIAL_INTERVALS", 2)
    with pytest.raises(ValueError, match="at least 4"):
        Settings.validate()


def test_trace_workflow_records_duration(logger):
    @logger.trace_workflow("double")
    def double(x):
        return 2 * x

    assert double(4) == 8
    assert logger.get_metrics_summary()["workflow_seconds"]["count"] == 1
    assert logger.traces[-1]["action"] == "WORKFLOW_COMPLETE"


def test_trace_workflow_logs_and_reraises(logger):
    @logger.trace_workflow("boom")
    def boom():
        raise ValueError("bad input")

    with pytest.raises(ValueError):
        boom()
    assert logger.traces[-1]["type"] == "error"
    assert logger.traces[-1]["error_message"] == "bad input"


def test_metrics_and_export(logger, tmp_path):
    logger.record_metric("eigensolves", 3)
    logger.record_metric("eigensolves", 5)
    logger.record_metric("not_a_metric", 1)
    summary = logger.get_metrics_summary()
    assert summary["eigensolves"]["total"] == 8
    assert "not_a_metric" not in summary

    logger.log_action("test", "DONE", {"n": 1})
    path = logger.export_traces(tmp_path / "traces.json")
    traces = json.loads(path.read_text(encoding="utf-8"))
    assert traces[-1]["details"] == {"n": 1}

    logger.reset()
    assert logger.traces == [] and logger.get_metrics_summary() == {}
