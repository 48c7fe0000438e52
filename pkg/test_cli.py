#!/usr/bin/env python3
"""
Pruebas de la CLI: salida JSON, archivos escritos y códigos de salida.
"""
import json

import pytest

from app.instance_io import read_instance
from app.verify import CheckResult, VerifyReport
from main import main

INTERVAL_INSTANCE = "kind = real-line\n[distribution]\n1 1/4\n2 1/4\n3 1/4\n4 1/4\n[labels]\n1010\n"


@pytest.fixture
def instance_path(tmp_path):
    path = tmp_path / "inst.txt"
    path.write_text(INTERVAL_INSTANCE, encoding="utf-8")
    return str(path)


def _stdout_json(capsys):
    value, _ = json.JSONDecoder().raw_decode(capsys.readouterr().out)
    return value


class TestDim:
    """dim"""

    def test_intervals(self, capsys):
        assert main(["dim", "--class", "intervals:k=1", "--domain", "line:size=4"]) == 0
        payload = _stdout_json(capsys)
        assert payload["vc"] == 2 and payload["lvc"] == 2
        assert payload["growth"] == 11

    def test_certificate(self, capsys):
        assert main(["dim", "--class", "intervals:k=1", "--domain", "line:size=4", "--certificate"]) == 0
        payload = _stdout_json(capsys)
        assert payload["vc_certificate"]["labelling"] == [1, 0, 1]
        assert payload["vc_certificate"]["subset"] == ["1", "2", "3"]

    def test_table_follows_json(self, capsys):
        assert main(["dim", "--class", "intervals:k=1", "--domain", "line:size=5", "--certificate"]) == 0
        out = capsys.readouterr().out
        _, end = json.JSONDecoder().raw_decode(out)
        table = [line for line in out[end:].splitlines() if line.strip()]
        rows = dict(line.split(None, 1) for line in table)
        assert rows["vc"] == "2" and rows["lvc"] == "2"
        assert rows["sauer_bound"] == "16"
        assert rows["vc_certificate"] == "{1, 2, 3} ↦ 101"
        assert len({len(line) - len(line.split(None, 1)[1]) for line in table}) == 1

    def test_bad_class_spec(self, capsys):
        assert main(["dim", "--class", "blob:k=1", "--domain", "line:size=4"]) == 2
        err = capsys.readouterr().err
        detail = json.loads(err[err.index("{\n"):])
        assert detail["exit_status"] == 2
        assert "suggestion" in detail

    def test_budget_exceeded(self, monkeypatch):
        monkeypatch.setenv("LVC_ORACLE_CALL_BUDGET", "3")
        assert main(["dim", "--class", "intervals:k=2", "--domain", "line:size=8", "--certificate"]) == 4


class TestDistanceAndTest:
    """distance y test sobre un archivo de instancia"""

    def test_distance(self, instance_path, capsys):
        assert main(["distance", "--class", "intervals:k=1", "--instance", instance_path]) == 0
        assert _stdout_json(capsys)["distance"] == "1/4"

    def test_labels_override(self, instance_path, capsys):
        assert main(["distance", "--class", "intervals:k=1", "--instance", instance_path,
                     "--labels", "0110", "--method", "generic"]) == 0
        assert _stdout_json(capsys)["distance"] == "0"

    def test_one_sided_accepts_member(self, instance_path, capsys):
        assert main(["test", "--class", "intervals:k=1", "--instance", instance_path, "--labels", "0110",
                     "--seed", "7"]) == 0
        assert _stdout_json(capsys)["accept"] is True

    def test_one_sided_needs_class(self, instance_path):
        assert main(["test", "--instance", instance_path]) == 2

    def test_birthday_needs_d(self, instance_path):
        assert main(["test", "--tester", "birthday", "--instance", instance_path]) == 2


class TestFiles:
    """hardgen, sweep y emit"""

    def test_hardgen_lp(self, tmp_path):
        out = str(tmp_path / "lp.txt")
        assert main(["hardgen", "lp", "--side", "yes", "--n", "3", "--seed", "1", "--out", out]) == 0
        D, f = read_instance(out)
        assert len(D.domain) == 20
        assert len(D.support) == 4
        assert f is not None

    def test_hardgen_cluster_precondition(self, tmp_path, capsys):
        out = str(tmp_path / "cluster.txt")
        status = main(["hardgen", "cluster", "--side", "no", "--n", "14", "--k", "1", "--m", "20", "--out", out])
        assert status == 5

    def test_sweep_then_emit(self, tmp_path):
        csv_path = tmp_path / "runs.csv"
        assert main(["--threads", "2", "sweep", "--generator", "birthday:d=50", "--eps", "0.1", "--grid", "2,80",
                     "--trials", "30", "--seed", "9", "--out", str(csv_path)]) == 0
        assert len(csv_path.read_text(encoding="utf-8").splitlines()) == 5
        assert main(["emit", "--input", str(csv_path), "--format", "json", "--out", str(tmp_path / "r.json")]) == 0
        assert len(json.loads((tmp_path / "r.json").read_text(encoding="utf-8"))) == 4

    def test_sweep_from_config_file(self, tmp_path):
        config = tmp_path / "sweep.cfg"
        config.write_text("generator = birthday:d=50\neps = 0.1\ngrid = 2, 80\ntrials = 30\nseed = 4\n",
                          encoding="utf-8")
        out = tmp_path / "runs.json"
        assert main(["--config", str(config), "sweep", "--out", str(out), "--format", "json"]) == 0
        assert {r["m"] for r in json.loads(out.read_text(encoding="utf-8"))} == {2, 80}

    def test_sweep_missing_grid(self):
        assert main(["sweep", "--generator", "birthday:d=50", "--eps", "0.1"]) == 2

    def test_metrics_out(self, tmp_path):
        metrics = tmp_path / "metrics.txt"
        assert main(["--metrics-out", str(metrics), "dim", "--class", "intervals:k=1", "--domain", "line:size=3"]) == 0
        assert "lvc_oracle_calls" in metrics.read_text(encoding="utf-8")


class TestVerify:
    """verify"""

    def test_list(self, capsys):
        assert main(["verify", "--list"]) == 0
        assert len(capsys.readouterr().out.split()) == 15

    def test_unknown_suite(self):
        assert main(["verify", "nope"]) == 6

    def test_failing_suite_exits_nonzero(self, mocker, capsys):
        bad = CheckResult(name="x", statement="s", expected="1", observed="2", passed=False)
        runner = mocker.patch("main.verify_many", return_value=[VerifyReport(suite="dims", seed=1, checks=[bad])])
        assert main(["verify", "dims", "--seed", "1"]) == 1
        runner.assert_called_once_with(["dims"], seed=1, threads=None)
        assert "FAIL" in capsys.readouterr().out

    def test_json_report(self, capsys):
        assert main(["verify", "ssd-birthday", "--seed", "3", "--json"]) == 0
        reports = _stdout_json(capsys)
        assert reports[0]["suite"] == "ssd-birthday"
