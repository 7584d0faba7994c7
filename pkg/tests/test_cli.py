import json

import pytest
from click.testing import CliRunner

from strongquot.cli import main
from strongquot.ore import clear_caches


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, env=None):
        return runner.invoke(main, list(args), env=env or {"STRONGQUOT_CACHE": ""}, catch_exceptions=False)

    return invoke


def profiles(result):
    return json.loads(result.output)["profiles"]


class TestExitCodes:
    def test_verify_ok(self, run):
        r = run("verify", "l2_f2")
        assert r.exit_code == 0 and "[FAIL]" not in r.output

    def test_failed_verdict(self, run):
        r = run("localize", "cyclic 6", "--set", "1 3 4")
        assert r.exit_code == 1

    def test_closed_form_reports_cardinality_failure(self, run):
        r = run("closed-form", "cyclic 4", "--format", "json")
        assert r.exit_code == 1
        data = json.loads(r.output)
        assert data["ok"] is False

    def test_parse_error(self, run, tmp_path):
        bad = tmp_path / "bad.ring"
        bad.write_text("ring X size 2\nzero 0 one 1\nadd:\n0 1\n")
        r = run("analyze", str(bad))
        assert r.exit_code == 2 and "bad.ring:" in r.output

    def test_capacity(self, run):
        r = run("analyze", "matrix lower 2 gf 3", "--cap", "8")
        assert r.exit_code == 3


class TestReports:
    def test_z4_json(self, run):
        r = run("analyze", "cyclic 4", "--side", "left", "--format", "json")
        data = json.loads(r.output)
        assert data["schema"] == 1 and data["command"] == "analyze" and data["ok"]
        p = profiles(r)[0]
        assert p["T"]["members"] == [1, 3] and p["strong_radical"] == [0]

    def test_l2_f2_two_sided(self, run):
        r = run("analyze", "l2_f2", "--side", "both", "--format", "json")
        p = profiles(r)[0]
        assert p["side"] == "both" and p["T"]["size"] == 2 and p["strong_quotient"]["size"] == 8

    def test_deterministic(self, run):
        a = run("analyze", "z12", "--format", "json").output
        clear_caches()
        b = run("analyze", "z12", "--format", "json").output
        assert a == b

    def test_cache_is_transparent(self, run, tmp_path):
        clear_caches()
        plain = run("verify", "cyclic 12", "--format", "json").output
        clear_caches()
        first = run("verify", "cyclic 12", "--format", "json", "--cache", str(tmp_path)).output
        assert any(tmp_path.iterdir())
        clear_caches()
        second = run("verify", "cyclic 12", "--format", "json", "--cache", str(tmp_path)).output
        assert plain == first == second

    def test_jobs_keep_input_order(self, run):
        rings = ["z6", "f4", "l2_f2", "z4"]
        r = run("analyze", *rings, "--side", "left", "--format", "json", "--jobs", "2")
        data = json.loads(r.output)
        assert data["schema"] == 1
        assert [rep["ring"]["source"] for rep in data["reports"]] == rings
        serial = run("analyze", *rings, "--side", "left", "--format", "json")
        assert serial.output == r.output

    def test_out_file(self, run, tmp_path):
        out = tmp_path / "r.json"
        r = run("enumerate", "z6", "--format", "json", "--out", str(out))
        assert r.exit_code == 0
        assert json.loads(out.read_text())["schema"] == 1

    def test_timing_only_when_asked(self, run):
        assert "timing" not in run("analyze", "z4", "--format", "json").output
        assert "timing" in run("analyze", "z4", "--format", "json", "--timing").output

    def test_text_output(self, run):
        r = run("enumerate", "z6", "--list")
        assert r.exit_code == 0 and "maximal" in r.output

    def test_localize(self, run):
        r = run("localize", "z6", "--set", "1,3,5", "--format", "json")
        assert r.exit_code == 0

    def test_closed_form_prediction_only(self, run):
        r = run("closed-form", "matrix lower 4 gf 5", "--format", "json")
        data = json.loads(r.output)
        assert r.exit_code == 0 and data["prediction_only"] is True

    def test_closed_form_triangular(self, run):
        r = run("closed-form", "l2_f2", "--format", "json")
        assert r.exit_code == 0


class TestCorpus:
    def test_list(self, run):
        r = run("corpus", "list")
        assert r.exit_code == 0 and "l2_f2xl2_f2" in r.output

    def test_build(self, run, tmp_path):
        r = run("corpus", "build", "--dir", str(tmp_path / "c"))
        assert r.exit_code == 0
        files = list((tmp_path / "c").iterdir())
        assert len(files) == 15
        back = run("analyze", str(files[0]), "--side", "left")
        assert back.exit_code == 0
