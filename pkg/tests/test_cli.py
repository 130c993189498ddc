import json

import pytest

from orbicheck import cli, suites
from orbicheck.report import VerificationReport


def test_groups_report(tmp_path):
    out = tmp_path / "r.json"
    md = tmp_path / "r.md"
    assert cli.main(["groups", "--report", str(out), "--markdown", str(md), "--quiet"]) == 0
    rep = VerificationReport.from_json(out.read_text())
    assert len(rep.checks) >= 8 and rep.ok
    assert "checks passed" in md.read_text()
    keys = set(json.loads(out.read_text())["checks"][0])
    assert keys == {"id", "description", "paperRef", "status", "computed", "expected", "runtimeMs"}


def test_characters_weight_three():
    rep = suites.run("characters", suites.make_config({"order": 3}))
    c = rep.get("ch-Vsharp-q1")
    assert c.computed == c.expected == "196884"
    assert rep.ok


def test_sampled_fusion_marks_bilinearity():
    rep = suites.run("fusion", suites.make_config({"sampled": True, "sample_rows": 4}))
    assert rep.ok
    assert "sampled" in rep.get("fus-bilinearity").description


def test_report_is_stable():
    a = suites.run("twistcoef", suites.make_config({})).to_dict()
    b = suites.run("twistcoef", suites.make_config({})).to_dict()
    for r in (a, b):
        for c in r["checks"]:
            c["runtimeMs"] = 0
    assert a == b


def test_config_file_and_errors(tmp_path, capsys):
    cfg = tmp_path / "c.txt"
    cfg.write_text("# comment\ntwist-order = 4\nseed = 3\n")
    assert cli.main(["twistcoef", "--config", str(cfg), "--quiet"]) == 0
    cfg.write_text("order = many\n")
    assert cli.main(["groups", "--config", str(cfg)]) == 2
    cfg.write_text("colour = blue\n")
    assert cli.main(["groups", "--config", str(cfg)]) == 2
    assert cli.main(["groups", "--config", str(tmp_path / "missing.txt")]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2


def test_flags_override_file(tmp_path):
    cfg = tmp_path / "c.txt"
    cfg.write_text("twist_order = 4\n")
    out = tmp_path / "r.json"
    cli.main(["twistcoef", "--config", str(cfg), "--twist-order", "5", "--report", str(out), "--quiet"])
    assert json.loads(out.read_text())["configEcho"]["twist_order"] == 5


def test_failing_check_gives_exit_one(monkeypatch):
    from orbicheck.report import make_check
    monkeypatch.setitem(suites.RUNNERS, "groups", lambda ctx: [make_check("x", "d", "r", 1, 2)])
    assert cli.main(["groups", "--quiet"]) == 1


def test_duplicate_ids_rejected():
    from orbicheck.report import make_check
    rep = VerificationReport()
    rep.add(make_check("a", "d", "r", 1, 1))
    with pytest.raises(ValueError):
        rep.add(make_check("a", "d", "r", 1, 1))
