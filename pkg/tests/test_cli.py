import json
import os

from grpstat.catalog import build, catalog
from grpstat.cli import main
from grpstat.perm import parse_group_text
from grpstat.rc import rc_exact
from grpstat.stats import stat_H, stat_b


def test_construct_stdout_round_trips(capsys):
    assert main(["construct", "sym4"]) == 0
    out = capsys.readouterr().out
    degree, gens = parse_group_text(out)
    inst = build("sym4")
    assert degree == inst.degree
    assert tuple(gens) == inst.generators


def test_construct_list_and_tags(capsys):
    assert main(["construct", "--list"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == len(catalog())
    assert any(line.split()[0] == "m24" for line in lines)
    assert main(["construct", "--list", "--tags", "quadform"]) == 0
    sub = capsys.readouterr().out.splitlines()
    assert 0 < len(sub) < len(lines)
    assert all("quadform" in line for line in sub)


def test_construct_writes_files(tmp_path, capsys):
    out = str(tmp_path / "aff.grp")
    assert main(["construct", "aff-1-5", "-o", out, "--validate"]) == 0
    with open(out) as fh:
        degree, gens = parse_group_text(fh.read())
    assert degree == 5
    with open(str(tmp_path / "aff.json")) as fh:
        sidecar = json.load(fh)
    assert sidecar["schema"] == 1
    assert sidecar["name"] == build("aff-1-5").name
    assert sidecar["degree"] == 5
    assert len(sidecar["labels"]) == 5
    assert sidecar["meta"]["order"] == 20


def test_construct_error_paths(capsys):
    assert main(["construct"]) == 2
    assert "grpstat:" in capsys.readouterr().err
    assert main(["construct", "no-such-instance"]) == 2
    err = capsys.readouterr().err
    assert "no-such-instance" in err


def test_stats_text_and_json(tmp_path, capsys):
    jpath = str(tmp_path / "stats.json")
    assert main(["stats", "sym5", "--json", jpath]) == 0
    out = capsys.readouterr().out
    assert "b = 4" in out and "I = 4" in out
    assert "len = 5" in out and "[sym_formula]" in out
    with open(jpath) as fh:
        payload = json.load(fh)
    assert payload["input"] == "sym5"
    assert payload["degree"] == 5 and payload["order"] == 120
    G = build("sym5").group()
    assert payload["stats"]["b"]["value"] == stat_b(G).value
    assert payload["stats"]["H"]["witness"] == list(stat_H(G).witness)
    assert payload["stats"]["len"] == {"value": 5, "status": "exact",
                                       "method": "sym_formula"}


def test_stats_single_stat_from_file(tmp_path, capsys):
    gpath = str(tmp_path / "mygroup.grp")
    assert main(["construct", "alt4", "-o", gpath]) == 0
    capsys.readouterr()
    assert main(["stats", gpath, "--stat", "H"]) == 0
    out = capsys.readouterr().out
    assert out == "H = 2\n"


def test_stats_budget_reports_interval(capsys):
    assert main(["stats", "part-4-2", "--stat", "I", "--budget", "30"]) == 0
    out = capsys.readouterr().out
    assert "I in [" in out and "budget exhausted" in out


def test_rc_exact_and_upper(tmp_path, capsys):
    jpath = str(tmp_path / "rc.json")
    assert main(["rc", "alt5", "--json", jpath]) == 0
    assert capsys.readouterr().out == "RC = 4\n"
    with open(jpath) as fh:
        payload = json.load(fh)
    assert payload["rc"]["value"] == 4
    assert payload["rc"]["witness"]["r"] == 3
    assert main(["rc", "alt5", "--upper"]) == 0
    assert capsys.readouterr().out == "RC <= 4\n"
    res = rc_exact(build("alt5").group())
    assert payload["rc"]["value"] == res.value


def test_rc_budget_interval(capsys):
    assert main(["rc", "subs-5-2", "--budget", "300"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("RC in [") and "budget exhausted" in out


def test_verify_check_subset(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    rc = main(["verify", "--check", "PGL_H", "--check", "ORBIT_SIZES",
               "--out", "sub.json", "--no-figures"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "PGL_H          pass=4   fail=0   skipped=0" in out
    assert "ORBIT_SIZES    pass=6   fail=0   skipped=0" in out
    assert "total: 10 rows, 10 passed, 0 failed, 0 skipped" in out
    assert "report: sub.json" in out
    assert os.path.exists("sub.json") and os.path.exists("sub.csv")
    assert not os.path.exists("sub_chain.png")


def test_verify_renders_figures(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    rc = main(["verify", "--check", "INEQ_CHAIN", "--check", "HEIGHT_MAIN",
               "--out", "fig.json"])
    capsys.readouterr()
    assert rc == 0
    assert os.path.exists("fig_chain.png")
    assert os.path.exists("fig_bounds.png")


def test_verify_all_suite_exits_nonzero(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    rc = main(["verify", "--suite", "all", "--out", "all.json", "--no-figures"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "FAILED M24_I/m24" in out
    with open("all.json") as fh:
        rep = json.load(fh)
    assert rep["summary"]["failed"] == 1


def test_verify_include_slow_equivalent(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    rc = main(["verify", "--include", "slow", "--check", "M24_I",
               "--out", "slow.json", "--no-figures"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "M24_I          pass=0   fail=1   skipped=0" in out


def test_verify_tier_note_for_empty_check(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    rc = main(["verify", "--check", "M24_I", "--out", "m.json", "--no-figures"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "M24_I          no rows in this tier" in out


def test_exit_code_two_on_bad_input(tmp_path, capsys):
    assert main(["stats", "definitely-not-a-group"]) == 2
    assert "grpstat:" in capsys.readouterr().err
    assert main(["verify", "--check", "BOGUS", "--out",
                 str(tmp_path / "x.json")]) == 2
    assert "unknown check id" in capsys.readouterr().err
    assert main(["verify", "--out", str(tmp_path / "no" / "dir" / "x.json"),
                 "--check", "PGL_H", "--no-figures"]) == 2
    assert "grpstat:" in capsys.readouterr().err


def test_malformed_group_file(tmp_path, capsys):
    bad = str(tmp_path / "bad.grp")
    with open(bad, "w") as fh:
        fh.write("degree x\n0 1\n")
    assert main(["stats", bad]) == 2
    assert "grpstat:" in capsys.readouterr().err
