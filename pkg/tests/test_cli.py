import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from unitcosets.cli import run
from unitcosets.instance_io import dump_report, load_instance, parse_report
from unitcosets.unit_search import verify_bound

DATA = Path(__file__).parent / "data"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_bounds_command():
    assert call("bounds", "--n", "2", "--r", "1") == (0, "theorem=3 corollary=3 degenerate_subsets=0\n")
    assert call("bounds", "--n", "3", "--r", "1") == (0, "theorem=8 corollary=11 degenerate_subsets=3\n")


def test_bounds_precondition(capsys):
    code, _ = call("bounds", "--n", "2", "--r", "0")
    assert code == 3
    assert "r must be" in capsys.readouterr().err


def test_power_command():
    code, text = call("power", "--num", "2,2", "--u", "1/2", "--order", "4")
    assert code == 0
    assert text.splitlines() == ["lead=2", "u=1/2 order=4", "pow=[1, 1/2, -1/8, 1/16]"]


def test_power_unit_required():
    assert call("power", "--num", "0,1", "--u", "1/2")[0] == 3
    assert call("power", "--num", "1", "--den", "0,1", "--u", "2")[0] == 3
    assert call("power", "--num", "1,x", "--u", "2")[0] == 2


def test_rank_command():
    code, text = call("rank", "--file", str(DATA / "toy-functions.json"))
    assert code == 0
    assert text == "rank_exact=3 rank_series=3 certified=true degree_bound=18 order=21\n"
    code, text = call("rank", "--file", str(DATA / "dependent-functions.json"), "--order", "4")
    assert text.startswith("rank_exact=2 rank_series=2 certified=false")
    code, text = call("rank", "--file", str(DATA / "dependent-functions.json"))
    assert text.startswith("rank_exact=2 rank_series=2 certified=true")


def test_member_command():
    code, text = call("member", "--file", str(DATA / "classic.json"), "--u", "1,0,0,1")
    assert code == 0 and text.startswith("member=true relation=[")
    assert call("member", "--file", str(DATA / "classic.json"), "--u", "2,0,0,1")[1] == "member=false\n"
    assert call("member", "--file", str(DATA / "classic.json"), "--u", "1,0")[0] == 2


def test_search_golden_table(tmp_path):
    report = tmp_path / "r.json"
    code, text = call("search", "--file", str(DATA / "classic.json"), "--box", "3", "--out", str(report))
    assert code == 0
    assert text == (DATA / "classic_table.txt").read_text()
    data = json.loads(report.read_text())
    assert data["v"] == 1 and data["rank"] == 4 and data["bound"] == 81
    assert data["within_bound"] is True and len(data["cosets"]) == 7
    assert sum(1 for c in data["cosets"] if c["xi"] == "family") == 1


def test_search_dependent_generators(capsys):
    code, _ = call("search", "--file", str(DATA / "dependent-gens.json"), "--box", "2")
    assert code == 3
    assert "dependent: g2" in capsys.readouterr().err


def test_malformed_inputs(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call("search", "--file", str(bad))[0] == 2
    bad.write_text(json.dumps({"v": 2, "n": 2}))
    assert call("search", "--file", str(bad))[0] == 2
    inst = json.loads((DATA / "classic.json").read_text())
    inst["coefficients"][0] = {"num": [], "den": [1]}
    bad.write_text(json.dumps(inst))
    assert call("search", "--file", str(bad))[0] == 2
    assert call("search", "--file", str(tmp_path / "missing.json"))[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("bounds", "--n", "two", "--r", "1")[0] == 2


def test_report_round_trip():
    loaded = load_instance(DATA / "classic.json")
    text = dump_report(verify_bound(loaded.instance, 2))
    assert dump_report(parse_report(text)) == text


def test_report_rejects_inconsistent_flag():
    loaded = load_instance(DATA / "diagonal.json")
    data = json.loads(dump_report(verify_bound(loaded.instance, 1)))
    data["within_bound"] = False
    with pytest.raises(ValueError):
        parse_report(json.dumps(data))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "unitcosets.cli", "bounds", "--n", "2", "--r", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "theorem=81 corollary=81 degenerate_subsets=0\n"
