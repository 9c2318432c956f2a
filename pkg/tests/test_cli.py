import json
import os

import pytest

from biskit.boolean import check_boolean
from biskit.cli import Report, main
from biskit.core import parse_semigroup
from biskit.corpus import corpus_text


@pytest.fixture
def data(tmp_path):
    def path(name):
        p = tmp_path / name
        p.write_text(corpus_text(name))
        return str(p)

    return path


def test_analyze_text(data, capsys):
    assert main(["analyze", data("i2.ist")]) == 0
    out = capsys.readouterr().out
    assert "validity: True" in out
    assert "zero_simplifying: True" in out
    assert "decomposition_signature: [[2, 1, 'trivial']]" in out


def test_analyze_json_roundtrip(data, capsys):
    assert main(["analyze", data("i2xz2zero.ist"), "--format", "json"]) == 0
    text = capsys.readouterr().out
    rep = Report.from_json(text)
    assert rep == Report(**json.loads(text))
    assert rep.validity
    assert rep.type_monoid_rank == 2
    assert rep.tau[-1] == [12, [2, 1]]
    assert rep.timings == {}


def test_analyze_is_deterministic(data, capsys):
    path = data("m2z2zero.ist")
    outs = []
    for _ in range(2):
        assert main(["analyze", path, "--format", "json"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_analyze_reports_nonboolean(data, capsys):
    assert main(["analyze", data("chain3.ist")]) == 0
    out = capsys.readouterr().out
    assert "boolean: False" in out
    assert "boolean_failure: ['complement', 1, 2]" in out


def test_analyze_invalid_table(tmp_path, capsys):
    bad = tmp_path / "bad.ist"
    bad.write_text("n 2\n0 1\n0 0\n")
    assert main(["analyze", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "validity: False" in out


def test_analyze_timings_flag(data, capsys):
    assert main(["analyze", data("i2.ist"), "--timings"]) == 0
    out = capsys.readouterr().out
    assert "check_boolean" in out


def test_booleanize_reingests(data, tmp_path, capsys):
    out_path = str(tmp_path / "bb2.ist")
    assert main(["booleanize", data("b2.ist"), "--out", out_path]) == 0
    text = open(out_path).read()
    t = parse_semigroup(text)
    assert check_boolean(t).boolean
    assert t.size == 7
    assert "# beta: 1 -> " in text


def test_booleanize_stdout(data, capsys):
    assert main(["booleanize", data("chain3.ist")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("n 4\n")


def test_decompose(data, capsys):
    assert main(["decompose", data("m2z2zero.ist")]) == 0
    out = capsys.readouterr().out
    assert "signature: (2 x Z2)" in out
    assert "verified: True" in out


def test_decompose_rejects_nonboolean(data, capsys):
    assert main(["decompose", data("b2.ist")]) == 1


def test_type_json(data, capsys):
    assert main(["type", data("i2xz2zero.ist"), "--format", "json"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got["rank"] == 2
    assert [12, [2, 1]] in got["tau"]


def test_iso_booleanization_mode(data, capsys):
    assert main(["iso", data("chain3.ist"), data("antichain3.ist")]) == 0
    assert "isomorphic: True" in capsys.readouterr().out
    assert main(["iso", data("b2.ist"), data("z2zero.ist")]) == 0
    assert "isomorphic: False" in capsys.readouterr().out


def test_iso_direct_mode(data, capsys):
    assert (
        main(["iso", data("i2.ist"), data("i2.ist"), "--mode", "direct"]) == 0
    )
    out = capsys.readouterr().out
    assert "isomorphic: True" in out
    assert "witness: [0, 1, 2, 3, 4, 5, 6]" in out


def test_iso_direct_respects_size_cap(data, capsys, monkeypatch):
    monkeypatch.setenv("BISKIT_SIZE_CAP", "3")
    rc = main(["iso", data("i2.ist"), data("i2.ist"), "--mode", "direct"])
    assert rc == 1
    assert "SizeCapExceeded" in capsys.readouterr().err


def test_verify_good_file(data, capsys):
    assert main(["verify", data("z2zero.ist")]) == 0
    out = capsys.readouterr().out
    assert "wedge: pass" in out
    assert "FAIL" not in out


def test_verify_grp_file(data, capsys):
    assert main(["verify", data("conn2z2.grp")]) == 0
    out = capsys.readouterr().out
    assert "bordeaux1: pass" in out


def test_verify_detects_mutation(data, tmp_path, capsys):
    text = corpus_text("i2.ist")
    rows = [ln for ln in text.splitlines() if ln and not ln.startswith(("#", "n "))]
    tab = [ln.split() for ln in rows]
    tab[5][5] = "6"  # identity row corrupted
    bad = tmp_path / "mut.ist"
    bad.write_text("n 7\n" + "\n".join(" ".join(r) for r in tab) + "\n")
    assert main(["verify", str(bad)]) == 1


def test_verify_without_target_is_usage_error(capsys):
    assert main(["verify"]) == 2


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_missing_file_is_reported(capsys):
    assert main(["analyze", "/nonexistent/x.ist"]) == 1
