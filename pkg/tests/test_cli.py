import json
import subprocess
import sys

import jsonschema
import pytest

from spcasimir.cli import main
from spcasimir.io import JSON_SCHEMA, json_decode, json_encode
from spcasimir.envelope import pbw_normalize


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_words_r1(capsys):
    code, out, _ = run(capsys, "words", "--r", "1")
    assert code == 0
    assert len(out.splitlines()) == 4


def test_words_r2(capsys):
    code, out, _ = run(capsys, "words", "--r", "2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 16
    assert sum(line.endswith("sign=-1") for line in lines) == 4


def test_words_claim_and_json(capsys):
    code, out, _ = run(capsys, "words", "--r", "2", "--claim", "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == 16


@pytest.mark.parametrize(
    "argv",
    [
        ["words", "--r", "0"],
        ["verify", "--m", "0"],
        ["casimir", "--m", "1"],
        ["casimir", "--m", "1", "--r", "1", "--format", "xml"],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as err:
        main(argv)
    assert err.value.code == 2


def test_casimir_text(capsys):
    code, out, _ = run(capsys, "casimir", "--m", "1", "--r", "1", "--normalize")
    assert code == 0
    assert out == "2·E+[1,1]E−[1,1] − 4·B[1,1] + 2·B[1,1]B[1,1]\n"


def test_casimir_json_validates(capsys):
    code, out, _ = run(capsys, "casimir", "--m", "2", "--r", "2", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), JSON_SCHEMA)


def test_theorem_and_reference_agree(capsys):
    outs = []
    for method in ("theorem", "reference"):
        code, out, _ = run(capsys, "casimir", "--m", "1", "--r", "1", "--method", method, "--normalize", "--format", "json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    p = json_decode(outs[0])
    assert json_encode(pbw_normalize(p), indent=2) + "\n" == outs[0]


def test_reference_guard(capsys):
    code, out, err = run(capsys, "casimir", "--m", "4", "--r", "3", "--method", "reference")
    assert code == 2 and out == "" and "--force" in err


def test_latex_and_out_file(tmp_path, capsys):
    path = tmp_path / "d2.tex"
    code, out, _ = run(capsys, "--out", str(path), "casimir", "--m", "1", "--r", "1", "--normalize", "--format", "latex")
    assert code == 0 and out == ""
    assert path.read_text(encoding="utf-8") == "2E_{+11}E_{-11} - 4B_{11} + 2B_{11}B_{11}\n"


def test_verify_all_rank_two(capsys):
    code, out, _ = run(capsys, "verify", "--m", "2", "--max-r", "2", "--suite", "all")
    assert code == 0
    assert "FAIL" not in out
    assert out.splitlines()[-1].startswith(f"{out.count('PASS  ')} passed, 0 failed")


def test_verify_ktype_rank_one(capsys):
    code, out, _ = run(capsys, "verify", "--m", "1", "--suite", "ktype")
    assert code == 0


def test_verify_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("CASIMIR_THREADS", "2")
    code, _, _ = run(capsys, "verify", "--m", "1", "--max-r", "1", "--suite", "casimir")
    assert code == 0


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "spcasimir", "casimir", "--m", "2", "--r", "2", "--normalize", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_thread_count_does_not_change_output(capsys):
    outs = []
    for t in ("1", "2"):
        code, out, _ = run(capsys, "--threads", t, "casimir", "--m", "1", "--r", "2", "--method", "reference", "--format", "json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
