"""
test_orthorep.py
────────────────
The command line: verbs, report layout and exit statuses.

Usage:
    pytest test_orthorep.py
"""

import json

import pytest

from orthorep import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main

A37 = ["--nakayama", "3,2"]
M1_ARGS = ["--module", "L:0,1", "--module", "L:2,6", "--module", "L:0,2", "--module", "L:0,5"]


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, out


def result(capsys, *argv):
    status, out = run(capsys, *argv)
    doc = json.loads(out)
    assert doc["report_version"] == 1
    assert doc["verb"] == argv[0]
    return status, doc["result"]


# ── Nakayama literals ────────────────────────────────────────────────

def test_rigidity(capsys):
    status, body = result(capsys, "rigidity", *A37, "--module", "L:0,1")
    assert status == EXIT_OK
    assert body == {"rigidity": 4, "dd": {"L(0,1)": 4}}


def test_hom_and_ext(capsys):
    assert result(capsys, "hom", *A37, "--x", "L:0,7", "--y", "L:0,4") == (EXIT_OK, {"hom": 2})
    status, body = result(capsys, "ext", *A37, "--x", "L:0,1", "--y", "L:0,1", "--i", "5")
    assert body == {"i": 5, "ext": 1}


def test_syzygy_and_tau(capsys):
    _, body = result(capsys, "syzygy", *A37, "--x", "L:0,1", "--k", "-1")
    assert body["dims"] == [2, 2, 2]
    _, body = result(capsys, "tau", *A37, "--x", "L:0,2", "--n", "1")
    assert body["dims"] == [2, 2, 1]


def test_orthosym_verdicts(capsys):
    status, body = result(capsys, "orthosym", *A37, *M1_ARGS)
    assert status == EXIT_OK
    assert body["ortho_symmetric"] is True
    assert body["gorenstein"] == [{"tag": "finite", "value": 3}, {"tag": "finite", "value": 3}]
    status, body = result(capsys, "orthosym", *A37, "--module", "L:0,1")
    assert status == EXIT_FAIL
    assert body["ortho_symmetric"] is False


def test_assume_mueller_exact_renames_the_bound(capsys):
    _, body = result(capsys, "orthosym", *A37, *M1_ARGS)
    _, exact = result(capsys, "orthosym", *A37, *M1_ARGS, "--assume-mueller-exact")
    assert "domdim_lower" not in exact
    assert exact["domdim"] == body["domdim_lower"] == 3


def test_tilting_fails_on_periodic_module(capsys):
    status, body = result(capsys, "tilting", *A37, "--module", "L:0,1")
    assert status == EXIT_FAIL
    assert body["verdict"].startswith("Fail")


def test_mutate(capsys):
    status, body = result(capsys, "mutate", *A37, "--module", "L:0,2", "--module", "L:0,5",
                          "--pivot", "L:0,1", "--pivot", "L:2,6")
    assert status == EXIT_OK
    assert body["output"] == sorted(["L(0,7)", "L(1,7)", "L(2,7)", "L(1,1)", "L(0,6)", "L(0,2)", "L(0,5)"])


def test_classify(capsys):
    status, body = result(capsys, "classify", *A37)
    assert status == EXIT_OK
    assert len(body["classes"]) == 2
    assert "elapsed_s" not in body


def test_dd_table_markdown(capsys):
    status, out = run(capsys, "dd-table", *A37, "--format", "md")
    assert status == EXIT_OK
    assert "\n### dd(i,t) over A_{3,7}" in out


def test_markdown_report_carries_the_run_settings(capsys, monkeypatch):
    monkeypatch.delenv("ORTHOREP_SEED", raising=False)
    argv = ["hom", *A37, "--x", "L:0,1", "--y", "L:0,2", "--seed", "7"]
    _, out = run(capsys, *argv)
    doc = json.loads(out)
    status, md = run(capsys, *argv, "--format", "md")
    assert status == EXIT_OK
    header = md.splitlines()[0]
    assert f"orthorep {doc['tool_version']}" in header
    assert f"report {doc['report_version']}" in header
    assert "field Fp:101" in header
    assert "seed 7" in header
    assert f"cutoff {doc['cutoff']}" in header


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    status, out = run(capsys, "hom", *A37, "--x", "L:0,1", "--y", "L:0,1", "--out", str(target))
    assert status == EXIT_OK
    assert json.loads(target.read_text()) == json.loads(out)


# ── Files ────────────────────────────────────────────────────────────

def test_hom_between_module_files(capsys, tmp_path):
    algebra = tmp_path / "a2.toml"
    algebra.write_text("vertices = 2\narrows = [[0, 1]]\n")
    p0 = tmp_path / "p0.json"
    p0.write_text(json.dumps({"dims": [1, 1], "maps": {"0": [["1"]]}}))
    s0 = tmp_path / "s0.json"
    s0.write_text(json.dumps({"dims": [1, 0], "maps": {"0": []}}))
    status, body = result(capsys, "hom", "--algebra", str(algebra), "--x", str(p0), "--y", str(s0))
    assert (status, body) == (EXIT_OK, {"hom": 1})


# ── Exit statuses ────────────────────────────────────────────────────

BAD_INPUT = [
    ["rigidity", "--nakayama", "x", "--module", "L:0,1"],
    ["rigidity", "--nakayama", "3,2", "--module", "L:0,9"],
    ["hom", "--x", "L:0,1", "--y", "L:0,1"],
    ["classify", "--nakayama", "4,2"],
    ["hom", "--algebra", "missing.json", "--x", "a.json", "--y", "b.json"],
]


@pytest.mark.parametrize("argv", BAD_INPUT, ids=lambda a: " ".join(a))
def test_bad_input(capsys, argv):
    assert main(argv) == EXIT_INPUT
    assert "❌" in capsys.readouterr().err


def test_unknown_scope_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify-paper", "s9"])
    assert exc.value.code == 2
