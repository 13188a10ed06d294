"""Command-line interface: subcommands, exit codes, error payloads, formats."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from quotsurf.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    return code, json.loads(out), err


def test_surface_fixtures(capsys):
    expected = {
        "k3_kummer.json": "K3",
        "hyperelliptic.json": "Hyperelliptic",
        "ruled_elliptic.json": "RuledElliptic",
        "rational.json": "Rational",
        "enriques.json": "Enriques",
    }
    for name, label in expected.items():
        code, doc, _ = run_json(
            capsys, "surface", "--input", str(FIXTURES / name))
        assert code == 0
        assert doc["surface_type"] == label, name
    code, doc, _ = run_json(
        capsys, "surface", "--input", str(FIXTURES / "enriques.json"))
    assert doc["group_order"] == 8
    assert doc["enriques_index"] == 2
    assert doc["group_order"] == 2 * doc["kernel_det_order"]


def test_surface_scalar_i_example(capsys, tmp_path):
    # quotient by the scalar zeta_4 action over the Gaussian ring
    doc = {"ring": {"d": 1, "f": 1},
           "generators": [{"linear": [[[0, 1], 0], [0, [0, 1]]]}]}
    path = tmp_path / "scalar_i.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_json(capsys, "surface", "--input", str(path))
    assert code == 0
    assert out["surface_type"] == "Rational"


def test_group_subcommand(capsys):
    code, doc, _ = run_json(
        capsys, "group", "--input", str(FIXTURES / "enriques.json"))
    assert code == 0
    assert doc["order"] == 8
    assert doc["translation_order"] == 2
    assert doc["linear_order"] == 4
    assert doc["label"] == "HC2(2)"
    assert doc["sl_label"] == "K2"
    assert doc["s"] == 2


def test_element_subcommand(capsys):
    code, doc, _ = run_json(
        capsys, "element", "--input", str(FIXTURES / "gauss_element.json"))
    assert code == 0
    rows = doc["elements"]
    assert [r["order"] for r in rows] == [4, 2]
    assert rows[0]["det_order"] == 4
    assert rows[0]["eig_class"] == "eigenvalue_one"
    assert rows[1]["affine_order"] == 2
    assert rows[1]["translation"] == ["1/2", "1/2", 0, 0]


def test_element_reports_infinite_order_as_null(capsys):
    code, doc, _ = run_json(
        capsys, "element", "--input", str(FIXTURES / "infinite_order.json"))
    assert code == 0
    assert doc["elements"][0]["order"] is None
    assert doc["elements"][0]["eigenvalues"] is None


def test_fixed_points_subcommand(capsys):
    code, doc, _ = run_json(
        capsys, "fixed-points", "--input", str(FIXTURES / "k3_kummer.json"))
    assert code == 0
    assert doc["elements"][0]["fixed_set"]["count"] == 16

    code, doc, _ = run_json(
        capsys, "fixed-points", "--input", str(FIXTURES / "k3_kummer.json"),
        "--element", "0")
    assert code == 0
    assert doc["fixed_set"]["count"] == 16

    code, doc, _ = run_json(
        capsys, "fixed-points", "--input", str(FIXTURES / "rational.json"),
        "--common")
    assert code == 0
    assert doc["fixed_set"]["kind"] == "finite"
    assert doc["fixed_set"]["count"] == 4


def test_fixed_points_flag_validation(capsys):
    code, doc, _ = run_json(
        capsys, "fixed-points", "--input", str(FIXTURES / "k3_kummer.json"),
        "--element", "5")
    assert code == 1
    assert doc["error"] == "ValueError"
    code, doc, _ = run_json(
        capsys, "fixed-points", "--input", str(FIXTURES / "k3_kummer.json"),
        "--element", "0", "--common")
    assert code == 1


def test_exit_codes_and_error_payloads(capsys):
    # parse error: malformed JSON
    code, doc, err = run_json(
        capsys, "group", "--input", str(FIXTURES / "bad_syntax.json"))
    assert code == 1
    assert doc["error"] == "ValueError"
    assert "invalid JSON" in doc["detail"]
    assert err.strip()  # one-line summary on stderr

    # parse error: entries not integral in the declared ring
    code, doc, _ = run_json(
        capsys, "group", "--input", str(FIXTURES / "bad_nonintegral.json"))
    assert code == 1
    assert doc["error"] == "ValueError"
    assert doc["detail"].startswith("generator 0:")

    # domain error: infinite-order generator cannot be closed
    code, doc, _ = run_json(
        capsys, "group", "--input", str(FIXTURES / "infinite_order.json"))
    assert code == 2
    assert doc["error"] == "InfiniteOrderGenerator"

    # domain error: cap exceeded
    code, doc, _ = run_json(
        capsys, "group", "--input", str(FIXTURES / "enriques.json"),
        "--cap", "3")
    assert code == 2
    assert doc["error"] == "GroupExceedsCap"

    # missing file
    code, doc, _ = run_json(capsys, "group", "--input", "no_such_file.json")
    assert code == 1

    # usage errors are parse errors, not crashes
    code, doc, _ = run_json(capsys, "no-such-command")
    assert code == 1


def test_catalog_verify(capsys):
    code, doc, _ = run_json(capsys, "catalog", "verify")
    assert code == 0
    assert doc["summary"]["total_entries"] == 68
    assert doc["summary"]["verified"] == 41
    assert doc["summary"]["failures"] == []


def test_catalog_dump(capsys):
    code, doc, _ = run_json(capsys, "catalog", "dump")
    assert code == 0
    assert len(doc["entries"]) == 68
    assert len(doc["duplicate_sets"]) == 8
    assert doc["defects"]


def test_catalog_realize(capsys):
    code, doc, _ = run_json(capsys, "catalog", "realize", "--label", "K7")
    assert code == 0
    assert doc["label"] == "K7"
    assert doc["ring"] == {"d": 3, "f": 1}
    assert len(doc["generators"]) >= 1

    # unit parameter
    code, doc, _ = run_json(capsys, "catalog", "realize", "--label", "K4",
                            "--param", "b1=0,1")
    assert code == 0

    # not realizable -> domain error
    code, doc, _ = run_json(capsys, "catalog", "realize", "--label", "K8")
    assert code == 2
    assert doc["error"] == "NotRealizable"

    # unknown label -> parse error
    code, doc, _ = run_json(capsys, "catalog", "realize", "--label", "NOPE")
    assert code == 1
    assert doc["error"] == "ValueError"

    # non-unit b1 -> domain error
    code, doc, _ = run_json(capsys, "catalog", "realize", "--label", "K4",
                            "--param", "b1=2")
    assert code == 2
    assert doc["error"] == "NotAUnit"


def test_json_output_is_deterministic(capsys):
    args = ("surface", "--input", str(FIXTURES / "enriques.json"))
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    doc = json.loads(out1)
    assert list(doc) == sorted(doc)  # sorted keys at the top level


def test_text_format(capsys):
    code, out, _ = run_cli(
        capsys, "group", "--input", str(FIXTURES / "enriques.json"),
        "--format", "text")
    assert code == 0
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)
    assert "order: 8" in out
    assert "label: HC2(2)" in out


def test_quiet_flag(capsys):
    code, out, err = run_cli(
        capsys, "surface", "--input", str(FIXTURES / "k3_kummer.json"),
        "--quiet")
    assert code == 0
    assert out == ""
    # errors still set the exit code when quiet
    code, out, _ = run_cli(
        capsys, "group", "--input", str(FIXTURES / "infinite_order.json"),
        "--quiet")
    assert code == 2


def test_subprocess_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "quotsurf.cli", "surface",
         "--input", str(FIXTURES / "enriques.json")],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["surface_type"] == "Enriques"
