import json
import shutil
import subprocess
import sys

import pytest

from hallbase.cli import main
from hallbase.corpus import bundled_corpus_dir

CORPUS = bundled_corpus_dir()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_exceptional(capsys):
    code, out, _ = run(capsys, "verify-exceptional", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] is True and len(data["families"]) == 7


def test_verify_exceptional_f4_at_two(capsys):
    code, out, _ = run(capsys, "verify-exceptional", "--family", "F4", "--qmin", "2")
    assert code == 1
    assert "FAILS at q = 2" in out


def test_verify_exceptional_json_and_output_file(capsys, tmp_path):
    target = tmp_path / "e8.json"
    code, out, _ = run(capsys, "verify-exceptional", "--family", "E8", "--format", "json", "--output", str(target))
    assert code == 0
    data = json.loads(out)
    assert [f["family"] for f in data["families"]] == ["E8"]
    assert json.loads(target.read_text()) == data
    assert data["families"][0]["certificates"][0]["verdict"] is True


def test_unknown_family_is_usage_error(capsys):
    code, _, err = run(capsys, "verify-exceptional", "--family", "B2")
    assert code == 2 and "unknown family" in err


def test_basesize_degree7(capsys):
    code, out, _ = run(capsys, "basesize", str(CORPUS / "sl32.grp"), str(CORPUS / "sl32_line.grp"),
                       "--pi", "2,3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["group", "subgroup", "pi", "hall", "solvable", "order", "index", "kernel_order", "base",
                          "witnesses", "min_order_below", "certificate_verified", "reg_5", "q_exact_by_c"]
    assert data["base"] == 3 and data["reg_5"] >= 5 and data["hall"] and data["solvable"]


def test_basesize_sym3(capsys):
    code, out, _ = run(capsys, "basesize", str(CORPUS / "sym3.grp"), str(CORPUS / "sym3_s2.grp"))
    assert code == 0 and "base size 2" in out


def test_basesize_non_hall_fails(capsys):
    code, out, _ = run(capsys, "basesize", str(CORPUS / "sym3.grp"), str(CORPUS / "sym3_s2.grp"), "--pi", "2,3")
    assert code == 1 and "hall=False" in out


def test_basesize_degree_mismatch(capsys, tmp_path):
    bad = tmp_path / "h.grp"
    bad.write_text("degree 4\ngen (1 2)\n")
    code, _, err = run(capsys, "basesize", str(CORPUS / "sym3.grp"), str(bad))
    assert code == 2 and "degree" in err


def test_resource_limits(capsys):
    pair = [str(CORPUS / "sl42.grp"), str(CORPUS / "sl42_plane.grp")]
    assert run(capsys, "basesize", *pair, "--cap", "1000")[0] == 3
    assert run(capsys, "basesize", *pair, "--budget", "50")[0] == 3


def test_bad_arguments(capsys):
    assert run(capsys, "basesize")[0] == 2
    assert run(capsys, "basesize", "a", "b", "--m", "0")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_fpr_and_qhat(capsys):
    pair = [str(CORPUS / "sym3.grp"), str(CORPUS / "sym3_s2.grp")]
    code, out, _ = run(capsys, "fpr", *pair, "--format", "json")
    assert code == 0
    assert [r["fpr"] for r in json.loads(out)["classes"]] == ["1", "1/3", "0"]
    code, out, _ = run(capsys, "qhat", *pair, "--format", "json", "--c", "2")
    data = json.loads(out)
    assert code == 0 and data["q_hat_by_c"] == {"1": "1", "2": "1/3"} and data["concluded_c"] == 2


def test_props_bundled(capsys):
    code, out, _ = run(capsys, "props")
    assert code == 0 and "0 failed" in out


def test_props_reports_false_hall_declaration(capsys, tmp_path):
    for name in ("sym3.grp", "sym3_s2.grp"):
        shutil.copy(CORPUS / name, tmp_path / name)
    (tmp_path / "manifest.txt").write_text("case wrong group=sym3.grp subgroup=sym3_s2.grp pi=2,3\n")
    code, out, _ = run(capsys, "props", "--corpus", str(tmp_path))
    assert code == 1
    assert "FAIL  hall-declaration       wrong" in out


def test_props_empty_corpus(capsys, tmp_path):
    code, _, err = run(capsys, "props", "--corpus", str(tmp_path))
    assert code == 0 and "warning" in err
    (tmp_path / "manifest.txt").write_text("# nothing here\n")
    code, _, err = run(capsys, "props", "--corpus", str(tmp_path))
    assert code == 0 and "warning" in err


def test_report(capsys):
    code, out, _ = run(capsys, "report", "--format", "json")
    assert code == 0
    rows = {r["case"]: r for r in json.loads(out)["cases"]}
    assert rows["sl42_plane"]["base"] == 4 and rows["sl42_plane"]["reg_5"] == 1917


def test_json_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "hallbase.cli", "basesize", str(CORPUS / "sl33.grp"),
           str(CORPUS / "sl33_point.grp"), "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["base"] == 4


@pytest.mark.skipif(shutil.which("hallbase") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["hallbase", "verify-exceptional", "--family", "G2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verdict: OK" in proc.stdout
