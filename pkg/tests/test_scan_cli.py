import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from comax.cli import main
from comax.scan import apply_filter, compute_record, scan_range, write_csv, write_json


def run_cli(*argv: str) -> tuple[int, str, str]:
    proc = subprocess.run(
        [sys.executable, "-m", "comax.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_compute_record():
    rec = compute_record(12)
    assert rec.n == 12
    assert rec.factorization == "2^2*3"
    assert rec.laplacian_integral is True
    assert rec.distinct_prime_count == 2
    assert rec.residual_degree == 0
    assert rec.wall_time_ms == 0

    rec30 = compute_record(30)
    assert rec30.laplacian_integral is False
    assert rec30.residual_degree == 4
    assert (rec30.residual_degree == 0) == rec30.laplacian_integral


def test_scan_range_validation():
    with pytest.raises(ValueError):
        list(scan_range(10, 3))
    with pytest.raises(ValueError):
        list(scan_range(2, 5))


def test_scan_filter():
    records = list(scan_range(3, 40))
    integral = list(apply_filter(records, "integral"))
    nonintegral = list(apply_filter(records, "nonintegral"))
    assert len(integral) + len(nonintegral) == len(records)
    assert all(r.laplacian_integral for r in integral)
    assert {r.n for r in nonintegral} == {30}  # the only 3-prime n <= 40


def test_scan_workers_deterministic():
    solo = io.StringIO()
    write_csv(scan_range(3, 120, workers=1), solo)
    multi = io.StringIO()
    write_csv(scan_range(3, 120, workers=4), multi)
    assert solo.getvalue() == multi.getvalue()


def test_write_json_roundtrip():
    buf = io.StringIO()
    total, integral = write_json(scan_range(3, 12), buf)
    rows = json.loads(buf.getvalue())
    assert total == 10 and len(rows) == 10
    assert rows[0]["n"] == 3
    assert all(
        set(r) == {
            "n",
            "factorization",
            "laplacian_integral",
            "distinct_prime_count",
            "residual_degree",
            "wall_time_ms",
        }
        for r in rows
    )


def test_cli_spectrum_pretty(capsys):
    assert main(["spectrum", "6", "--format", "pretty"]) == 0
    assert capsys.readouterr().out.strip() == "6^2 5 3 2 0"


def test_cli_spectrum_json(capsys):
    assert main(["spectrum", "4", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["integer_eigenvalues"] == [[4, 2], [2, 1], [0, 1]]
    assert data["laplacian_integral"] is True
    assert data["residual_poly"] is None


def test_cli_spectrum_csv(capsys):
    assert main(["spectrum", "30", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "value,multiplicity,exact"
    assert lines[1] == "30,8,true"
    assert sum(1 for ln in lines[1:] if ln.endswith("false")) == 4


def test_cli_spectrum_rejects_small_n():
    code, _, err = run_cli("spectrum", "2")
    assert code == 2
    assert "at least 3" in err


def test_cli_verify_composite():
    code, out, _ = run_cli("verify", "12")
    assert code == 0, out
    assert "all executed checks agree" in out


def test_cli_verify_prime():
    code, out, _ = run_cli("verify", "7")
    assert code == 0, out
    assert "[skip] algebraic-connectivity" in out


def test_cli_verify_prime_power_detects_multiplicity_failure():
    # the n/rad multiplicity law genuinely fails at prime powers; verify
    # must report the disagreement
    code, out, _ = run_cli("verify", "9")
    assert code == 1
    assert "phi-multiplicity" in out


def test_cli_verify_rejects_small_n():
    code, _, _ = run_cli("verify", "2")
    assert code == 2


def test_cli_scan_roundtrip(tmp_path: Path):
    out = tmp_path / "scan.csv"
    code, _, err = run_cli(
        "scan", "--from", "3", "--to", "40", "--out", str(out)
    )
    assert code == 0
    assert "38 written" in err
    lines = out.read_text().strip().splitlines()
    assert lines[0] == (
        "n,factorization,laplacian_integral,distinct_prime_count,"
        "residual_degree,wall_time_ms"
    )
    assert lines[1] == "3,3,true,1,0,0"
    row30 = next(ln for ln in lines if ln.startswith("30,"))
    assert row30 == "30,2*3*5,false,3,4,0"


def test_cli_scan_json(tmp_path: Path):
    out = tmp_path / "scan.json"
    code, _, _ = run_cli("scan", "--from", "3", "--to", "10", "--out", str(out))
    assert code == 0
    rows = json.loads(out.read_text())
    assert [r["n"] for r in rows] == list(range(3, 11))


def test_cli_scan_bad_range():
    code, _, _ = run_cli("scan", "--from", "10", "--to", "3")
    assert code == 2


def test_cli_scan_unwritable_path(tmp_path: Path):
    code, _, _ = run_cli(
        "scan", "--from", "3", "--to", "5", "--out",
        str(tmp_path / "missing" / "scan.csv"),
    )
    assert code == 3


def test_cli_g2(capsys):
    assert main(["g2", "15", "kappa"]) == 0
    assert "kappa(G2) = 2, bound = 2, tight" in capsys.readouterr().out

    assert main(["g2", "105", "kappa"]) == 0
    out = capsys.readouterr().out
    assert "bound = 8" in out and "kappa(G2) = 8" in out

    assert main(["g2", "12", "components"]) == 0
    assert capsys.readouterr().out.strip() == "2"

    assert main(["g2", "12", "export"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "2 3"
    assert all(len(ln.split()) == 2 for ln in lines)


def test_cli_g2_prime_is_usage_error():
    code, _, err = run_cli("g2", "7", "export")
    assert code == 2
    assert "empty" in err


def test_cli_g2_kappa_nonsquarefree(capsys):
    assert main(["g2", "12", "kappa"]) == 0
    out = capsys.readouterr().out
    assert "kappa(G2) = 0" in out and "not squarefree" in out


def test_nonintegral_scan_hits_still_verify_clean():
    # non-integrality is about the nature of the roots, not an error: every
    # n a scan flags non-integral must still agree with the dense oracle
    for n in (30, 60, 210):
        assert not compute_record(n).laplacian_integral
        code, out, _ = run_cli("verify", str(n))
        assert code == 0, (n, out)


def test_cli_graph_exports(capsys):
    assert main(["graph", "4", "edges"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["0 1", "0 3", "1 2", "1 3", "2 3"]

    assert main(["graph", "12", "classes"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[0]["divisor"] == 1 and rows[0]["size"] == 4


def test_console_script_entry_point():
    proc = subprocess.run(
        ["comax", "spectrum", "6"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "6^2 5 3 2 0"
