import csv
import io
import json

import pytest

from polyquot.cli import CSV_HEADER, run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_13_2(capsys):
    code, out, _ = call(capsys, "verify", "13", "2")
    assert code == 0
    assert "lc: 156" in out and "in_set: True" in out


def test_verify_json(capsys):
    code, out, _ = call(capsys, "verify", "23", "1", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["lc"] == 254 and d["branch"] == "(p^2-p)/2+1"


def test_wieferich(capsys):
    assert call(capsys, "wieferich", "--limit", "4000000")[:2] == (0, "1093 3511\n")
    code, out, _ = call(capsys, "wieferich", "--limit", "1100", "--format", "json")
    assert json.loads(out)["primes"] == [1093]


def test_lc_all_zero(capsys):
    code, out, _ = call(capsys, "lc", "5", "5")
    assert code == 0 and "lc: 0" in out


def test_lc_methods_json(capsys):
    _, out, _ = call(capsys, "lc", "11", "1", "--method", "bm", "--format", "json")
    d = json.loads(out)
    assert d["lc"] == 111 and "lc_gcd" not in d
    _, out, _ = call(capsys, "lc", "11", "1", "--method", "gcd", "--format", "json")
    d = json.loads(out)
    assert d["lc"] == d["minimal_poly_degree"] == 111 and "lc_bm" not in d


def test_quotient(capsys):
    assert call(capsys, "quotient", "5", "1", "10")[:2] == (0, "2\n")
    assert call(capsys, "quotient", "5", "6", "2")[:2] == (0, "3\n")


def test_predict(capsys):
    code, out, _ = call(capsys, "predict", "23", "3")
    assert code == 0
    assert out.startswith("528=p^2-1 275=(p^2+p)/2-1")
    _, out, _ = call(capsys, "predict", "13", "4", "--format", "json")
    assert json.loads(out)["exact"] is True


@pytest.mark.parametrize("argv", [
    ["verify", "15", "2"],          # composite p
    ["verify", "13", "0"],          # w < 1
    ["predict", "1093", "2"],       # Wieferich, theorem requested
    ["verify", "1093", "2"],
    ["verify", "5", "6"],           # unreduced w
    ["partition", "5", "10"],       # p | w
    ["quotient", "5", "2", "-1"],
    ["scan", "--max-p", "2", "--w", "odd"],
    ["wieferich", "--limit", "1"],
    ["generate", "4", "2"],
])
def test_invalid_input_exits_2(capsys, argv):
    assert run(argv) == 2
    assert "error" in capsys.readouterr().err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["generate", "5"])
    assert exc.value.code == 2


def test_verify_force_on_large_w(capsys):
    code, out, _ = call(capsys, "verify", "5", "6", "--force")
    assert code == 0 and "unreduced" in out


def test_generate_formats(capsys):
    _, bits, _ = call(capsys, "generate", "5", "2")
    assert len(bits) == 26 and bits.startswith("0001")
    _, hexed, _ = call(capsys, "generate", "5", "2", "--format", "hex")
    assert len(hexed.strip()) == 8
    _, js, _ = call(capsys, "generate", "5", "2", "--kind", "e", "--format", "json")
    assert json.loads(js)["kind"] == "e"


def test_partition_dump(capsys):
    code, out, _ = call(capsys, "partition", "3", "2")
    d = json.loads(out)
    assert code == 0
    assert d["D"] == [[1, 8], [2, 7], [4, 5]] and d["P"] == [0, 3, 6]
    assert all(d["facts"].values()) and d["facts_exhaustive"]
    assert set(d) >= {"p", "w", "D", "Q", "N", "P"}


def test_spectrum(capsys):
    assert call(capsys, "spectrum", "13", "2")[:2] == (0, "1 12 0\n")
    assert call(capsys, "spectrum", "11", "2")[:2] == (0, "1 0 0\n")


def test_scan_csv_schema(capsys):
    code, out, _ = call(capsys, "scan", "--max-p", "14", "--w", "all")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_HEADER
    first = dict(zip(rows[0], rows[1]))
    assert first["p"] == "3" and first["in_set"] == "true"
    assert all(len(r) == len(CSV_HEADER) for r in rows)


def test_scan_md_and_json(capsys):
    _, md, _ = call(capsys, "scan", "--max-p", "24", "--w", "one", "--out", "md")
    assert "| 23 | -1 | one | 254=(p^2-p)/2+1 | 1 |" in md
    assert "| 11 | 3 | one | 111=p^2-p+1 | 1 |" in md
    _, js, _ = call(capsys, "scan", "--max-p", "12", "--w", "odd", "--out", "json")
    d = json.loads(js)
    assert {r["lc"] for r in d["rows"] if r["p"] == 11} == {120}


def test_scan_kind_e_has_no_mismatch_exit(capsys):
    code, out, _ = call(capsys, "scan", "--max-p", "14", "--w", "odd", "--kind", "e")
    assert code == 0


def test_determinism_across_jobs(capsys):
    _, a, _ = call(capsys, "scan", "--max-p", "30", "--w", "all", "--out", "json")
    _, b, _ = call(capsys, "scan", "--max-p", "30", "--w", "all", "--out", "json", "--jobs", "3")
    assert a == b


def test_output_file(tmp_path, capsys):
    target = tmp_path / "seq.txt"
    assert run(["generate", "5", "2", "-o", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert len(target.read_text()) == 26
