import json

from mindex.cli import main


def test_verify_laguerre(tmp_path):
    out = tmp_path / "r.json"
    csv = tmp_path / "r.csv"
    code = main(["verify", "--family", "L", "--indices", "1I", "--g", "1", "--y", "min",
                 "--nmax", "8", "--out", str(out), "--csv", str(csv)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["verdict"] == "pass" and data["L"] == 2
    assert csv.read_text().startswith("n,k,r")


def test_verify_askey_wilson(tmp_path):
    out = tmp_path / "aw.json"
    code = main(["verify", "--family", "AW", "--indices", "1I", "--a", "1/2,1/3,1/5,1/7",
                 "--t", "1/2", "--y", "min", "--nmax", "6", "--out", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["L"] == 2


def test_usage_errors_exit_1(capsys):
    assert main(["verify", "--family", "L", "--indices", "1I,1I", "--g", "1"]) == 1
    assert "DuplicateSeed" in capsys.readouterr().err
    assert main(["verify", "--family", "L", "--g", "0.5"]) == 1
    assert main(["verify", "--family", "Q"]) == 1
    assert main([]) == 1


def test_inconsistent_exit_2(tmp_path):
    out = tmp_path / "neg.json"
    code = main(["verify", "--family", "L", "--g", "7/3", "--x", "0,1", "--out", str(out)])
    assert code == 2
    data = json.loads(out.read_text())
    assert data["verdict"] == "inconsistent"


def test_appendixb(tmp_path):
    assert main(["appendixb", "L.Ex1", "--g", "1", "--out", str(tmp_path / "a.json")]) == 0
    assert main(["appendixb", "L.Ex3", "--g", "5/2", "--out", str(tmp_path / "b.json")]) == 0
    assert main(["appendixb", "--equiv", "L", "--g", "7/3", "--out", str(tmp_path / "c.json")]) == 0
    assert main(["appendixb", "Z.Ex9"]) == 1


def test_calibrate(capsys):
    assert main(["calibrate", "--family", "L", "--g", "1"]) == 0
    assert '"schema": 1' in capsys.readouterr().out


SWEEP = """
[defaults]
family = "L"
g = "7/3"
nmax = 4

[[instance]]
indices = "1I"

[[instance]]
indices = "1I,2II"
y = "1,1"

[[instance]]
family = "W"
a = ["1/3", "2/7", "3/5", "5/11"]
indices = "2I"
"""


def test_sweep_and_resume(tmp_path):
    cfg = tmp_path / "sweep.toml"
    cfg.write_text(SWEEP)
    out = tmp_path / "reports"
    assert main(["sweep", str(cfg), "--out", str(out)]) == 0
    index = json.loads((out / "index.json").read_text())
    assert len(index["instances"]) == 3
    assert all(i["verdict"] == "pass" for i in index["instances"])
    first = {p.name: p.stat().st_mtime_ns for p in out.glob("*.json") if p.name != "index.json"}
    assert len(first) == 3
    assert main(["sweep", str(cfg), "--out", str(out)]) == 0
    again = {p.name: p.stat().st_mtime_ns for p in out.glob("*.json") if p.name != "index.json"}
    assert first == again


def test_sweep_reports_inconsistency(tmp_path):
    cfg = tmp_path / "neg.toml"
    cfg.write_text('[[instance]]\nfamily = "L"\ng = "7/3"\nx = "0,1"\nnmax = 3\n')
    assert main(["sweep", str(cfg), "--out", str(tmp_path / "o")]) == 2


def test_sweep_bad_file(tmp_path):
    cfg = tmp_path / "bad.toml"
    cfg.write_text("[[instance]\n")
    assert main(["sweep", str(cfg), "--out", str(tmp_path / "o")]) == 1
    cfg.write_text('[[instance]]\nfamily = "L"\ng = 0.5\n')
    assert main(["sweep", str(cfg), "--out", str(tmp_path / "o")]) == 1
