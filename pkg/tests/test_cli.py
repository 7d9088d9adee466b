import csv
import json
import subprocess
import sys

import pytest

from cfcn.bench import CSV_HEADER, GraphSpec, run_bench, summarize, to_csv
from cfcn.cli import main
from cfcn.graph import generate, parse_edge_list, read_edge_list
from cfcn.oracle import verify_cfcn


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def strip_timing(csv_text):
    rows = list(csv.reader(csv_text.splitlines()))
    col = CSV_HEADER.index("wall_time_ms")
    return [r[:col] + r[col + 1:] for r in rows]


class TestColor:
    def test_path5(self, write, tmp_path):
        src = write("p5.txt", "0 1\n1 2\n2 3\n3 4\n")
        out = tmp_path / "c.json"
        assert main(["color", src, "--seed", "1", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["n"] == 5 and len(doc["colors"]) == 5
        assert set(doc["ledger"]) == {"layer_colors", "hypergraph_colors", "fresh_color"}
        assert set(doc["stats"]) >= {"k_target", "layers", "K", "doublings", "rounds", "total_colors", "seed"}
        assert doc["stats"]["seed"] == 1
        assert verify_cfcn(read_edge_list(src), doc["colors"]).valid

    def test_empty(self, write, capsys):
        assert main(["color", write("e.txt", "")]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["n"] == 0 and doc["colors"] == []

    def test_self_loop(self, write, capsys):
        assert main(["color", write("bad.txt", "0 1\n2 2\n")]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["color", "/nonexistent/graph.txt"]) == 2

    def test_budget_exit_code(self, write, monkeypatch, capsys):
        import cfcn.cli
        from cfcn.hypergraph import BudgetExhausted

        def boom(*a, **k):
            raise BudgetExhausted(10, 1, 0, 2)
        monkeypatch.setattr(cfcn.cli, "cfcn_color", boom)
        assert main(["color", write("g.txt", "0 1\n")]) == 3
        assert "violated" in capsys.readouterr().err

    def test_byte_identical(self, tmp_path):
        g = tmp_path / "g.txt"
        assert main(["gen", "trap", "24", "2", "--out", str(g)]) == 0
        outs = []
        for i in range(2):
            out = tmp_path / f"c{i}.json"
            assert main(["color", str(g), "--seed", "5", "--out", str(out)]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]
        assert json.loads(outs[0])["stats"]["K"] > 0


class TestVerify:
    def test_valid(self, write):
        assert main(["verify", write("k3.txt", "0 1\n1 2\n0 2\n"), write("c.json", "[0, 0, 1]")]) == 0

    def test_invalid(self, write, capsys):
        assert main(["verify", write("k3.txt", "0 1\n1 2\n0 2\n"), write("c.json", '{"colors": [0, 0, 0]}')]) == 1
        assert "vertex 0" in capsys.readouterr().out

    def test_mismatch(self, write, capsys):
        code = main(["verify", write("k3.txt", "0 1\n1 2\n0 2\n"), write("c.json", "[0, 1]")])
        assert code == 2
        assert "2 entries" in capsys.readouterr().err

    def test_roundtrip_with_color(self, write, tmp_path):
        g = write("g.txt", "0 1\n1 2\n2 3\n3 0\n0 2\n")
        out = tmp_path / "c.json"
        main(["color", g, "--out", str(out)])
        assert main(["verify", g, str(out)]) == 0


class TestExact:
    def test_k4(self, write, capsys):
        assert main(["exact", write("k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")]) == 0
        assert capsys.readouterr().out.strip() == "2"

    def test_single_vertex(self, write, capsys):
        assert main(["exact", write("v.txt", "n 1\n")]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_exceeds(self, write, capsys):
        assert main(["exact", write("k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"), "--max-colors", "1"]) == 0
        assert capsys.readouterr().out.strip() == "exceeds max"

    def test_too_big(self, write, capsys):
        text = "".join(f"{i} {i + 1}\n" for i in range(12))
        assert main(["exact", write("p13.txt", text)]) == 2
        assert "12" in capsys.readouterr().err


class TestGen:
    def test_path5(self, capsys):
        assert main(["gen", "path", "5"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines() == ["0 1", "1 2", "2 3", "3 4"]

    def test_gnp_deterministic(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        main(["gen", "gnp", "100", "0.1", "42", "--out", str(a)])
        main(["gen", "gnp", "100", "0.1", "42", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()
        assert parse_edge_list(a.read_text()) == generate("gnp", 100, 0.1, 42)

    def test_cycle3(self, capsys):
        main(["gen", "cycle", "3"])
        assert parse_edge_list(capsys.readouterr().out) == generate("complete", 3)

    def test_isolated_tail_gets_header(self, capsys):
        main(["gen", "gnp", "10", "0", "1"])
        assert capsys.readouterr().out == "n 10\n"

    @pytest.mark.parametrize("args", [["gnp", "10", "2.0", "1"], ["blob", "3"], ["path"]])
    def test_invalid(self, args, capsys):
        assert main(["gen", *args]) == 2


class TestBench:
    def test_gnp_grid(self, tmp_path):
        out = tmp_path / "b.csv"
        code = main(["bench", "--gnp-grid", "200:0.02,0.05,0.1", "--seeds", "1,2,3", "--out", str(out), "--baseline"])
        assert code == 0
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert len(rows) == 9
        assert list(rows[0]) == CSV_HEADER
        assert [(r["p"], r["seed"]) for r in rows[:3]] == [("0.02", "1"), ("0.02", "2"), ("0.02", "3")]
        for r in rows:
            assert int(r["total_colors"]) >= 1 and int(r["baseline_colors"]) >= 1

    def test_paths_ratio(self, capsys):
        assert main(["bench", "--graph", "path:40", "--seeds", "1,2"]) == 0
        rows = list(csv.DictReader(capsys.readouterr().out.splitlines()))
        for r in rows:
            assert r["delta"] == "2"
            assert float(r["ratio"]) == float(r["total_colors"])

    def test_empty_sweep(self, tmp_path):
        out = tmp_path / "e.csv"
        assert main(["bench", "--out", str(out)]) == 0
        assert out.read_text() == ",".join(CSV_HEADER) + "\n"

    def test_ratio_absent_for_small_delta(self):
        rec = run_bench([GraphSpec("complete", (2,))], [1])[0]
        assert rec.delta == 1 and rec.ratio is None
        assert rec.csv_row()[-1] == ""

    def test_bad_spec(self, capsys):
        assert main(["bench", "--graph", "path:x"]) == 2
        assert main(["bench", "--gnp-grid", "200"]) == 2

    def test_deterministic_and_parallel(self):
        specs = [GraphSpec("regular", (128, 8)), GraphSpec("gnp", (100, "0.1")), GraphSpec("trap", (24, 2))]
        a = to_csv(run_bench(specs, [1, 2], baseline=True))
        b = to_csv(run_bench(specs, [1, 2], baseline=True, jobs=2))
        assert strip_timing(a) == strip_timing(b)

    def test_budget_failure_recorded(self, monkeypatch):
        import cfcn.bench
        from cfcn.hypergraph import BudgetExhausted

        def boom(*a, **k):
            raise BudgetExhausted(1, 1, 0, 2)
        monkeypatch.setattr(cfcn.bench, "cfcn_color", boom)
        recs = run_bench([GraphSpec("path", (5,))], [1])
        assert recs[0].failure == "budget"
        assert recs[0].csv_row()[CSV_HEADER.index("total_colors")] == "FAIL:budget"
        assert summarize(recs)["failures"] == 1


def test_module_entry_point(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("0 1\n1 2\n")
    res = subprocess.run([sys.executable, "-m", "cfcn", "color", str(g)], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["n"] == 3
