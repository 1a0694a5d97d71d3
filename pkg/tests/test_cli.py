"""Tests for the command line entry point."""

import json

import pytest

import manage
from config import settings
from services import census_service
from services.bench_service import COLUMNS


@pytest.fixture(autouse=True)
def restore_oracle_cap(monkeypatch):
    monkeypatch.setattr(settings, "ORACLE_CAP", settings.ORACLE_CAP)


def _run(capsys, *argv):
    code = manage.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEnumerate:
    def test_count_format(self, capsys):
        code, out, err = _run(capsys, "enumerate", "--gen", "path", "--n", "4", "--class", "forest",
                              "--format", "count")
        assert code == manage.EXIT_OK
        assert out == "7\n"
        assert "# count=7 class=forest" in err

    def test_lines(self, capsys):
        code, out, _ = _run(capsys, "enumerate", "--gen", "p2_forest", "--n", "1")
        assert code == 0
        assert sorted(out.split()) == ["02", "11", "20"]

    def test_json_lines(self, capsys):
        code, out, _ = _run(capsys, "enumerate", "--gen", "star", "--n", "3", "--format", "json")
        records = [json.loads(line) for line in out.splitlines()]
        assert code == 0
        assert len(records) == 5
        assert {"f": "2000"} in records

    def test_interval_file(self, capsys, tmp_path):
        path = tmp_path / "p3.intervals"
        path.write_text("3\n0 1\n1 2\n2 3\n")
        code, out, _ = _run(capsys, "enumerate", "--intervals", str(path), "--class", "interval")
        assert code == 0
        assert sorted(out.split()) == ["020", "102", "111", "201"]

    def test_class_mismatch(self, capsys, c4_file):
        code, out, err = _run(capsys, "enumerate", "--input", str(c4_file), "--class", "forest")
        assert code == manage.EXIT_CLASS
        assert out == ""
        assert "graph is not forest" in err and "cobipartite=yes" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = _run(capsys, "enumerate", "--input", str(tmp_path / "nope.edges"))
        assert code == manage.EXIT_INPUT
        assert "error:" in err

    def test_oracle_cap(self, capsys):
        code, _, err = _run(capsys, "enumerate", "--gen", "cycle", "--n", "6", "--class", "oracle",
                            "--oracle-cap", "5")
        assert code == manage.EXIT_CAP
        assert "cap 5" in err

    def test_interval_class_needs_model(self, capsys):
        code, _, _ = _run(capsys, "enumerate", "--gen", "star", "--n", "3", "--class", "interval")
        assert code == manage.EXIT_INPUT


class TestCount:
    def test_path(self, capsys):
        assert _run(capsys, "count", "path", "7")[:2] == (0, "34\n")

    def test_path_forest(self, capsys):
        assert _run(capsys, "count", "forest", "3", "4")[:2] == (0, "28\n")

    def test_graph(self, capsys, c4_file):
        code, out, _ = _run(capsys, "count", "graph", "--input", str(c4_file))
        assert code == 0
        assert int(out) == census_service.verify(manage.graph_io.load_graph(c4_file)).expected

    def test_path_needs_one_length(self, capsys):
        assert _run(capsys, "count", "path", "3", "4")[0] == manage.EXIT_INPUT


class TestVerify:
    def test_single_graph(self, capsys):
        code, out, _ = _run(capsys, "verify", "--gen", "split_lb", "--n", "3")
        report = json.loads(out)
        assert code == 0
        assert report["ok"] and report["expected"] == 15

    def test_corpus(self, capsys):
        code, out, err = _run(capsys, "verify", "--corpus", "tree", "--sizes", "5..6", "--seeds", "2")
        assert code == 0
        assert out == ""
        assert "# verified=4 failures=0" in err

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        real = census_service.enumerate_functions

        def drop_first(*args, **kwargs):
            return iter(list(real(*args, **kwargs))[1:])

        monkeypatch.setattr(census_service, "enumerate_functions", drop_first)
        code, out, _ = _run(capsys, "verify", "--gen", "path", "--n", "5", "--class", "forest")
        report = json.loads(out.splitlines()[0])
        assert code == manage.EXIT_MISMATCH
        assert not report["ok"]
        assert report["counterexample"] == report["missing"][0]


class TestAnalyze:
    def test_text(self, capsys):
        code, out, _ = _run(capsys, "analyze", "--ruleset", "split")
        assert code == 0
        assert out.startswith("# ruleset=split")
        assert "1.4656" in out

    def test_json(self, capsys):
        code, out, _ = _run(capsys, "analyze", "--ruleset", "chordal", "--format", "json")
        report = json.loads(out)
        assert code == 0
        assert report["worst_rule"] == "2-not-in-V1-bar"
        assert report["worst"] == pytest.approx(1.8940, abs=1e-3)

    def test_sqrt3(self, capsys):
        code, out, _ = _run(capsys, "analyze", "--sqrt3", "20")
        assert code == 0
        assert "passed" in out.splitlines()[-1]

    def test_vectors_file(self, capsys, tmp_path):
        path = tmp_path / "rules.vec"
        path.write_text("# two rules\nA: (1, 3)\nB: (2, 2)\n")
        code, out, _ = _run(capsys, "analyze", "--vectors", str(path))
        assert code == 0
        assert "1.4656" in out

    def test_bad_vectors_file(self, capsys, tmp_path):
        path = tmp_path / "bad.vec"
        path.write_text("A: (1, x)\n")
        code, _, err = _run(capsys, "analyze", "--vectors", str(path))
        assert code == manage.EXIT_INPUT
        assert "line 1" in err


class TestBenchAndGenerate:
    def test_bench_csv(self, capsys):
        code, out, _ = _run(capsys, "bench", "--gen", "path", "--sizes", "2..4")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == ",".join(COLUMNS)
        assert [line.split(",")[2] for line in lines[1:]] == ["3", "4", "7"]

    def test_generate_path(self, capsys):
        assert _run(capsys, "generate", "--gen", "path", "--n", "3")[:2] == (0, "3 2\n0 1\n1 2\n")

    def test_generate_intervals(self, capsys, tmp_path):
        target = tmp_path / "p2.intervals"
        code, _, _ = _run(capsys, "generate", "--gen", "p2_forest", "--k", "1", "--intervals-out", str(target))
        assert code == 0
        assert target.read_text() == "2\n0 1\n1 2\n"

    def test_generate_random_is_seeded(self, capsys):
        first = _run(capsys, "generate", "--random", "tree", "--n", "8", "--seed", "3")[1]
        second = _run(capsys, "generate", "--random", "tree", "--n", "8", "--seed", "3")[1]
        assert first == second
        assert first.startswith("8 7\n")
