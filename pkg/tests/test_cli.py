import csv
import dataclasses
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from essgb import bench, cli
from essgb.bench import BenchConfig, checksum, fnv1a64, read_csv, run_bench
from essgb.core import ess_gb
from essgb.exceptions import ParseError
from essgb.linalg import rank
from essgb.pointsfile import format_points, parse_points


@pytest.fixture
def points_file(tmp_path):
    def make(text):
        path = tmp_path / "points.txt"
        path.write_text(text)
        return str(path)

    return make


class TestPointsFile:
    def test_comments_commas_and_blank_lines(self):
        assert parse_points("# header\n0, 0 ,0\n\n1 2 0\n") == [(0, 0, 0), (1, 2, 0)]

    def test_ragged_rows(self):
        with pytest.raises(ParseError) as info:
            parse_points("1 2\n3\n")
        assert info.value.line == 2

    def test_bad_token_position(self):
        with pytest.raises(ParseError) as info:
            parse_points("1 2\n3 x\n")
        assert (info.value.line, info.value.column) == (2, 3)

    @given(st.lists(st.lists(st.integers(0, 100), min_size=3, max_size=3).map(tuple), min_size=1, max_size=8))
    def test_round_trip(self, rows):
        assert parse_points(format_points(rows, comment="p=101")) == rows


class TestCompute:
    def test_worked_instance_text(self, points_file, capsys):
        code = cli.main(["compute", points_file("0 0 0\n1 2 0\n"), "--prime", "5", "--order", "lex"])
        out = capsys.readouterr().out
        assert code == 0
        for line in ("  x1^2+4*x1", "  x2+3*x1", "  x3", "standard monomials: 1, x1", "  p1: 4*x1+1", "  p2: x1"):
            assert line in out.splitlines()

    def test_single_point(self, points_file, capsys):
        assert cli.main(["compute", points_file("2 3\n"), "--prime", "5"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert "  x1+3" in lines and "  x2+2" in lines
        assert "standard monomials: 1" in lines

    def test_json_schema(self, points_file, capsys):
        cli.main(["compute", points_file("0 0 0\n1 2 0\n"), "-p", "5", "--format", "json"])
        data = json.loads(capsys.readouterr().out)
        assert data == {
            "prime": 5,
            "order": "lex",
            "groebner_basis": ["x3", "x2+3*x1", "x1^2+4*x1"],
            "standard_monomials": ["1", "x1"],
            "separators": ["4*x1+1", "x1"],
        }

    def test_duplicate_rows(self, points_file, capsys):
        assert cli.main(["compute", points_file("1 1\n0 1\n1 1\n"), "-p", "5"]) == 1
        assert "duplicate point at rows 1 and 3" in capsys.readouterr().err

    def test_malformed_file(self, points_file, capsys):
        assert cli.main(["compute", points_file("1 1\n0 ;\n"), "-p", "5"]) == 1
        assert "line 2, column 3" in capsys.readouterr().err

    def test_non_prime(self, points_file, capsys):
        assert cli.main(["compute", points_file("1 1\n"), "-p", "6"]) == 1
        assert "not prime" in capsys.readouterr().err

    def test_out_of_range(self, points_file, capsys):
        assert cli.main(["compute", points_file("1 7\n"), "-p", "5"]) == 1

    def test_missing_file(self, tmp_path, capsys):
        assert cli.main(["compute", str(tmp_path / "nope.txt"), "-p", "5"]) == 1

    def test_verify_pass(self, points_file, capsys):
        code = cli.main(["compute", points_file("0 0\n1 1\n2 4\n"), "-p", "5", "--order", "grevlex", "--verify"])
        assert code == 0
        out = capsys.readouterr().out
        assert "CHECK vanishing PASS" in out
        assert "FAIL" not in out

    def test_verify_failure_exit_code(self, points_file, capsys, monkeypatch):
        def broken(V, order):
            r = ess_gb(V, order)
            return dataclasses.replace(r, separators=r.separators[::-1])

        monkeypatch.setattr(cli, "ess_gb", broken)
        assert cli.main(["compute", points_file("0 0 0\n1 2 0\n"), "-p", "5", "--verify"]) == 2
        assert "CHECK separator_delta FAIL" in capsys.readouterr().out

    def test_bm_algorithm_same_output(self, points_file, capsys):
        path = points_file("0 1 2\n3 4 0\n1 1 1\n")
        cli.main(["compute", path, "-p", "5", "--format", "json"])
        a = capsys.readouterr().out
        cli.main(["compute", path, "-p", "5", "--format", "json", "--algorithm", "bm"])
        assert capsys.readouterr().out == a


class TestGen:
    def test_dependent_variety(self, tmp_path, capsys):
        out = tmp_path / "v.txt"
        args = ["gen", "--prime", "5", "--n", "100", "--m", "10", "--index", "10", "--reps", "10", "--out", str(out)]
        assert cli.main(args) == 0
        report = capsys.readouterr().out
        assert "nr(i)=2" in report
        rows = parse_points(out.read_text())
        assert len(rows) == 10 and len(rows[0]) == 100
        achieved = int(report.split("rank=")[1])
        assert achieved == rank(rows, 5) <= 2

    def test_general_position(self, tmp_path, capsys):
        out = tmp_path / "v.txt"
        cli.main(["gen", "-p", "5", "--n", "100", "--m", "10", "-i", "1", "-o", str(out)])
        assert "nr(i)=10 rank=10" in capsys.readouterr().out

    def test_same_seed_byte_identical(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        for path in (a, b):
            cli.main(["gen", "-p", "101", "--n", "30", "--m", "15", "-i", "5", "--seed", "42", "-o", str(path)])
        assert a.read_bytes() == b.read_bytes()

    def test_stdout(self, capsys):
        assert cli.main(["gen", "-p", "5", "--n", "4", "--m", "3"]) == 0
        captured = capsys.readouterr()
        assert len(parse_points(captured.out)) == 3
        assert "nr(i)=3" in captured.err

    def test_impossible(self, capsys):
        assert cli.main(["gen", "-p", "2", "--n", "1", "--m", "3"]) == 1


class TestBench:
    def test_fnv1a64_reference_values(self):
        # published FNV-1a 64-bit test vectors
        assert fnv1a64(b"") == 0xCBF29CE484222325
        assert fnv1a64(b"a") == 0xAF63DC4C8601EC8C
        assert fnv1a64(b"foobar") == 0x85944171F73967E8

    def test_checksum_is_order_independent(self, worked):
        r = ess_gb(worked, "lex")
        assert checksum(r) == checksum(dataclasses.replace(r, basis=r.basis[::-1]))

    def test_single_cell(self, tmp_path):
        out = tmp_path / "b.csv"
        config = BenchConfig(primes=(5,), ns=(100,), ms=(5,), orders=("lex",), r=1, out=str(out))
        records = run_bench(config)
        assert len(records) == 2
        assert {r.alg for r in records} == {"essgb", "bm"}
        assert records[0].checksum == records[1].checksum
        with open(out, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["p", "n", "m", "order", "i", "alg", "seconds", "ess_vars", "gb_size", "checksum"]
        assert len(rows) == 3
        assert read_csv(out) == [dataclasses.replace(r, seconds=round(r.seconds, 6)) for r in records]

    def test_csv_append_keeps_single_header(self, tmp_path):
        out = tmp_path / "b.csv"
        config = BenchConfig(primes=(5,), ns=(20,), ms=(3,), orders=("grevlex",), r=2, out=str(out))
        run_bench(config)
        run_bench(config)
        lines = out.read_text().splitlines()
        assert len(lines) == 1 + 2 * 4
        assert sum(line.startswith("p,n,m") for line in lines) == 1
        recs = read_csv(out)
        # same instance and seed give the same checksum every time
        by_i = {}
        for r in recs:
            by_i.setdefault(r.i, set()).add(r.checksum)
        assert all(len(s) == 1 for s in by_i.values())

    def test_default_grid_size(self):
        config = BenchConfig()
        assert len(config.cells()) * config.r * len(config.algorithms) == 720

    def test_summary(self, tmp_path):
        config = BenchConfig(primes=(5,), ns=(30, 60), ms=(4,), orders=("lex",), r=3)
        rows = bench.summarize(run_bench(config))
        assert [(row["n"], row["m"]) for row in rows] == [(30, 4), (60, 4)]
        assert all(row["ratio"] == row["bm"] / row["essgb"] for row in rows)
        text = bench.format_summary(rows)
        assert "bm/essgb" in text.splitlines()[0]

    def test_checksum_mismatch_aborts(self, monkeypatch, tmp_path, capsys):
        def broken(V, order):
            r = ess_gb(V, order)
            return dataclasses.replace(r, basis=r.basis[1:])

        monkeypatch.setitem(bench.ALGORITHMS, "essgb", broken)
        code = cli.main(["bench", "--primes", "5", "--ns", "10", "--ms", "3", "--orders", "lex", "-r", "1",
                         "-o", str(tmp_path / "x.csv")])
        assert code == 3
        assert "bases differ" in capsys.readouterr().err

    def test_cli_bench(self, tmp_path, capsys):
        out = tmp_path / "b.csv"
        code = cli.main(["bench", "--primes", "5", "--ns", "20", "--ms", "3", "--orders", "lex", "grevlex",
                         "-r", "2", "--seed", "1", "-o", str(out)])
        assert code == 0
        captured = capsys.readouterr()
        assert "rng=PCG64" in captured.err
        assert len(captured.out.strip().splitlines()) == 2 + 2
        assert len(read_csv(out)) == 2 * 2 * 2

    def test_parallel_matches_sequential(self, tmp_path):
        kw = dict(primes=(5,), ns=(15,), ms=(3, 4), orders=("lex",), r=2, seed=5)
        seq = run_bench(BenchConfig(**kw))
        par = run_bench(BenchConfig(parallel=True, **kw))
        assert [r.checksum for r in seq] == [r.checksum for r in par]

    def test_config_validation(self):
        with pytest.raises(ValueError):
            BenchConfig(ns=())
        with pytest.raises(ValueError):
            BenchConfig(algorithms=("essbm",))
        with pytest.raises(ValueError):
            BenchConfig(r=0)
