"""Tests for the cpt-aggregate command line."""

import json

import pytest

from cpt_aggregation import __version__
from cpt_aggregation.cli.main import (
    EXIT_INVALID,
    EXIT_IO,
    EXIT_OK,
    EXIT_RESOURCE,
    build_parser,
    main,
    parse_attribute_list,
)
from cpt_aggregation.errors import InstanceFormatError
from cpt_aggregation.model.cpt import AttributeSet
from tests.conftest import T23_JSON


@pytest.fixture
def t23_file(tmp_path):
    path = tmp_path / "t23.json"
    path.write_text(T23_JSON, encoding="utf-8")
    return str(path)


class TestGenerate:
    """Test the generate subcommand."""

    def test_generate_t23(self, tmp_path, capsys):
        output = tmp_path / "t23.json"
        code = main(["generate", "--family", "tkn", "--n", "3", "--k", "2", "-o", str(output)])

        assert code == EXIT_OK
        assert capsys.readouterr().out.strip() == "t=4 n=3 rules=16"
        assert output.read_bytes() == T23_JSON.encode("utf-8")

    def test_generate_random_is_reproducible(self, tmp_path):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        arguments = ["generate", "--family", "random", "--n", "6", "--t", "4", "--max-parents", "3", "--seed", "17"]

        assert main(arguments + ["-o", str(first)]) == EXIT_OK
        assert main(arguments + ["-o", str(second)]) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()

    def test_generate_missing_parameter(self, tmp_path, capsys):
        code = main(["generate", "--family", "tkn", "--n", "4", "-o", str(tmp_path / "x.json")])

        assert code == EXIT_INVALID
        assert "requires k" in capsys.readouterr().err
        assert not (tmp_path / "x.json").exists()

    def test_generate_unwritable_output(self, tmp_path):
        output = tmp_path / "missing" / "x.json"
        assert main(["generate", "--family", "copy-parent", "--n", "4", "-o", str(output)]) == EXIT_IO


class TestSolve:
    """Test the solve subcommand."""

    def test_exact_union(self, t23_file, capsys):
        assert main(["solve", "--algorithm", "exact-union", "-i", t23_file]) == EXIT_OK

        lines = capsys.readouterr().out.splitlines()
        assert "objective: 4" in lines
        assert "per_input: 1 1 1 1" in lines
        assert "chosen parent set: {0,1}" in lines
        assert "default rule: 0>1" in lines

    def test_trivial(self, t23_file, capsys):
        assert main(["solve", "--algorithm", "trivial", "-i", t23_file]) == EXIT_OK

        lines = capsys.readouterr().out.splitlines()
        assert "objective: 6" in lines
        assert "chosen parent set: -" in lines
        assert "contexts with 1>0: 00" in lines

    def test_fixed_parent(self, t23_file, capsys):
        assert main(["solve", "--algorithm", "fixed-parent", "--parents", "0,1", "-i", t23_file]) == EXIT_OK
        assert "objective: 4" in capsys.readouterr().out.splitlines()

    def test_fixed_parent_requires_parents(self, t23_file, capsys):
        assert main(["solve", "--algorithm", "fixed-parent", "-i", t23_file]) == EXIT_INVALID
        assert "--parents" in capsys.readouterr().err

    def test_report_json(self, t23_file, tmp_path):
        output = tmp_path / "report.json"
        assert main(["solve", "--algorithm", "alg1", "-i", t23_file, "-o", str(output)]) == EXIT_OK

        document = json.loads(output.read_text(encoding="utf-8"))
        assert document["algorithm"] == "alg1"
        assert document["objective"] == 4
        assert document["cpt"] == {"parents": [], "rules": {"": "0>1"}}

    def test_exhaustive_pool(self, t23_file, capsys):
        assert main(["solve", "--algorithm", "exhaustive", "--pool", "1", "-i", t23_file]) == EXIT_OK
        assert "objective: 4" in capsys.readouterr().out.splitlines()

    def test_parent_out_of_range(self, t23_file):
        assert main(["solve", "--algorithm", "fixed-parent", "--parents", "0,5", "-i", t23_file]) == EXIT_INVALID

    def test_guard_exit_code(self, t23_file, capsys):
        code = main(["solve", "--algorithm", "exact-union", "--max-parent-bits", "1", "-i", t23_file])

        assert code == EXIT_RESOURCE
        assert "max_parent_bits" in capsys.readouterr().err

    def test_missing_input(self, tmp_path):
        assert main(["solve", "--algorithm", "trivial", "-i", str(tmp_path / "nope.json")]) == EXIT_IO

    def test_malformed_input(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"n":3,"cpts":[{"parents":[0],"rules":{"0":"0>1"}}]}', encoding="utf-8")

        assert main(["solve", "--algorithm", "trivial", "-i", str(path)]) == EXIT_INVALID
        assert "Incomplete CPT" in capsys.readouterr().err

    def test_usage_error(self, t23_file):
        assert main(["solve", "-i", t23_file]) == EXIT_INVALID

    def test_log_file(self, t23_file, tmp_path):
        log_file = tmp_path / "run.log"
        arguments = ["solve", "--algorithm", "exact-union", "-i", t23_file, "--log-level", "INFO"]

        assert main(arguments + ["--log-file", str(log_file)]) == EXIT_OK
        assert "exact-union: objective=4" in log_file.read_text(encoding="utf-8")

    def test_unknown_log_level(self, t23_file):
        assert main(["solve", "--algorithm", "trivial", "-i", t23_file, "--log-level", "LOUD"]) == EXIT_INVALID


class TestEval:
    """Test the eval subcommand."""

    def test_bare_cpt(self, t23_file, tmp_path, capsys):
        candidate = tmp_path / "cpt.json"
        candidate.write_text('{"parents":[],"rules":{"":"0>1"}}', encoding="utf-8")

        assert main(["eval", "-i", t23_file, "--cpt", str(candidate)]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["objective: 4", "per_input: 1 1 1 1"]

    def test_single_cpt_instance(self, t23_file, tmp_path, capsys):
        candidate = tmp_path / "cpt.json"
        candidate.write_text(
            '{"n":3,"cpts":[{"parents":[0,1],"rules":{"00":"1>0","01":"0>1","10":"0>1","11":"0>1"}}]}',
            encoding="utf-8",
        )

        assert main(["eval", "-i", t23_file, "--cpt", str(candidate)]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["objective: 6", "per_input: 0 2 2 2"]

    def test_multi_cpt_candidate(self, t23_file):
        assert main(["eval", "-i", t23_file, "--cpt", t23_file]) == EXIT_INVALID

    def test_wrong_universe(self, t23_file, tmp_path):
        candidate = tmp_path / "cpt.json"
        candidate.write_text('{"n":4,"cpts":[{"parents":[],"rules":{"":"0>1"}}]}', encoding="utf-8")

        assert main(["eval", "-i", t23_file, "--cpt", str(candidate)]) == EXIT_INVALID


class TestMatrix:
    """Test the matrix subcommand."""

    def test_t23_table(self, t23_file, capsys):
        assert main(["matrix", "-i", t23_file]) == EXIT_OK

        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split() == ["swap", "N1", "N2", "N3", "N4"]
        assert lines[1].split() == ["00", "1", "0", "0", "0"]
        assert lines[4].split() == ["11", "0", "0", "0", "1"]
        assert "freq(0>1) = 12" in lines
        assert "freq(1>0) = 4" in lines
        assert "  1000: 1" in lines

    def test_guard(self, t23_file):
        assert main(["matrix", "-i", t23_file, "--max-matrix-n", "2"]) == EXIT_RESOURCE


class TestReport:
    """Test the report subcommand."""

    def test_tkn_csv(self, tmp_path, capsys):
        output = tmp_path / "tkn.csv"
        code = main(["report", "--family", "tkn", "--n-min", "3", "--n-max", "4", "-o", str(output)])

        assert code == EXIT_OK
        lines = output.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "# schema=1"
        assert lines[1].startswith("family,n,k,t,f_opt,f_trivial,f_alg1")
        assert lines[2:] == [
            "tkn,3,2,4,4,6,4,3,2,1,1,4,6",
            "tkn,4,2,12,24,36,24,3,2,1,1,24,36",
            "tkn,4,3,8,8,14,8,7,4,1,1,8,14",
        ]
        assert len(capsys.readouterr().out.splitlines()) == 3

    def test_random_csv(self, tmp_path):
        output = tmp_path / "random.csv"
        arguments = ["report", "--family", "random", "--count", "3", "--n", "5", "--t", "4", "--max-parents", "2"]

        assert main(arguments + ["-o", str(output)]) == EXIT_OK
        rows = output.read_text(encoding="utf-8").splitlines()[2:]
        assert len(rows) == 3
        assert all(row.startswith("random,5,,4,") and row.endswith(",,") for row in rows)

    def test_guard_writes_nothing(self, tmp_path):
        output = tmp_path / "tkn.csv"
        arguments = ["report", "--family", "tkn", "--n-min", "3", "--n-max", "4", "--max-parent-bits", "1"]

        assert main(arguments + ["-o", str(output)]) == EXIT_RESOURCE
        assert not output.exists()
        assert list(tmp_path.iterdir()) == []


class TestParser:
    """Test argument helpers."""

    def test_version(self, capsys):
        assert main(["--version"]) == EXIT_OK
        assert __version__ in capsys.readouterr().out

    def test_parse_attribute_list(self):
        assert parse_attribute_list("0, 2", 3) == AttributeSet.from_indices([0, 2], 3)
        assert parse_attribute_list("", 3) == AttributeSet.empty(3)

    def test_parse_attribute_list_rejects_text(self):
        with pytest.raises(InstanceFormatError):
            parse_attribute_list("a,b", 3)

    @pytest.mark.parametrize(
        "arguments",
        [
            ["generate", "--family", "tkn", "--n", "3", "--k", "2", "-o", "out.json", "--max-matrix-n", "5"],
            ["generate", "--family", "tkn", "--n", "3", "--k", "2", "-o", "out.json", "--max-parent-bits", "5"],
            ["eval", "-i", "in.json", "--cpt", "c.json", "--max-matrix-n", "5"],
            ["matrix", "-i", "in.json", "--max-parent-bits", "5"],
            ["report", "--family", "tkn", "-o", "out.csv", "--max-matrix-n", "5"],
        ],
    )
    def test_guard_flags_only_where_enforced(self, arguments):
        with pytest.raises(SystemExit):
            build_parser().parse_args(arguments)

    def test_guard_flags_accepted(self):
        parser = build_parser()
        solve = parser.parse_args(
            ["solve", "--algorithm", "alg1", "-i", "in.json", "--max-matrix-n", "5", "--max-parent-bits", "6"]
        )
        assert (solve.max_matrix_n, solve.max_parent_bits) == (5, 6)
        assert parser.parse_args(["matrix", "-i", "in.json", "--max-matrix-n", "7"]).max_matrix_n == 7
        report = parser.parse_args(["report", "--family", "tkn", "-o", "o.csv", "--max-parent-bits", "3"])
        assert report.max_parent_bits == 3
