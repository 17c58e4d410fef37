"""Command-line behavior: outputs, formats, exit codes, golden bytes."""

from pathlib import Path

import pytest

from dominotowers import fixtures
from dominotowers.cli import build_parser, main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_convex_cell(self, capsys):
        code, out, _ = run(capsys, "count", "c", "--b", "4", "--n", "10")
        assert code == 0 and out == "531\n"

    def test_supporting_cell(self, capsys):
        code, out, _ = run(capsys, "count", "g", "--b", "2", "--n", "1")
        assert code == 0 and out == "1\n"

    def test_skew_cell(self, capsys):
        code, out, _ = run(capsys, "count", "r", "--b", "9", "--n", "10")
        assert code == 0 and out == "1\n"

    def test_generalized_block_length(self, capsys):
        code, out, _ = run(capsys, "count", "h", "--b", "2", "--n", "4", "--k", "3")
        assert code == 0 and out == "5\n"

    def test_convex_rejects_other_block_lengths(self, capsys):
        code, _, err = run(capsys, "count", "c", "--b", "2", "--n", "4", "--k", "3")
        assert code == 2
        assert "only defined" in err


class TestTable:
    def test_stack_table_golden_bytes(self, capsys):
        code, out, _ = run(capsys, "table", "h", "--max-n", "10", "--max-b", "10")
        assert code == 0
        assert out == (GOLDEN / "table_h_10x10.csv").read_text()

    def test_stack_cells_match_reference(self, capsys):
        _, out, _ = run(capsys, "table", "h", "--max-n", "10", "--max-b", "10")
        rows = [line.split(",") for line in out.splitlines()[1:]]
        cells = [tuple(int(v) for v in row[1:-1]) for row in rows]
        assert tuple(cells) == fixtures.stack_table().cells

    def test_single_cell_table(self, capsys):
        code, out, _ = run(capsys, "table", "r", "--max-n", "1", "--max-b", "1")
        assert code == 0
        assert out == "n,b=1,total\n1,0,0\n"

    def test_markdown_golden(self, capsys):
        code, out, _ = run(
            capsys, "table", "r", "--max-n", "6", "--max-b", "5",
            "--format", "markdown",
        )
        assert code == 0
        assert out == (GOLDEN / "table_r_6x5.md").read_text()

    def test_formats_carry_identical_numbers(self, capsys):
        _, csv_out, _ = run(capsys, "table", "c", "--max-n", "6", "--max-b", "6")
        _, tsv_out, _ = run(
            capsys, "table", "c", "--max-n", "6", "--max-b", "6", "--format", "tsv"
        )
        _, md_out, _ = run(
            capsys, "table", "c", "--max-n", "6", "--max-b", "6",
            "--format", "markdown",
        )
        csv_cells = [line.split(",") for line in csv_out.splitlines()]
        tsv_cells = [line.split("\t") for line in tsv_out.splitlines()]
        md_cells = [
            [cell.strip() for cell in line.strip("|").split("|")]
            for line in md_out.splitlines()
            if "---" not in line
        ]
        assert csv_cells == tsv_cells == md_cells

    def test_rendering_is_deterministic(self, capsys):
        first = run(capsys, "table", "g", "--max-n", "8", "--max-b", "8")
        second = run(capsys, "table", "g", "--max-n", "8", "--max-b", "8")
        assert first == second

    def test_bound_cap(self, capsys):
        code, _, err = run(capsys, "table", "h", "--max-n", "5000", "--max-b", "2")
        assert code == 2 and "bounds" in err


class TestTheta:
    def test_default_five_decimals_golden(self, capsys):
        code, out, _ = run(capsys, "theta", "--max-b", "10")
        assert code == 0
        assert out == (GOLDEN / "theta_b10.csv").read_text()

    def test_one_decimal(self, capsys):
        code, out, _ = run(capsys, "theta", "--max-b", "2", "--decimals", "1")
        lines = out.splitlines()
        assert code == 0
        assert lines[1] == "theta,2.0"
        assert lines[2] == "estimate,1.7"
        assert lines[3] == "error,0.3"

    def test_usage_errors(self, capsys):
        assert run(capsys, "theta", "--max-b", "1")[0] == 2
        assert run(capsys, "theta", "--max-b", "4", "--decimals", "-2")[0] == 2


class TestVerify:
    def test_trivial_size(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "1")
        assert code == 0
        assert all(line.startswith("PASS") for line in out.splitlines())

    def test_small_run_reports_shape_count(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "6")
        assert code == 0
        assert "(1024 at n=6)" in out
        assert out.count("PASS") == 3

    def test_cap_is_usage_error(self, capsys):
        assert run(capsys, "verify", "--max-n", "13")[0] == 2


class TestEnumerate:
    def test_golden_stream(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3", "--b", "1")
        assert code == 0
        assert out == (GOLDEN / "enumerate_n3_b1.txt").read_text()

    def test_all_bases(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "2")
        assert code == 0 and len(out.splitlines()) == 4

    def test_invalid_base(self, capsys):
        assert run(capsys, "enumerate", "--n", "2", "--b", "3")[0] == 2


class TestSeries:
    def test_skew_coefficients(self, capsys):
        code, out, _ = run(capsys, "series", "r", "--b", "1", "--order", "5")
        assert code == 0
        assert out == "0 0\n1 0\n2 1\n3 3\n4 7\n5 15\n"

    def test_closed_form_method(self, capsys):
        code, out, _ = run(
            capsys, "series", "h", "--b", "3", "--order", "5",
            "--method", "closed-form",
        )
        assert code == 0
        assert out.splitlines()[-1] == "5 8"

    def test_order_cap(self, capsys):
        assert run(capsys, "series", "g", "--b", "2", "--order", "5000")[0] == 2

    def test_subset_blowup_is_usage_error(self, capsys):
        code, _, err = run(
            capsys, "series", "h", "--b", "13", "--order", "4",
            "--method", "closed-form",
        )
        assert code == 2 and "subset" in err.lower()


class TestOeisCheck:
    def test_reference_triangle_passes(self, capsys, tmp_path):
        flat = fixtures.flatten_triangle("convex_counts.csv")
        bfile = tmp_path / "b275662.txt"
        bfile.write_text(
            "".join(f"{i} {v}\n" for i, v in enumerate(flat.values, start=1))
        )
        code, out, _ = run(capsys, "oeis-check", "A275662", "--bfile", str(bfile))
        assert code == 0
        assert "55/55 terms match" in out

    def test_mismatch_exits_one(self, capsys, tmp_path):
        values = list(fixtures.flatten_triangle("convex_counts.csv").values)
        values[30] += 7
        bfile = tmp_path / "bad.txt"
        bfile.write_text(
            "".join(f"{i} {v}\n" for i, v in enumerate(values, start=1))
        )
        code, out, _ = run(capsys, "oeis-check", "A275662", "--bfile", str(bfile))
        assert code == 1
        assert "first mismatch at index 31" in out

    def test_parse_error_exits_three(self, capsys, tmp_path):
        bfile = tmp_path / "broken.txt"
        bfile.write_text("1 3\n5 abc\n")
        code, _, err = run(capsys, "oeis-check", "A275204", "--bfile", str(bfile))
        assert code == 3 and "line 2" in err

    def test_unknown_sequence_needs_family(self, capsys, tmp_path):
        bfile = tmp_path / "b.txt"
        bfile.write_text("1 1\n")
        assert run(capsys, "oeis-check", "A999999", "--bfile", str(bfile))[0] == 2

    def test_no_cache_no_network_exits_three(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "oeis-check", "A275662", "--cache-dir", str(tmp_path)
        )
        assert code == 3 and "network" in err

    def test_missing_bfile_exits_three(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "oeis-check", "A275662", "--bfile", str(tmp_path / "no.txt")
        )
        assert code == 3


class TestParser:
    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as info:
            build_parser().parse_args(["count", "z", "--b", "1", "--n", "1"])
        assert info.value.code == 2

    def test_subcommand_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


class TestRunConfig:
    def test_defaults(self):
        from dominotowers.cli import RunConfig

        config = RunConfig()
        assert config.order_cap == 4096
        assert config.enumeration_cap == 12
        assert config.output_format == "csv"
        assert config.allow_network is False

    def test_validation(self):
        from dominotowers.cli import RunConfig

        with pytest.raises(ValueError):
            RunConfig(order_cap=0)
        with pytest.raises(ValueError):
            RunConfig(output_format="html")

    def test_cache_env_override(self, monkeypatch, tmp_path):
        from dominotowers.cli import CACHE_ENV_VAR, default_cache_dir

        monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path / "alt"))
        assert default_cache_dir() == tmp_path / "alt"
