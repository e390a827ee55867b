"""End-to-end tests of the command line through typer's CliRunner."""

import json
import shutil
from pathlib import Path

import pytest
from _pytest.monkeypatch import MonkeyPatch
from typer.testing import CliRunner

from core.report import Report
from main import app

runner = CliRunner()


@pytest.fixture(autouse=True)
def reset_main_state() -> None:
    """Reset the state in main.py before each test."""
    from main import state

    state["config"] = None
    state["json"] = False
    state["max_class"] = None
    state["full_battery"] = None


def fixture(fixtures_dir: Path, name: str) -> str:
    return str(fixtures_dir / name)


def report_of(stdout: str) -> Report:
    return Report.from_json(stdout)


class TestDims:
    def test_free_quotient_json(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "dims", fixture(fixtures_dir, "free2.lie")])
        assert result.exit_code == 0, result.output
        report = report_of(result.stdout)
        assert report.command == "dims"
        assert report.dims == [2, 1, 2, 3]
        assert report.lcs_dims == [2, 1, 2, 3]
        assert report.caveat

    def test_table_output(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["dims", fixture(fixtures_dir, "heisenberg.lie")])
        assert result.exit_code == 0, result.output
        assert "2, 1, 0" in result.stdout
        assert "3, 3" in result.stdout

    def test_missing_file(self, tmp_path: Path) -> None:
        result = runner.invoke(app, ["dims", str(tmp_path / "missing.lie")])
        assert result.exit_code == 1
        assert "error[parse]" in result.output

    def test_parse_error_location(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.lie"
        path.write_text("class 2\ngen x\ngen y\nrel [x,w]\n", encoding="utf-8")
        result = runner.invoke(app, ["dims", str(path)])
        assert result.exit_code == 1
        assert f"error[parse]: {path}:4:5: unknown generator 'w'" in result.output

    def test_max_class_flag(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--max-class", "3", "dims", fixture(fixtures_dir, "free2.lie")])
        assert result.exit_code == 3
        assert "error[cap]" in result.output

    def test_max_class_environment(self, fixtures_dir: Path, monkeypatch: MonkeyPatch) -> None:
        monkeypatch.setenv("NILPRES_MAX_CLASS", "3")
        result = runner.invoke(app, ["dims", fixture(fixtures_dir, "free2.lie")])
        assert result.exit_code == 3

    def test_invalid_environment(self, fixtures_dir: Path, monkeypatch: MonkeyPatch) -> None:
        monkeypatch.setenv("NILPRES_MAX_CLASS", "many")
        result = runner.invoke(app, ["dims", fixture(fixtures_dir, "free2.lie")])
        assert result.exit_code == 1
        assert "error[config]" in result.output


class TestBch:
    def test_class_four(self) -> None:
        result = runner.invoke(app, ["--json", "bch", "x", "y", "--class", "4"])
        assert result.exit_code == 0, result.output
        section = report_of(result.stdout).bch
        assert section is not None
        assert section.expression == "x + y + 1/2*[x,y] + 1/12*[x,[x,y]] + 1/12*[[x,y],y] + 1/24*[x,[[x,y],y]]"
        assert len(section.terms) == 6

    def test_table_output(self) -> None:
        result = runner.invoke(app, ["bch", "x", "y", "-c", "2"])
        assert result.exit_code == 0, result.output
        assert "1/2" in result.stdout

    def test_unknown_generator(self) -> None:
        result = runner.invoke(app, ["bch", "x", "w"])
        assert result.exit_code == 1
        assert "error[unknown-generator]: unknown generator 'w'" in result.output

    def test_class_cap(self) -> None:
        result = runner.invoke(app, ["bch", "x", "y", "--class", "9"])
        assert result.exit_code == 3
        assert "error[cap]" in result.output

    def test_other_generators(self) -> None:
        result = runner.invoke(app, ["--json", "bch", "a", "b", "-c", "2", "-g", "a,b"])
        assert result.exit_code == 0, result.output
        section = report_of(result.stdout).bch
        assert section is not None and section.generators == ["a", "b"]


class TestCohomologyCommands:
    def test_betti(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "cohomology", fixture(fixtures_dir, "heisenberg.lie")])
        assert result.exit_code == 0, result.output
        cohomology = report_of(result.stdout).cohomology
        assert cohomology is not None
        assert [b.dimension for b in cohomology.betti] == [1, 2, 2, 1]

    def test_single_degree(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "cohomology", fixture(fixtures_dir, "heisenberg.lie"), "-p", "2"])
        cohomology = report_of(result.stdout).cohomology
        assert cohomology is not None
        assert [(b.degree, b.dimension) for b in cohomology.betti] == [(2, 2)]

    def test_cup(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "cup", fixture(fixtures_dir, "abelian.lie")])
        assert result.exit_code == 0, result.output
        cup = report_of(result.stdout).cup
        assert cup is not None
        assert cup.nondegenerate and cup.dual_to_bracket
        assert cup.h1 == ["x∨", "y∨"]

    def test_massey(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "massey", fixture(fixtures_dir, "heisenberg.lie"), "x", "x", "y"])
        assert result.exit_code == 0, result.output
        massey = report_of(result.stdout).massey
        assert massey is not None
        assert massey.status == "nonvanishing"
        assert massey.representative == "x∨∧[x,y]∨"

    def test_massey_rejects_brackets(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["massey", fixture(fixtures_dir, "heisenberg.lie"), "x", "x", "[x,y]"])
        assert result.exit_code == 1
        assert "error[expression]" in result.output


class TestCheck:
    def test_heisenberg_excluded(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "check", fixture(fixtures_dir, "heisenberg.lie"), "--mode", "smooth-proper"])
        assert result.exit_code == 2, result.output
        report = report_of(result.stdout)
        assert report.excluded
        assert report.checks_run == ["relation_degrees"]
        assert report.verdicts[0].witnesses[0].degrees == [3, 3]

    def test_full_battery(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "--full-battery", "check", fixture(fixtures_dir, "heisenberg.lie"), "-m", "smooth-proper"])
        assert result.exit_code == 2
        assert len(report_of(result.stdout).verdicts[0].witnesses) == 4

    def test_consistent(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["check", fixture(fixtures_dir, "abelian.lie"), "--mode", "smooth-proper"])
        assert result.exit_code == 0, result.output

    def test_n5_is_consistent_with_smooth(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "check", fixture(fixtures_dir, "n5.lie"), "--mode", "smooth"])
        assert result.exit_code == 0, result.output
        verdict = report_of(result.stdout).verdicts[0]
        assert verdict.outcome == "consistent"
        assert verdict.checks_run == ["relation_degrees", "weights"]
        assert not verdict.witnesses

    def test_quintic_relations_excluded_from_smooth(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "check", fixture(fixtures_dir, "free4_quintic.lie"), "--mode", "smooth"])
        assert result.exit_code == 2, result.output
        verdict = report_of(result.stdout).verdicts[0]
        assert verdict.outcome == "excluded"
        assert verdict.witnesses[0].check == "relation_degrees"
        assert verdict.witnesses[0].degrees == [5] * 6

    def test_undecodable_file(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.lie"
        path.write_bytes(b"class 2\ngen x\xff\n")
        result = runner.invoke(app, ["check", str(path), "--mode", "smooth"])
        assert result.exit_code == 1
        assert f"error[parse]: {path}:2:6: invalid UTF-8" in result.output

    def test_directory_with_undecodable_file(self, fixtures_dir: Path, tmp_path: Path) -> None:
        shutil.copy(fixtures_dir / "abelian.lie", tmp_path / "abelian.lie")
        (tmp_path / "bad.lie").write_bytes(b"class 2\ngen x\xff\n")
        result = runner.invoke(app, ["--json", "check", "--all", str(tmp_path), "--mode", "smooth"])
        assert result.exit_code == 1, result.output
        files = report_of(result.stdout).files
        assert [Path(f.path).name for f in files] == ["abelian.lie", "bad.lie"]
        assert files[0].outcome == "consistent"
        assert files[1].error is not None and "invalid UTF-8" in files[1].error

    def test_table_shows_witness(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["check", fixture(fixtures_dir, "free4_quintic.lie"), "--mode", "smooth"])
        assert result.exit_code == 2
        assert "relation_degrees" in result.stdout

    def test_directory(self, fixtures_dir: Path, tmp_path: Path) -> None:
        for name in ("abelian.lie", "heisenberg.lie", "free4_quintic.lie"):
            shutil.copy(fixtures_dir / name, tmp_path / name)
        result = runner.invoke(app, ["--json", "check", "--all", str(tmp_path), "--mode", "smooth"])
        assert result.exit_code == 2, result.output
        files = report_of(result.stdout).files
        assert [(Path(f.path).name, f.outcome) for f in files] == [
            ("abelian.lie", "consistent"),
            ("free4_quintic.lie", "excluded"),
            ("heisenberg.lie", "consistent"),
        ]

    def test_directory_with_broken_file(self, tmp_path: Path) -> None:
        (tmp_path / "a.lie").write_text("class 2\ngen x\ngen y\nrel [x,y]\n", encoding="utf-8")
        (tmp_path / "b.lie").write_text("class 2\n", encoding="utf-8")
        result = runner.invoke(app, ["--json", "check", "--all", str(tmp_path), "--mode", "smooth"])
        assert result.exit_code == 1
        files = report_of(result.stdout).files
        assert files[0].outcome == "consistent"
        assert files[1].error is not None and files[1].error.startswith("error[parse]")

    @pytest.mark.parametrize("extra", [[], ["FILE", "--all", "DIR"]])
    def test_file_or_directory_required(self, fixtures_dir: Path, extra: list[str]) -> None:
        args = [a.replace("FILE", fixture(fixtures_dir, "abelian.lie")).replace("DIR", str(fixtures_dir)) for a in extra]
        result = runner.invoke(app, ["check", *args, "--mode", "smooth"])
        assert result.exit_code == 1
        assert "error[usage]" in result.output

    def test_bad_mode_is_usage_error(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["check", fixture(fixtures_dir, "abelian.lie"), "--mode", "kahler"])
        assert result.exit_code == 1


class TestBuildFromCup:
    def test_genus_one(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "build-from-cup", fixture(fixtures_dir, "genus1.toml"), "--depth", "1"])
        assert result.exit_code == 0, result.output
        report = report_of(result.stdout)
        assert report.presentation == "class 2\ngen a1\ngen b1\nrel [a1,b1]\n"
        assert report.cup_round_trip is True
        assert report.dims == [2, 0]

    def test_default_depth_respects_max_class(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--max-class", "3", "build-from-cup", fixture(fixtures_dir, "genus1.toml")])
        assert result.exit_code == 3


class TestGroup:
    def test_product_lattice_and_automorphism(self, fixtures_dir: Path) -> None:
        args = ["--json", "group", fixture(fixtures_dir, "heisenberg.lie"), "x", "y", "--lattice", "x;y;1/2*[x,y]", "--automorphism", "x=y;y=x"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0, result.output
        group = report_of(result.stdout).group
        assert group is not None
        assert group.product == "x + y + 1/2*[x,y]"
        assert group.inverse_a == "-x"
        assert group.commutator == "[x,y]"
        assert group.lattice is not None and group.lattice.closed
        assert group.automorphism is not None and group.automorphism.is_automorphism

    def test_lattice_not_closed(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["--json", "group", fixture(fixtures_dir, "heisenberg.lie"), "x", "y", "--lattice", "x;y;[x,y]"])
        assert result.exit_code == 0, result.output
        group = report_of(result.stdout).group
        assert group is not None and group.lattice is not None
        assert not group.lattice.closed
        assert group.lattice.detail == "product has coordinate 1/2 on basis element 3"

    def test_malformed_automorphism(self, fixtures_dir: Path) -> None:
        result = runner.invoke(app, ["group", fixture(fixtures_dir, "heisenberg.lie"), "x", "y", "--automorphism", "x"])
        assert result.exit_code == 1
        assert "error[expression]" in result.output


def test_schema() -> None:
    result = runner.invoke(app, ["schema"])
    assert result.exit_code == 0
    schema = json.loads(result.stdout)
    assert schema["title"] == "Report"


def test_unknown_command_exits_one() -> None:
    result = runner.invoke(app, ["frobnicate"])
    assert result.exit_code == 1
