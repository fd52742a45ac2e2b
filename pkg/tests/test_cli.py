from __future__ import annotations

from click.testing import CliRunner

from artifact.cli import main


def test_census_command():
    res = CliRunner().invoke(main, ["census", "--reduced-excess", "3"])
    assert res.exit_code == 0 and "total  106" in res.output


def test_census_accepts_excess():
    res = CliRunner().invoke(main, ["census", "--excess", "26"])
    assert res.exit_code == 0 and "total" in res.output


def test_usage_error_exit_code():
    assert CliRunner().invoke(main, ["census"]).exit_code == 2
    assert CliRunner().invoke(main, ["cohomology", "--g", "4", "--n", "8"]).exit_code == 2


def test_cohomology_command():
    res = CliRunner().invoke(main, ["cohomology", "--g", "7", "--n", "3"])
    assert res.exit_code == 0 and "H^22: dim 5  V_{1^3} + 2*V_{21}" in res.output


def test_verify_command():
    res = CliRunner().invoke(main, ["verify", "--g", "8", "--n", "1"])
    assert res.exit_code == 0 and "FAIL" not in res.output


def test_export_command(tmp_path):
    res = CliRunner().invoke(main, ["export", "--format", "csv", "--out", str(tmp_path),
                                    "--reduced-excess", "2"])
    assert res.exit_code == 0 and (tmp_path / "census_r2.csv").exists()
