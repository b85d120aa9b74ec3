"""End-to-end tests of the command line."""

import asyncio
import json

import pytest

from lorentz_surfaces.cli import main, parse_args
from lorentz_surfaces.handlers import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED
from lorentz_surfaces.scenes import builtin_scene, load_scene, scene_surface_data


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("LW_THREADS", "LW_GRID_POINTS", "LW_SEED"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("LW_THREADS", "2")


def run_cli(*argv):
    return asyncio.run(main(list(argv)))


class TestParser:
    def test_command_is_required(self):
        with pytest.raises(SystemExit):
            parse_args([])

    def test_merge_accepts_two_scenes(self):
        args = parse_args(["merge", "--scene", "a", "--scene", "b", "--omega2", "-1"])
        assert args.scene == ["a", "b"]
        assert (args.omega1, args.omega2) == (1, -1)

    def test_invalid_format(self):
        with pytest.raises(SystemExit):
            parse_args(["curve", "--scene", "catenoid-gamma1", "--format", "obj"])


class TestCurveCommand:
    def test_table_on_stdout(self, capsys):
        assert run_cli("curve", "--scene", "catenoid-gamma1", "--grid", "2") == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 3
        assert lines[0].startswith("t,x1,")

    def test_second_curve_to_directory(self, tmp_path):
        code = run_cli("curve", "--scene", "catenoid-merged", "--curve", "2", "--grid", "3", "--format", "json", "--out", str(tmp_path))
        assert code == EXIT_OK
        document = json.loads((tmp_path / "catenoid-merged-curve2.json").read_text())
        assert len(document["t"]) == 3

    def test_missing_curve(self, capsys):
        assert run_cli("curve", "--scene", "catenoid-gamma1", "--curve", "2") == EXIT_USAGE
        assert "/curves/1" in capsys.readouterr().err

    def test_invalid_expression_reports_pointer(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text(json.dumps({"space": "R31", "curves": [{"g": "exp(t"}], "domain": [[0.0, 1.0]]}))
        assert run_cli("curve", "--scene", str(path)) == EXIT_USAGE
        err = capsys.readouterr().err
        assert "/curves/0/g" in err
        assert "ValidationError" in err

    def test_invalid_grid(self, capsys):
        assert run_cli("curve", "--scene", "catenoid-gamma1", "--grid", "1") == EXIT_USAGE


class TestSurfaceCommand:
    def test_obj_mesh(self, capsys):
        assert run_cli("surface", "--scene", "catenoid-merged", "--grid", "4x3", "--format", "obj") == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert sum(line.startswith("v ") for line in lines) == 12
        assert sum(line.startswith("f ") for line in lines) == 2 * 3 * 2

    def test_default_outputs_in_directory(self, tmp_path):
        assert run_cli("surface", "--scene", "first-type", "--grid", "3", "--out", str(tmp_path)) == EXIT_OK
        assert sorted(p.name for p in tmp_path.iterdir()) == ["first-type.csv", "first-type.obj"]
        rows = (tmp_path / "first-type.csv").read_text().splitlines()
        assert len(rows) == 10
        assert rows[1].endswith(",first")

    def test_curve_scene_is_rejected(self, capsys):
        assert run_cli("surface", "--scene", "catenoid-gamma1") == EXIT_USAGE

    def test_degenerate_domain_reports_witness(self, tmp_path, capsys):
        document = builtin_scene("catenoid-merged").model_dump(mode="json")
        document["domain"] = [[-1.0, 1.0], [-1.0, 1.0]]
        path = tmp_path / "crossing.json"
        path.write_text(json.dumps(document))
        assert run_cli("surface", "--scene", str(path)) == EXIT_USAGE
        err = capsys.readouterr().err
        assert "PreconditionError" in err
        assert "witness=" in err


class TestCorrespondenceCommands:
    def test_split_then_merge(self, tmp_path, capsys):
        assert run_cli("split", "--scene", "catenoid-merged", "--out", str(tmp_path)) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["files"] == ["catenoid-merged-g.json", "catenoid-merged-h.json"]
        assert report["type"] == "first"

        first, second = (str(tmp_path / name) for name in report["files"])
        assert run_cli("merge", "--scene", first, "--scene", second) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["scenes"][0]["name"] == "catenoid-merged"

        merged_path = tmp_path / "merged.json"
        merged_path.write_text(json.dumps(document["scenes"][0]))
        assert scene_surface_data(load_scene(str(merged_path))) == scene_surface_data(builtin_scene("catenoid-merged"))

    def test_split_members_are_r31_catenoids(self, tmp_path, capsys):
        assert run_cli("split", "--scene", "catenoid-merged") == EXIT_OK
        scenes = json.loads(capsys.readouterr().out)["scenes"]
        assert [scene["space"] for scene in scenes] == ["R31", "R31"]
        assert [curve["g"] for curve in scenes[1]["curves"]] == ["exp(t)", "exp(-t)"]

    def test_merge_needs_two_scenes(self, capsys):
        assert run_cli("merge", "--scene", "catenoid-first-kind") == EXIT_USAGE


class TestVerifyCommand:
    def test_empty_corpus(self, capsys):
        assert run_cli("verify", "--corpus", "none") == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["summary"]["total"] == 0

    def test_failure_exit_code(self, tmp_path, capsys):
        code = run_cli("verify", "--scene", "catenoid-gamma1", "--tolerance", "1e-300", "--out", str(tmp_path))
        assert code == EXIT_VERIFICATION_FAILED
        captured = capsys.readouterr()
        assert "Verification failed" in captured.err
        assert json.loads(captured.out)["corpus"] == "scenes"
        assert (tmp_path / "verify-scenes.json").exists()

    def test_curve_corpus_passes(self, capsys):
        assert run_cli("verify", "--corpus", "curves", "--seed", "1") == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["seed"] == 1
        assert report["summary"]["failed"] == 0

    def test_unknown_corpus(self, capsys):
        assert run_cli("verify", "--corpus", "missing") == EXIT_USAGE

    def test_non_positive_tolerance(self, capsys):
        assert run_cli("verify", "--corpus", "none", "--tolerance", "0") == EXIT_USAGE


class TestConfiguration:
    def test_missing_config_file(self, tmp_path, capsys):
        assert run_cli("--config", str(tmp_path / "missing.json"), "verify", "--corpus", "none") == EXIT_USAGE
        assert "Error:" in capsys.readouterr().err

    def test_config_file_sets_projection(self, tmp_path, capsys):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"projection": "drop1"}))
        assert run_cli("--config", str(path), "surface", "--scene", "catenoid-merged", "--grid", "2", "--format", "obj") == EXIT_OK
        vertex = next(line for line in capsys.readouterr().out.splitlines() if line.startswith("v "))
        assert len(vertex.split()) == 4
