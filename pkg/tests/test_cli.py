from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from app import fixtures
from app.cli import EXIT_BUDGET, EXIT_GEOMETRY, EXIT_INPUT, EXIT_OK, main
from app.jobs import read_meta

from .conftest import write_points


def _run(*argv: str) -> tuple[int, dict, str]:
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    text = out.getvalue()
    return code, json.loads(text), text


@pytest.fixture
def conic_file(tmp_path) -> Path:
    return write_points(tmp_path / "conic.txt", fixtures.CONIC_POINTS, fixtures.CONIC_LABELS, 2)


@pytest.fixture
def quadric_file(tmp_path) -> Path:
    return write_points(tmp_path / "quadric.txt", fixtures.QUADRIC_POINTS, fixtures.QUADRIC_LABELS, 3)


@pytest.fixture
def pentagon_file(tmp_path) -> Path:
    pts = [(x, y, 0) for x, y in fixtures.PENTAGON]
    return write_points(tmp_path / "pentagon.txt", pts, fixtures.PENTAGON_LABELS, 3)


@pytest.fixture
def cone_pair_file(tmp_path) -> Path:
    return write_points(tmp_path / "pair.txt", fixtures.CONE_PAIR_POINTS, ["A", "B", "C"], 3)


def test_conic5(conic_file) -> None:
    code, doc, _ = _run("conic5", str(conic_file), "--oracle")
    assert code == EXIT_OK
    assert doc["conic"]["coeffs"] == [str(c) for c in fixtures.CONIC_CANONICAL]
    assert doc["multipliers"] == ["494", "1064"]
    assert doc["lines"]["p"] == ["27", "3", "-11"]
    assert doc["class"] == "Ellipse"
    assert doc["residuals"] == ["0"] * 5
    assert doc["flops"]["pencil_flops"] == 104
    assert doc["flops"]["det_flops"] == 3633
    assert doc["oracle"]["agrees"] is True


def test_conic5_output_is_byte_stable(conic_file) -> None:
    assert _run("conic5", str(conic_file))[2] == _run("conic5", str(conic_file))[2]


def test_conic5_accepts_a_flat_pentagon(pentagon_file) -> None:
    code, doc, _ = _run("conic5", str(pentagon_file))
    assert code == EXIT_OK
    assert doc["conic"]["coeffs"] == ["0", "5", "6", "-2", "0", "4"]
    assert doc["class"] == "Hyperbola"


def test_conic5_rejects_points_off_the_plane(tmp_path) -> None:
    path = write_points(tmp_path / "bad.txt", [(0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 3, 0)], "ABCDE", 3)
    code, doc, _ = _run("conic5", str(path))
    assert code == EXIT_INPUT
    assert doc["error"] == "DocumentError"


def test_conic5_degenerate_points(tmp_path) -> None:
    path = write_points(tmp_path / "line.txt", [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1)], "ABCDE", 2)
    code, doc, _ = _run("conic5", str(path))
    assert code == EXIT_GEOMETRY
    assert doc["error"] == "DegenerateConfiguration"


def test_conic5_plot(conic_file, tmp_path) -> None:
    svg = tmp_path / "plot" / "conic.svg"
    code, doc, _ = _run("conic5", str(conic_file), "--plot", str(svg), "--samples", "64")
    assert code == EXIT_OK
    assert Path(doc["plot"]) == svg
    assert svg.read_text(encoding="utf-8").lstrip().startswith("<?xml")


def test_missing_input_is_an_input_error(tmp_path) -> None:
    code, doc, _ = _run("conic5", str(tmp_path / "missing.txt"))
    assert code == EXIT_INPUT
    assert "not found" in doc["reason"]


def test_wrong_point_count(quadric_file) -> None:
    code, doc, _ = _run("conic5", str(quadric_file))
    assert code == EXIT_INPUT


def test_quadric9(quadric_file) -> None:
    code, doc, _ = _run("quadric9", str(quadric_file), "--oracle")
    assert code == EXIT_OK
    assert doc["multipliers"] == [str(m) for m in fixtures.QUADRIC_MULTIPLIERS]
    assert doc["planes"]["ABF"] == ["-16", "25", "-28", "49"]
    assert doc["choice"] == ["ABF↔CDE", "ADE↔BCF", "ADF↔BCE", "ABE↔CDF"]
    assert doc["roles"]["C"] == "C"
    assert doc["oracle"]["agrees"] is True


def test_quadric9_pairing_and_permutation_agree(quadric_file) -> None:
    base = _run("quadric9", str(quadric_file))[1]["quadric"]["coeffs"]
    code, doc, _ = _run("quadric9", str(quadric_file), "--permute", "8,7,6,5,4,3,2,1,0")
    assert code == EXIT_OK
    assert doc["roles"]["A"] == "J"
    assert doc["quadric"]["coeffs"] == base
    for pairing in (0, 17, 209):
        code, doc, _ = _run("quadric9", str(quadric_file), "--pairing", str(pairing))
        assert code == EXIT_OK
        assert doc["quadric"]["coeffs"] == base


def test_quadric9_bad_pairing_index(quadric_file) -> None:
    code, doc, _ = _run("quadric9", str(quadric_file), "--pairing", "210")
    assert code == EXIT_INPUT


def test_quadric9_mesh(quadric_file, tmp_path) -> None:
    mesh = tmp_path / "q.obj"
    code, _, _ = _run("quadric9", str(quadric_file), "--mesh", str(mesh), "--resolution", "16")
    assert code == EXIT_OK
    text = mesh.read_text(encoding="utf-8")
    assert "o quadric" in text and "\nf " in text


def test_quadric9_mesh_skips_points_at_infinity(tmp_path) -> None:
    lines = ["dimension: 3", "homogeneous: true"]
    lines += [f"{label} 1 " + " ".join(str(c) for c in p) for label, p in zip("ABCDEFGH", fixtures.QUADRIC_POINTS)]
    lines.append("J 0 0 0 1")
    path = tmp_path / "nine.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    mesh = tmp_path / "q.obj"
    code, doc, _ = _run("quadric9", str(path), "--mesh", str(mesh), "--resolution", "16")
    assert code == EXIT_OK
    assert not any(int(r) for r in doc["residuals"])
    assert doc["mesh"] == str(mesh)
    text = mesh.read_text(encoding="utf-8")
    assert "o quadric" in text
    assert "# J" not in text and "# H" in text


def test_cone_pair(cone_pair_file) -> None:
    code, doc, _ = _run("cone-pair", str(cone_pair_file))
    assert code == EXIT_OK
    assert doc["translation"] == pytest.approx(list(fixtures.CONE_TRANSLATION), abs=1e-3)
    assert doc["translations"][0] == [0.0, 0.0, 0.0]
    assert doc["shared_conic"]["plane_factor"] == pytest.approx(fixtures.PLANE_FACTOR, abs=1e-3)
    assert doc["shared_conic"]["flagged"] is False


def test_cone_pair_rejects_points_off_the_cone(tmp_path) -> None:
    path = write_points(tmp_path / "off.txt", [(1, 0, 0), (0, 1, 1), (1, 0, 1)], "ABC", 3)
    code, doc, _ = _run("cone-pair", str(path))
    assert code == EXIT_GEOMETRY
    assert doc["error"] == "PointsOffCone"


def test_place_cone_small_budget_is_partial(pentagon_file) -> None:
    code, doc, _ = _run("place-cone", str(pentagon_file), "--max-starts", "100", "--early-stop-window", "5000")
    assert code == EXIT_BUDGET
    assert doc["solver"]["partial"] is True
    assert doc["solver"]["starts_used"] == 100
    assert "warning" in doc
    assert doc["uvp"]["f16_no_real_roots"] is True


@pytest.mark.slow
def test_place_cone(pentagon_file) -> None:
    code, doc, _ = _run("place-cone", str(pentagon_file))
    assert code == EXIT_OK
    assert len(doc["classes"]) == 8
    assert [c["index"] for c in doc["classes"]] == list(range(8))
    assert doc["mirror_pairs"] == [[0, 7], [1, 5], [2, 4], [3, 6]]
    assert all(c["residual"] < 1e-8 for c in doc["classes"])


def test_selfcheck_without_solver() -> None:
    code, doc, _ = _run("selfcheck", "--skip-solver")
    assert code == EXIT_OK
    assert doc["passed"] is True
    names = [c["name"] for c in doc["checks"]]
    assert "conic_pencil" in names and "cone_placement" not in names


def test_output_run_directory(conic_file, tmp_path) -> None:
    runs = tmp_path / "runs"
    code, doc, text = _run("conic5", str(conic_file), "--output", str(runs))
    assert code == EXIT_OK
    (job_dir,) = list(runs.iterdir())
    assert (job_dir / "result.json").read_text(encoding="utf-8") == text
    meta = read_meta(job_dir / "meta.json")
    assert meta["state"] == "done"
    assert meta["exit_code"] == 0


def test_failed_run_is_recorded(tmp_path) -> None:
    runs = tmp_path / "runs"
    code, _, _ = _run("conic5", str(tmp_path / "missing.txt"), "--output", str(runs))
    assert code == EXIT_INPUT
    (job_dir,) = list(runs.iterdir())
    assert read_meta(job_dir / "meta.json")["state"] == "failed"


def test_quadric9_needs_nine_points(tmp_path) -> None:
    path = write_points(tmp_path / "eight.txt", fixtures.QUADRIC_POINTS[:8], "ABCDEFGH", 3)
    code, doc, _ = _run("quadric9", str(path))
    assert code == EXIT_INPUT
    assert "9 points" in doc["reason"]


def test_place_cone_needs_the_first_point_at_the_origin(tmp_path) -> None:
    pts = [(x + 1, y, 0) for x, y in fixtures.PENTAGON]
    path = write_points(tmp_path / "shifted.txt", pts, fixtures.PENTAGON_LABELS, 3)
    code, doc, _ = _run("place-cone", str(path), "--max-starts", "10")
    assert code == EXIT_GEOMETRY
    assert doc["error"] == "BadPentagon"


@pytest.mark.parametrize(
    "argv",
    [
        ("conic5", "{conic}", "--plot", "{out}", "--samples", "1"),
        ("quadric9", "{quadric}", "--mesh", "{out}", "--resolution", "1"),
        ("cone-pair", "{cone}", "--scene", "{out}", "--resolution", "0"),
    ],
)
def test_sampling_grids_need_two_points_per_axis(argv, conic_file, quadric_file, cone_pair_file, tmp_path) -> None:
    files = {"conic": conic_file, "quadric": quadric_file, "cone": cone_pair_file, "out": tmp_path / "out"}
    with pytest.raises(SystemExit) as exc:
        main([a.format(**files) for a in argv], stdout=io.StringIO())
    assert exc.value.code == 2
    assert not (tmp_path / "out").exists()
