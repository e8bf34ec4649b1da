"""End-to-end command-line checks, run in process through main(argv)."""

import random

import pytest

from pentalab.cli import main, parse_lambda
from pentalab.construction import polygon_step
from pentalab.moduli import pentagon_from_moduli, reference_pentagons
from pentalab.polyfile import format_polygon, parse_blocks, parse_polygon
from pentalab.projective import HPoint, same_point
from pentalab.scalars import (
    EXACT,
    FLOAT,
    PHI,
    PSI,
    ProjParam,
    QSqrt5,
    parse_exact,
    rational,
)
from pentalab.verify import sample_pentagon

QUAD = """field exact
-4/1 -1/1 1/1
-2/1 2/1 1/1
1/1 3/1 1/1
4/1 -2/1 1/1
"""


@pytest.fixture
def quad_file(tmp_path):
    path = tmp_path / "quad.poly"
    path.write_text(QUAD, encoding="utf-8")
    return str(path)


def write_pentagon(tmp_path, field, vertices, name="pent.poly"):
    path = tmp_path / name
    path.write_text(format_polygon(field, vertices), encoding="utf-8")
    return str(path)


def parse_token_point(field, line):
    tokens = line.split()[1:]
    return HPoint(*(field.from_text(t) for t in tokens))


def test_construct_result(quad_file, capsys):
    assert main(["construct", quad_file, "--lambda", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    tags = [l.split()[0] for l in lines]
    assert tags == ["frame_zero", "frame_unit", "frame_infinity", "result"]
    result = parse_token_point(EXACT, lines[3])
    want = HPoint(EXACT.scalar(rational(-25, 41)), EXACT.scalar(rational(122, 41)), EXACT.one)
    assert same_point(EXACT, result, want)


def test_construct_lambda_zero_hits_frame_zero(quad_file, capsys):
    assert main(["construct", quad_file, "--lambda", "0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    zero = parse_token_point(EXACT, lines[0])
    result = parse_token_point(EXACT, lines[3])
    assert same_point(EXACT, result, zero)


def test_construct_wrong_vertex_count(tmp_path, capsys):
    pentagon = pentagon_from_moduli(EXACT, EXACT.scalar(3), EXACT.scalar(2))
    path = write_pentagon(tmp_path, EXACT, pentagon)
    assert main(["construct", path, "--lambda", "1"]) == 2
    assert "exactly 4 vertices" in capsys.readouterr().err


def test_construct_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.poly"
    path.write_text("field exact\n0/1 0/1\n", encoding="utf-8")
    assert main(["construct", str(path), "--lambda", "1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_construct_missing_file(tmp_path, capsys):
    assert main(["construct", str(tmp_path / "nope.poly"), "--lambda", "1"]) == 4


def test_iterate_zero_steps_echo(quad_file, capsys):
    assert main(["iterate", quad_file, "--lambda", "1", "--steps", "0"]) == 0
    out = capsys.readouterr().out
    field, verts = parse_polygon(QUAD)
    assert out == format_polygon(field, verts)


def test_iterate_quadrilateral(quad_file, capsys):
    assert main(["iterate", quad_file, "--lambda", "2", "--steps", "1"]) == 0
    blocks = parse_blocks(capsys.readouterr().out)
    assert len(blocks) == 2
    assert blocks[0][1] == parse_polygon(QUAD)[1]


def test_iterate_then_moduli_regular(tmp_path, capsys):
    rng = random.Random(6)
    pentagon = sample_pentagon(rng, 8)
    path = write_pentagon(tmp_path, EXACT, pentagon)
    assert main(["iterate", path, "--lambda", "phi", "--steps", "1"]) == 0
    blocks = parse_blocks(capsys.readouterr().out)
    assert len(blocks) == 2
    image_path = write_pentagon(tmp_path, EXACT, blocks[1][1], "image.poly")
    assert main(["moduli", image_path]) == 0
    out = capsys.readouterr().out
    assert "class Regular" in out


def test_iterate_degenerate_reports_partial(tmp_path, capsys):
    bad = pentagon_from_moduli(EXACT, EXACT.scalar(2), EXACT.scalar(2))
    path = write_pentagon(tmp_path, EXACT, bad)
    assert main(["iterate", path, "--lambda", "1", "--steps", "4"]) == 3
    captured = capsys.readouterr()
    assert len(parse_blocks(captured.out)) == 1
    assert "degenerate at step 1" in captured.err
    assert "window 0" in captured.err


def test_verify_zero_trials(capsys):
    assert main(["verify", "--lambda", "phi", "--trials", "0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "lambda=phi field=exact trials=0 passes=0 failures=0"
    assert lines[1] == "checks main=0/0 inserted=0/0 coincidence=0/0"


def test_verify_small_campaign(capsys):
    assert main(["verify", "--lambda", "psi", "--trials", "3", "--seed", "7"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "lambda=psi field=exact trials=3 passes=3 failures=0"
    assert lines[1] == "checks main=3/3 inserted=3/3 coincidence=3/3"


def test_verify_deterministic_given_seed(capsys):
    main(["verify", "--lambda", "phi", "--trials", "3", "--seed", "11"])
    first = capsys.readouterr().out
    main(["verify", "--lambda", "phi", "--trials", "3", "--seed", "11"])
    assert capsys.readouterr().out == first
    main(["verify", "--lambda", "phi", "--trials", "3", "--seed", "12"])
    assert capsys.readouterr().out.splitlines()[0].startswith("lambda=phi")


def test_verify_rejects_float_model(capsys):
    assert main(["verify", "--lambda", "phi", "--field", "float"]) == 2
    assert "exact model only" in capsys.readouterr().err


def test_moduli_chart_section(tmp_path, capsys):
    pentagon = pentagon_from_moduli(EXACT, EXACT.scalar(3), EXACT.scalar(2))
    path = write_pentagon(tmp_path, EXACT, pentagon)
    assert main(["moduli", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "moduli 3/1 2/1"
    assert lines[1] == "chart ok"
    assert lines[2] == "class Other"


def test_moduli_float_circle(tmp_path, capsys):
    regular, _ = reference_pentagons(FLOAT)
    path = write_pentagon(tmp_path, FLOAT, regular)
    assert main(["moduli", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[2] == "class Regular relabeling 0,1,2,3,4"


def test_moduli_star_image(tmp_path, capsys):
    rng = random.Random(10)
    pentagon = sample_pentagon(rng, 8)
    image = polygon_step(EXACT, pentagon, ProjParam(PSI))
    path = write_pentagon(tmp_path, EXACT, image)
    assert main(["moduli", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[2].startswith("class StarRegular relabeling ")


def test_moduli_exact_on_float_file_rejected(tmp_path, capsys):
    regular, _ = reference_pentagons(FLOAT)
    path = write_pentagon(tmp_path, FLOAT, regular)
    assert main(["moduli", path, "--field", "exact"]) == 2
    assert "cannot lift" in capsys.readouterr().err


def test_julia_single_white_pixel(tmp_path, capsys):
    x = float(PHI) + 1.0
    y = float(PHI)
    out = tmp_path / "img.ppm"
    code = main([
        "julia",
        "--lambda", "0.2",
        "--size", "1x1",
        "--window", f"{x - 0.5},{x + 0.5},{y - 0.5},{y + 0.5}",
        "--out", str(out),
    ])
    assert code == 0
    assert out.read_bytes() == b"P6\n1 1\n255\n\xff\xff\xff"
    line = capsys.readouterr().out.strip()
    assert line == "lambda=0.2 converged=1.000000 not_converged=0.000000 degenerate=0.000000"


def test_julia_deterministic_output(tmp_path, capsys):
    args = ["julia", "--lambda", "0.2", "--size", "16x12", "--max-iter", "20"]
    out1 = tmp_path / "a.ppm"
    out2 = tmp_path / "b.ppm"
    assert main(args + ["--out", str(out1)]) == 0
    first = capsys.readouterr().out
    assert main(args + ["--out", str(out2)]) == 0
    second = capsys.readouterr().out
    assert out1.read_bytes() == out2.read_bytes()
    assert first == second


def test_julia_bad_size(tmp_path, capsys):
    out = tmp_path / "img.ppm"
    assert main(["julia", "--lambda", "1", "--size", "200by200", "--out", str(out)]) == 2
    assert main(["julia", "--lambda", "1", "--window", "1,2,3", "--out", str(out)]) == 2
    assert main(["julia", "--lambda", "1", "--window", "1,2,a,4", "--out", str(out)]) == 2


def test_julia_unwritable_output(tmp_path, capsys):
    out = tmp_path / "no" / "such" / "dir" / "img.ppm"
    assert main(["julia", "--lambda", "1", "--size", "2x2", "--out", str(out)]) == 4


def test_usage_error_exit_code(capsys):
    assert main(["construct"]) == 2
    assert main(["no-such-command"]) == 2


def test_parse_lambda_names():
    assert parse_lambda("phi", EXACT) == ProjParam(PHI)
    assert parse_lambda("psi", EXACT) == ProjParam(PSI)
    assert parse_lambda("inf", EXACT).is_infinite
    assert parse_lambda("infinity", FLOAT).is_infinite
    assert parse_lambda("phi", FLOAT).value == float(PHI)


def test_parse_lambda_exact_values():
    assert parse_lambda("0.2", EXACT) == ProjParam(QSqrt5(rational(1, 5)))
    assert parse_lambda("-3", EXACT) == ProjParam(QSqrt5(-3))
    assert parse_lambda("1/3+1/3*s5", EXACT) == ProjParam(parse_exact("1/3+1/3*s5"))
    with pytest.raises(ValueError):
        parse_lambda("zebra", EXACT)
    with pytest.raises(ValueError):
        parse_lambda("nan", EXACT)


def test_parse_lambda_float_values():
    assert parse_lambda("0.2", FLOAT) == ProjParam(0.2)
    assert parse_lambda("1/2+1/2*s5", FLOAT) == ProjParam(float(PHI))
    with pytest.raises(ValueError):
        parse_lambda("zebra", FLOAT)
    with pytest.raises(ValueError):
        parse_lambda("nan", FLOAT)
