import json

import pytest

from elimdeg.cli import main
from elimdeg.geometry import convex_hull
from elimdeg.puiseux import DegreeReport
from elimdeg.resultant import ComparisonReport
from elimdeg.svg import polygon_svg
from elimdeg.systems import WORKED_F, WORKED_THETA

SQUARE = '{"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}'
SHARED_F = "3*y^4 + x^2*y^3 + x^3*y^2 + 5"
SHARED_THETA = "-2*y^4 + x^2*y^3 + x^2*y^2 + 7"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_parse(capsys):
    data = run_json(capsys, "parse", "x^2*y^3+5")
    assert data == {"polynomial": "x^2*y^3 + 5", "support": [[2, 3], [0, 0]], "seed": 0}


def test_parse_pattern_deterministic(capsys):
    first = run_json(capsys, "parse", "--pattern", "(x^2)*y", "--seed", "7")
    second = run_json(capsys, "parse", "--pattern", "(x^2)*y", "--seed", "7")
    assert first == second and first["seed"] == 7
    assert first["support"] == [[2, 1], [1, 1], [0, 1]]


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "parse", "x^-1")
    assert code == 2 and "column 3" in err


def test_predict_worked(capsys):
    data = run_json(capsys, "predict", "--pattern", WORKED_F, WORKED_THETA, "--seed", "4")
    assert data["degree"] == 58 and data["seed"] == 4
    assert sorted(c["h"] for c in data["classes"]) == ["-5/3", "1/2"]
    assert sorted(data["k_values"]) == ["11/2", "11/2", "5", "5", "5"]
    assert data["finck"] == "n/a" and not data["finck_consistent"]
    report = DegreeReport.from_json(data)
    assert report.degree == 58


def test_predict_finck_uniform(capsys):
    f = "(x^3)*y^2+(x^3)*y+(x^3)"
    theta = "(x^2)*y^3+(x^2)*y^2+(x^2)*y+(x^2)"
    data = run_json(capsys, "predict", "--pattern", f, theta)
    assert data["degree"] == 2 * 2 + 3 * 3 and data["finck_consistent"]
    code, out, _ = run(capsys, "predict", "--pattern", f, theta, "--format", "text")
    assert "finck-consistent" in out


def test_predict_missing_origin(capsys):
    code, _, err = run(capsys, "predict", "x*y+x", "y+1")
    assert code == 3 and "contain the origin" in err


def test_mixed_area_worked(capsys):
    data = run_json(capsys, "mixed-area", "--pattern", WORKED_F, WORKED_THETA)
    assert data == {
        "dilation": 58, "ie": 58, "recursion": 58, "subdivision": 58, "minding": 58, "agree": True, "seed": 0
    }


def test_mixed_area_squares_and_shared_edge(capsys):
    data = run_json(capsys, "mixed-area", SQUARE, SQUARE)
    assert {data[k] for k in ("dilation", "ie", "recursion", "subdivision", "minding")} == {2}
    data = run_json(capsys, "mixed-area", SHARED_F, SHARED_THETA)
    assert {v for k, v in data.items() if k not in ("agree", "seed") and v != "n/a"} == {13}
    data = run_json(capsys, "mixed-area", "--method", "recursion", SQUARE, SQUARE)
    assert data["recursion"] == 2


def test_check_worked_and_second(capsys):
    data = run_json(capsys, "check", "--pattern", WORKED_F, WORKED_THETA)
    assert data["drop"] == 0
    report = ComparisonReport.from_json(data)
    assert report.actual == 58
    f = "2*x^2*y^4 + 3*y^2 - x*y^2 + 4*x^3*y + 5 - 6*x^2"
    theta = "7*x^5*y^2 + 2*y + 3*x^2*y - 1 + x^4"
    data = run_json(capsys, "check", f, theta)
    assert (data["predicted"], data["actual"], data["gcd_x"]) == (25, 25, "x^2")
    data = run_json(capsys, "check", f, theta, "--eliminate", "x")
    assert (data["predicted"], data["actual"], data["gcd_y"]) == (24, 24, "y")


def test_resultant_and_bounds(capsys):
    data = run_json(capsys, "resultant", "y-x", "y+x")
    assert data["psi"] == "2*x" and data["degree"] == 1
    data = run_json(capsys, "bounds", "--pattern", WORKED_F, WORKED_THETA)
    assert data["bezout"] == 78 and data["li_wang"] == 58


def test_common_factor_exit_code(capsys):
    code, _, err = run(capsys, "resultant", "x*y+y", "x*y^2+y^2")
    assert code == 3 and "identically zero" in err


def test_subdivide(capsys):
    data = run_json(capsys, "subdivide", "--pattern", WORKED_F, WORKED_THETA)
    assert data["mixed_area"] == "58" and data["valid"]
    assert {s["ell"] for s in data["strips"]} == {"5", "11/2"}
    code, out, _ = run(capsys, "subdivide", "--pattern", WORKED_F, WORKED_THETA, "--format", "text")
    assert "mixed cells total 58" in out


def test_svg_polygon_labels(capsys):
    code, out, _ = run(capsys, "svg", "--pattern", WORKED_THETA)
    assert code == 0 and out.startswith("<svg")
    assert "h=1/2" in out and "h=-5/3" in out
    for v in ["(0,0)", "(4,0)", "(9,3)", "(8,5)", "(0,5)"]:
        assert v in out


def test_svg_subdivision_total(capsys, tmp_path):
    target = tmp_path / "sub.svg"
    code, _, _ = run(capsys, "svg", "--pattern", WORKED_F, WORKED_THETA, "--out", str(target))
    text = target.read_text()
    assert code == 0 and "mixed cells total 58" in text and ">32<" in text


def test_svg_deterministic(capsys):
    a = run(capsys, "svg", "--pattern", WORKED_F, WORKED_THETA)[1]
    b = run(capsys, "svg", "--pattern", WORKED_F, WORKED_THETA)[1]
    assert a == b


def test_svg_unit_square():
    text = polygon_svg(convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)]))
    (line,) = [l for l in text.splitlines() if l.startswith("<polygon")]
    assert len(line.split('points="')[1].split('"')[0].split()) == 4


def test_svg_empty_input(capsys):
    code, _, err = run(capsys, "svg")
    assert code == 4 and "render" in err


def test_file_input(capsys, tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("x^2*y^3+5\n")
    assert run_json(capsys, "parse", f"@{path}")["support"] == [[2, 3], [0, 0]]


def test_no_svg_for_text_commands(capsys):
    code, _, _ = run(capsys, "parse", "x", "--format", "svg")
    assert code == 4


@pytest.mark.parametrize("argv", [["predict", "y+1"], ["check"]])
def test_wrong_arity(capsys, argv):
    assert run(capsys, *argv)[0] == 3
