"""Polygon file parsing, printing and their round-trip."""

import pytest
from hypothesis import given, strategies as st

from pentalab.polyfile import (
    PolygonFormatError,
    format_polygon,
    parse_blocks,
    parse_polygon,
    read_polygon,
)
from pentalab.projective import HPoint, same_point
from pentalab.scalars import EXACT, FLOAT, QSqrt5, rational

SQUARE = """field exact
0/1 0/1 1/1
1/1 0/1 1/1
1/1 1/1 1/1
0/1 1/1 1/1
"""


def test_parse_single_block():
    field, vertices = parse_polygon(SQUARE)
    assert field is EXACT
    assert len(vertices) == 4
    assert vertices[2] == HPoint(QSqrt5(1), QSqrt5(1), QSqrt5(1))


def test_comments_and_blank_lines():
    text = (
        "# leading comment\n"
        "\n"
        "field float  # trailing comment\n"
        "0.0 0.0 1.0\n"
        "\n"
        "   # indented comment between blocks\n"
        "field exact\n"
        "1/1 0/1 0/1\n"
        "0/1 1/1 0/1\n"
        "0/1 0/1 1/1\n"
        "1/1 1/1 1/1\n"
    )
    # the float block has too few vertices and must be reported, so use
    # a valid quadrilateral there instead
    text = text.replace("0.0 0.0 1.0\n", "0.0 0.0 1.0\n1.0 0.0 1.0\n1.0 1.0 1.0\n0.0 1.0 1.0\n")
    blocks = parse_blocks(text)
    assert len(blocks) == 2
    assert blocks[0][0] is FLOAT
    assert blocks[1][0] is EXACT


def test_exact_tokens_with_radical_part():
    text = "field exact\n1/2+1/2*s5 0/1 1/1\n1/1 0/1 1/1\n1/1 1/1 1/1\n0/1 1/1 1/1\n"
    _, vertices = parse_polygon(text)
    assert vertices[0].x == QSqrt5(rational(1, 2), rational(1, 2))


def test_format_round_trip_exact():
    field, vertices = parse_polygon(SQUARE)
    assert format_polygon(field, vertices) == SQUARE
    again = parse_polygon(format_polygon(field, vertices))
    assert again == (field, vertices)


def test_format_round_trip_float():
    vertices = (
        HPoint(0.0, 0.0, 1.0),
        HPoint(1.5, 0.25, 1.0),
        HPoint(1.0, 1.0, 1.0),
        HPoint(-0.125, 1.0, 1.0),
    )
    text = format_polygon(FLOAT, vertices)
    assert text.endswith("\n")
    field, parsed = parse_polygon(text)
    assert field is FLOAT
    assert parsed == vertices


coord = st.builds(
    rational, st.integers(min_value=-999, max_value=999), st.integers(min_value=1, max_value=99)
)


@given(st.lists(st.tuples(coord, coord), min_size=4, max_size=7))
def test_round_trip_exact_random(points):
    vertices = tuple(
        HPoint(EXACT.scalar(x), EXACT.scalar(y), EXACT.one) for x, y in points
    )
    field, parsed = parse_polygon(format_polygon(EXACT, vertices))
    assert field is EXACT
    assert parsed == vertices


finite_float = st.floats(allow_nan=False, allow_infinity=False, width=64)


@given(st.lists(st.tuples(finite_float, finite_float), min_size=4, max_size=6))
def test_round_trip_float_random(points):
    vertices = tuple(HPoint(x, y, 1.0) for x, y in points)
    field, parsed = parse_polygon(format_polygon(FLOAT, vertices))
    assert parsed == vertices


def error_line(text):
    with pytest.raises(PolygonFormatError) as exc:
        parse_polygon(text)
    return exc.value.lineno, str(exc.value)


def test_missing_header():
    lineno, msg = error_line("0/1 0/1 1/1\n")
    assert lineno == 1
    assert "field exact" in msg


def test_unknown_field():
    lineno, msg = error_line("field rational\n0/1 0/1 1/1\n")
    assert lineno == 1


def test_wrong_token_count():
    lineno, msg = error_line("field exact\n0/1 0/1\n")
    assert lineno == 2
    assert "3 scalar tokens" in msg


def test_bad_scalar_token():
    lineno, msg = error_line("field exact\n0/1 zebra 1/1\n")
    assert lineno == 2
    assert "bad scalar token" in msg
    lineno, msg = error_line("field float\n0.0 what 1.0\n")
    assert lineno == 2


def test_zero_vertex_rejected():
    lineno, msg = error_line("field exact\n0/1 0/1 0/1\n")
    assert lineno == 2
    assert "not all be zero" in msg


def test_too_few_vertices():
    lineno, msg = error_line("field exact\n1/1 0/1 1/1\n0/1 1/1 1/1\n")
    assert lineno == 1
    assert "at least 4" in msg


def test_empty_input():
    lineno, msg = error_line("  \n# only a comment\n")
    assert lineno is None
    assert "no polygon" in msg


def test_multiple_blocks_rejected_by_parse_polygon():
    text = SQUARE + "\n" + SQUARE
    assert len(parse_blocks(text)) == 2
    lineno, msg = error_line(text)
    assert "exactly one" in msg


def test_read_polygon(tmp_path):
    path = tmp_path / "square.poly"
    path.write_text(SQUARE, encoding="utf-8")
    field, vertices = read_polygon(path)
    assert field is EXACT
    assert same_point(EXACT, vertices[0], HPoint(EXACT.zero, EXACT.zero, EXACT.one))
