"""Line-oriented polygon files.

Format: a ``field exact`` or ``field float`` header line, then one
vertex per line as three whitespace-separated scalar tokens.  Exact
tokens use the `p/q` / `p/q+r/s*s5` literal syntax; float tokens are
decimals.  ``#`` starts a comment, blank lines between polygons separate
blocks.  Parse and print round-trip on canonical forms.

    # a square, counterclockwise
    field exact
    0/1 0/1 1/1
    1/1 0/1 1/1
    1/1 1/1 1/1
    0/1 1/1 1/1
"""

from __future__ import annotations

from .projective import HPoint
from .scalars import field_by_name


class PolygonFormatError(ValueError):
    """Malformed polygon text; carries the 1-based line number."""

    def __init__(self, lineno: int | None, message: str):
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"{where}{message}")
        self.lineno = lineno


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        yield lineno, line


def parse_blocks(text: str):
    """All polygon blocks in the text, as (field, vertices) pairs."""
    blocks = []
    field = None
    vertices = []
    first_line = None

    def flush():
        nonlocal field, vertices, first_line
        if field is None and not vertices:
            return
        if field is None:
            raise PolygonFormatError(first_line, "missing 'field exact|float' header")
        if len(vertices) < 4:
            raise PolygonFormatError(first_line, "a polygon needs at least 4 vertices")
        blocks.append((field, tuple(vertices)))
        field = None
        vertices = []
        first_line = None

    for lineno, line in _logical_lines(text):
        if not line:
            flush()
            continue
        if first_line is None:
            first_line = lineno
        if field is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "field":
                raise PolygonFormatError(lineno, "expected 'field exact' or 'field float'")
            try:
                field = field_by_name(parts[1])
            except ValueError as exc:
                raise PolygonFormatError(lineno, str(exc)) from None
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise PolygonFormatError(lineno, "a vertex line needs exactly 3 scalar tokens")
        try:
            coords = tuple(field.from_text(t) for t in tokens)
        except ValueError as exc:
            raise PolygonFormatError(lineno, f"bad scalar token: {exc}") from None
        if all(field.scalar_is_zero(c) for c in coords):
            raise PolygonFormatError(lineno, "vertex coordinates must not all be zero")
        vertices.append(HPoint(*coords))
    flush()
    return blocks


def parse_polygon(text: str):
    """The single polygon in the text, as (field, vertices)."""
    blocks = parse_blocks(text)
    if not blocks:
        raise PolygonFormatError(None, "no polygon found in input")
    if len(blocks) > 1:
        raise PolygonFormatError(None, "expected exactly one polygon block")
    return blocks[0]


def read_polygon(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_polygon(fh.read())


def format_polygon(field, vertices) -> str:
    lines = [f"field {field.name}"]
    for v in vertices:
        lines.append(" ".join(field.text(c) for c in v))
    return "\n".join(lines) + "\n"
