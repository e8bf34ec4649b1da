"""The one-parameter four-point construction and its polygon iteration.

From four points in general position, two diagonals and three sides
produce a distinguished line (the cross-axis) carrying three marked
points.  Those anchors fix a coordinate on the axis, and the
construction returns the axis point at a chosen parameter value.
Applied to every cyclic window of a polygon it yields a polygon
iteration; the parameter interpolates between the classical diagonal
maps at 0 and infinity and the heat-like map at 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import NamedTuple

from .projective import (
    DegenerateConfiguration,
    HPoint,
    general_position,
    join,
    meet,
)
from .scalars import PHI, ProjParam, as_param


class CrossAxisFrame(NamedTuple):
    """The three marked collinear points of the construction.

    zero_point: meet of the two diagonals (parameter 0)
    unit_point: where the middle side crosses the axis (parameter 1)
    infinity_point: meet of the two outer sides (parameter infinity)
    axis: the line joining them
    """

    zero_point: HPoint
    unit_point: HPoint
    infinity_point: HPoint
    axis: object


def _join(field, p, q, label):
    try:
        return join(field, p, q)
    except DegenerateConfiguration:
        raise DegenerateConfiguration(f"coincident points in {label}") from None


def _meet(field, l, m, label):
    try:
        return meet(field, l, m)
    except DegenerateConfiguration:
        raise DegenerateConfiguration(f"coincident lines in {label}") from None


def cross_axis_frame(field, a, b, c, d) -> CrossAxisFrame:
    """Marked points of the construction on four ordered points a, b, c, d."""
    diag_ac = _join(field, a, c, "diagonal v0v2")
    diag_bd = _join(field, b, d, "diagonal v1v3")
    zero = _meet(field, diag_ac, diag_bd, "diagonal meet")

    side_ab = _join(field, a, b, "side v0v1")
    side_cd = _join(field, c, d, "side v2v3")
    inf_pt = _meet(field, side_ab, side_cd, "outer-side meet")

    axis = _join(field, zero, inf_pt, "cross-axis")
    side_bc = _join(field, b, c, "side v1v2")
    unit = _meet(field, side_bc, axis, "axis unit point")
    return CrossAxisFrame(zero, unit, inf_pt, axis)


_ROW_PAIRS = ((0, 1), (0, 2), (1, 2))


def lambda_point(field, a, b, c, d, lam) -> HPoint:
    """The axis point whose coordinate is ``lam`` in the chart where the
    frame's zero, unit and infinity points sit at 0, 1 and infinity.

    Lift convention: representatives of the zero and infinity points are
    scaled so they sum to the unit point, which a single 2x2 solve pins
    down; the result is then zero_lift + lam * infinity_lift.  The 2x2
    system is solved on the best-conditioned coordinate pair, and the
    common determinant factor is dropped (the output is projective).
    """
    lam = as_param(lam)
    frame = cross_axis_frame(field, a, b, c, d)
    if lam.is_infinite:
        return field.normalize(HPoint(*frame.infinity_point))

    p, h, q = frame.zero_point, frame.unit_point, frame.infinity_point
    best = None
    for i, j in _ROW_PAIRS:
        piv = p[i] * q[j] - p[j] * q[i]
        key = field.pivot_key(piv)
        if best is None or key > best[0]:
            best = (key, i, j, piv)
    _, i, j, piv = best
    if field.minor_is_zero(piv, (p[i], p[j]), (q[i], q[j])):
        raise DegenerateConfiguration("axis anchors do not span a line")

    s_num = h[i] * q[j] - h[j] * q[i]
    t_num = p[i] * h[j] - p[j] * h[i]
    lt = lam.value * t_num
    out = HPoint(
        s_num * p[0] + lt * q[0],
        s_num * p[1] + lt * q[1],
        s_num * p[2] + lt * q[2],
    )
    return field.normalize(out)


def polygon_windows(n: int, offset: int = 1):
    """Index windows feeding each output vertex: vertex i is built from
    the four consecutive inputs starting at i + offset."""
    return tuple(
        tuple((i + offset + k) % n for k in range(4)) for i in range(n)
    )


def polygon_valid(field, vertices) -> bool:
    """True when every cyclic window of 4 consecutive vertices is in
    general position (the precondition of the iteration)."""
    n = len(vertices)
    if n < 4:
        return False
    for i in range(n):
        window = tuple(vertices[(i + k) % n] for k in range(4))
        if not general_position(field, window):
            return False
    return True


def polygon_step(field, vertices, lam, offset: int = 1):
    """One iteration step: apply the construction to every cyclic window.

    Windows start at i + offset, so with the default offset the new
    vertex i is built from old vertices i+1 .. i+4.  Raises
    DegenerateConfiguration naming the first bad window.
    """
    n = len(vertices)
    if n < 4:
        raise ValueError("polygon iteration needs at least 4 vertices")
    lam = as_param(lam)
    out = []
    for i, window in enumerate(polygon_windows(n, offset)):
        quad = tuple(vertices[k] for k in window)
        if not general_position(field, quad):
            raise DegenerateConfiguration(f"window {i} not in general position")
        try:
            out.append(lambda_point(field, *quad, lam))
        except DegenerateConfiguration as exc:
            raise DegenerateConfiguration(f"window {i}: {exc}") from None
    return tuple(out)


@dataclass
class OrbitResult:
    """A trajectory of the iteration, possibly cut short by degeneracy."""

    polygons: list = dataclass_field(default_factory=list)
    failed_step: int | None = None
    failure: str | None = None

    @property
    def completed(self) -> bool:
        return self.failed_step is None


def polygon_orbit(field, vertices, lam, steps: int, offset: int = 1) -> OrbitResult:
    """Iterate ``steps`` times, collecting the trajectory (input included).

    On degeneracy the result holds the partial trajectory plus the step
    index and reason instead of raising.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    result = OrbitResult(polygons=[tuple(vertices)])
    current = tuple(vertices)
    for k in range(1, steps + 1):
        try:
            current = polygon_step(field, current, lam, offset)
        except DegenerateConfiguration as exc:
            result.failed_step = k
            result.failure = str(exc)
            break
        result.polygons.append(current)
    return result


def insert_vertex_pentagon(field, a, b, c, d):
    """The pentagon (a, b, m, c, d) where m is the construction's value at
    the golden ratio on the quadruple (a, b, c, d)."""
    lam = ProjParam(field.scalar(PHI))
    m = lambda_point(field, a, b, c, d, lam)
    return (a, b, m, c, d)
