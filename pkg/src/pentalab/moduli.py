"""Moduli coordinates and regularity certification for labeled pentagons.

A labeled pentagon whose first four vertices are in general position is
frame-normalized: the projectivity carrying the standard basis to those
four vertices is inverted and applied to the fifth.  The resulting
(x, y) chart coordinates classify pentagons up to projective
equivalence, which reduces equivalence testing, regularity checking and
the renderer's convergence metric to one shared computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernel_py
from .projective import (
    DegenerateConfiguration,
    HPoint,
    det3,
    frame_map,
    general_position,
    same_point,
    standard_basis,
    transfer_map,
)
from .scalars import FLOAT, PHI

#: float pentagon equivalence: fifth-point chordal residual bound after
#: unit normalization (two orders above double-precision roundoff here)
EQUIVALENCE_TOLERANCE = 1e-8

REGULAR = "Regular"
STAR_REGULAR = "StarRegular"
OTHER = "Other"


def _affine_relabelings():
    dihedral, star = [], []
    for a in (1, 4, 2, 3):
        for b in range(5):
            sigma = tuple((a * k + b) % 5 for k in range(5))
            (dihedral if a in (1, 4) else star).append(sigma)
    return tuple(dihedral), tuple(star)


#: the 10 rotation/reflection relabelings and the 10 step-2 (star-order)
#: relabelings; together they are all label maps k -> a*k + b mod 5
DIHEDRAL_RELABELINGS, STAR_RELABELINGS = _affine_relabelings()
ALL_RELABELINGS = DIHEDRAL_RELABELINGS + STAR_RELABELINGS

#: canonical star-order relabeling (every second vertex)
STAR_ORDER = (0, 2, 4, 1, 3)


def relabel(vertices, sigma):
    """The polygon whose vertex i is the old vertex sigma(i)."""
    return tuple(vertices[sigma[i]] for i in range(len(sigma)))


@dataclass(frozen=True)
class ModuliPoint:
    """Chart coordinates of a labeled pentagon.

    ``triple`` is the homogeneous coordinate vector of the
    frame-normalized fifth vertex; x and y are its chart coordinates,
    None when the chart breaks down (third coordinate zero, chart_ok
    False).
    """

    x: object
    y: object
    chart_ok: bool
    triple: tuple


def moduli_coords(field, pentagon) -> ModuliPoint:
    """Coordinates of a pentagon in the frame-normalized chart.

    With F the frame map of v0..v3, F^-1 v4 is proportional to
    (E0/D0 : E1/D1 : E2/D2) where the D_i and E_i are the Cramer
    determinants of v3 and v4 against the frame; denominators are
    cleared to stay division-free.
    """
    p0, p1, p2, p3, p4 = pentagon
    if not general_position(field, (p0, p1, p2, p3)):
        raise DegenerateConfiguration("first four vertices not in general position")
    d0 = det3(p3, p1, p2)
    d1 = det3(p0, p3, p2)
    d2 = det3(p0, p1, p3)
    e0 = det3(p4, p1, p2)
    e1 = det3(p0, p4, p2)
    e2 = det3(p0, p1, p4)
    triple = (e0 * d1 * d2, e1 * d0 * d2, e2 * d0 * d1)
    chart_ok = not field.det_is_zero(e2, (p0, p1, p4))
    if chart_ok:
        x = (e0 * d2) / (e2 * d0)
        y = (e1 * d2) / (e2 * d1)
    else:
        x = y = None
    return ModuliPoint(x, y, chart_ok, triple)


def pentagon_from_moduli(field, x, y):
    """The chart section: the pentagon (e1, e2, e3, u, (x:y:1)).

    Left inverse of moduli_coords wherever the chart is defined.
    """
    e1, e2, e3, u = standard_basis(field)
    return (e1, e2, e3, u, HPoint(field.scalar(x), field.scalar(y), field.one))


def _unit(p):
    n = math.sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2])
    if n == 0.0:
        return None
    return (p[0] / n, p[1] / n, p[2] / n)


def chordal_gap(p, q) -> float:
    """Scale-free distance between two float coordinate triples: both are
    unit-normalized, the first is flipped onto the hemisphere of the
    second, and the Euclidean gap is returned.  inf on zero vectors."""
    u = _unit(tuple(float(c) for c in p))
    v = _unit(tuple(float(c) for c in q))
    if u is None or v is None:
        return math.inf
    if u[0] * v[0] + u[1] * v[1] + u[2] * v[2] < 0.0:
        u = (-u[0], -u[1], -u[2])
    return math.sqrt(
        (u[0] - v[0]) ** 2 + (u[1] - v[1]) ** 2 + (u[2] - v[2]) ** 2
    )


def equivalent(field, p, q) -> bool:
    """Projective equivalence of two labeled pentagons.

    The transfer map of the two 4-point frames either carries the fifth
    vertex across (equivalent) or it does not; exact model decides by
    vanishing cross product, float by a chordal residual."""
    image = transfer_map(field, tuple(p[:4]), tuple(q[:4]))(p[4])
    if field.name == "float":
        return chordal_gap(image, q[4]) < EQUIVALENCE_TOLERANCE
    return same_point(field, image, q[4])


def reference_pentagons(field):
    """The (regular, star-regular) reference pentagons.

    Float model: the unit-circle pentagon and the same points in star
    order.  Exact model: the frame pentagon whose fifth vertex is the
    unique order-5-symmetric chart point with convex labeling, and its
    star-order relabeling (see tools/derive_regular_reference.py for the
    non-circular derivation; certified by the order-5 symmetry test)."""
    if field.name == "float":
        regular = tuple(
            HPoint(
                math.cos(math.radians(72.0 * k)),
                math.sin(math.radians(72.0 * k)),
                1.0,
            )
            for k in range(5)
        )
        star = tuple(
            HPoint(
                math.cos(math.radians(144.0 * k)),
                math.sin(math.radians(144.0 * k)),
                1.0,
            )
            for k in range(5)
        )
        return regular, star
    regular = pentagon_from_moduli(field, PHI + 1, PHI)
    return regular, relabel(regular, STAR_ORDER)


@dataclass(frozen=True)
class PentagonClass:
    """Classification verdict: Regular, StarRegular or Other, with the
    relabeling that produced the match.  Both match slots are reported
    so an (unexpected) overlap of the two classes would be visible."""

    kind: str
    relabeling: tuple | None
    regular_match: tuple | None
    star_match: tuple | None


def _matches(field, pentagon, sigma, reference) -> bool:
    # a relabeling may put a degenerate 4-frame first; such a labeling
    # cannot witness equivalence to the (nondegenerate) reference
    try:
        return equivalent(field, relabel(pentagon, sigma), reference)
    except DegenerateConfiguration:
        return False


def classify(field, pentagon) -> PentagonClass:
    """Decide whether a labeled pentagon is projectively regular or
    star-regular, sweeping the 10 dihedral and 10 star-order relabelings
    against the regular reference."""
    regular_ref, _ = reference_pentagons(field)
    regular_match = next(
        (s for s in DIHEDRAL_RELABELINGS if _matches(field, pentagon, s, regular_ref)),
        None,
    )
    star_match = next(
        (s for s in STAR_RELABELINGS if _matches(field, pentagon, s, regular_ref)),
        None,
    )
    if regular_match is not None:
        return PentagonClass(REGULAR, regular_match, regular_match, star_match)
    if star_match is not None:
        return PentagonClass(STAR_REGULAR, star_match, regular_match, star_match)
    return PentagonClass(OTHER, None, None, None)


_CIRCLE_REFERENCE_DATA = None


def circle_reference_data():
    """Float reference data shared with the escape-time kernels: the
    frame-map matrix of the circle pentagon's first four vertices
    (flattened row-major) and its unit-normalized fifth vertex."""
    global _CIRCLE_REFERENCE_DATA
    if _CIRCLE_REFERENCE_DATA is None:
        regular, _ = reference_pentagons(FLOAT)
        fm = frame_map(FLOAT, *regular[:4])
        refmat = tuple(fm.m[0]) + tuple(fm.m[1]) + tuple(fm.m[2])
        ref5 = _unit(tuple(regular[4]))
        _CIRCLE_REFERENCE_DATA = (refmat, ref5)
    return _CIRCLE_REFERENCE_DATA


def residual_to_regular(pentagon, degenerate_threshold: float = 1e-10) -> float:
    """Float distance from a pentagon's class to the regular class: the
    minimum over dihedral relabelings of the chordal gap between the
    frame-normalized fifth vertex (mapped into the reference frame) and
    the reference fifth vertex.  0 (up to roundoff) iff Regular; inf
    when every relabeling has a degenerate frame."""
    refmat, ref5 = circle_reference_data()
    flat = [float(c) for v in pentagon for c in v]
    return _kernel_py.residual(flat, refmat, ref5, degenerate_threshold)
