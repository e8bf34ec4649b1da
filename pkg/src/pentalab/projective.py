"""Homogeneous coordinates in the projective plane.

Points and lines are length-3 coordinate triples over the active scalar
model; both are identified up to a nonzero scale.  Joins and meets are
cross products, incidence and collinearity are determinants, and plane
maps are 3x3 matrices acting on column vectors.
"""

from __future__ import annotations

from typing import NamedTuple


class DegenerateConfiguration(Exception):
    """Raised when the input collapses: coincident points, concurrent
    diagonals, or a vanishing frame determinant."""


class HPoint(NamedTuple):
    x: object
    y: object
    z: object


class HLine(NamedTuple):
    x: object
    y: object
    z: object


def point(x, y, z=1, field=None):
    if field is not None:
        return HPoint(field.scalar(x), field.scalar(y), field.scalar(z))
    return HPoint(x, y, z)


def affine(x, y, field):
    return point(x, y, 1, field)


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def join(field, p: HPoint, q: HPoint) -> HLine:
    """The line through two distinct points."""
    c = _cross(p, q)
    if field.cross_is_zero(c, p, q):
        raise DegenerateConfiguration("join of coincident points")
    return HLine(*c)


def meet(field, l: HLine, m: HLine) -> HPoint:
    """The intersection point of two distinct lines."""
    c = _cross(l, m)
    if field.cross_is_zero(c, l, m):
        raise DegenerateConfiguration("meet of coincident lines")
    return HPoint(*c)


def det3(u, v, w):
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def collinear(field, p, q, r) -> bool:
    return field.det_is_zero(det3(p, q, r), (p, q, r))


def general_position(field, points) -> bool:
    """True when no three of the given points are collinear."""
    pts = tuple(points)
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if collinear(field, pts[i], pts[j], pts[k]):
                    return False
    return True


def dehomogenize(field, p: HPoint):
    """Affine (x, y) chart coordinates; rejects points on z = 0."""
    if field.scalar_is_zero(p.z):
        raise DegenerateConfiguration("point at infinity has no affine chart")
    return (p.x / p.z, p.y / p.z)


class ProjMap:
    """A projectivity given by a 3x3 matrix, defined up to scale."""

    __slots__ = ("m",)

    def __init__(self, rows):
        self.m = tuple(tuple(r) for r in rows)

    def __repr__(self):
        return f"ProjMap({self.m!r})"

    def __call__(self, p: HPoint) -> HPoint:
        m = self.m
        return HPoint(
            m[0][0] * p[0] + m[0][1] * p[1] + m[0][2] * p[2],
            m[1][0] * p[0] + m[1][1] * p[1] + m[1][2] * p[2],
            m[2][0] * p[0] + m[2][1] * p[1] + m[2][2] * p[2],
        )

    def compose(self, other: "ProjMap") -> "ProjMap":
        """self after other (matrix product self.m @ other.m)."""
        a, b = self.m, other.m
        return ProjMap(
            tuple(
                tuple(
                    a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]
                    for j in range(3)
                )
                for i in range(3)
            )
        )

    def det(self):
        return det3(*self.m)

    def adjugate(self) -> "ProjMap":
        """Inverse up to the (nonzero) determinant factor; division-free,
        so it stays inside the scalar ring."""
        ((a, b, c), (d, e, f), (g, h, i)) = self.m
        return ProjMap(
            (
                (e * i - f * h, c * h - b * i, b * f - c * e),
                (f * g - d * i, a * i - c * g, c * d - a * f),
                (d * h - e * g, b * g - a * h, a * e - b * d),
            )
        )

    def apply_line(self, l: HLine) -> HLine:
        """Dual action on lines (adjugate transpose): incidence is
        preserved, p on l iff self(p) on self.apply_line(l)."""
        m = self.adjugate().m
        return HLine(
            m[0][0] * l[0] + m[1][0] * l[1] + m[2][0] * l[2],
            m[0][1] * l[0] + m[1][1] * l[1] + m[2][1] * l[2],
            m[0][2] * l[0] + m[1][2] * l[1] + m[2][2] * l[2],
        )

    def power(self, n: int) -> "ProjMap":
        if n < 0:
            raise ValueError("negative powers not supported; use adjugate")
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result.compose(base)
            base = base.compose(base)
            n >>= 1
        if result is None:
            return ProjMap(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        return result


def proportional(field, u, v) -> bool:
    """Scale equivalence of coordinate triples (or any equal-length tuples)."""
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            d = u[i] * v[j] - u[j] * v[i]
            if not field.minor_is_zero(d, (u[i], u[j]), (v[i], v[j])):
                return False
    return True


def same_point(field, p: HPoint, q: HPoint) -> bool:
    return proportional(field, p, q)


def map_proportional(field, f: ProjMap, g: ProjMap) -> bool:
    u = f.m[0] + f.m[1] + f.m[2]
    v = g.m[0] + g.m[1] + g.m[2]
    return proportional(field, u, v)


# Standard projective basis: e1, e2, e3 and the unit point.
def standard_basis(field):
    o, l = field.zero, field.one
    return (
        HPoint(l, o, o),
        HPoint(o, l, o),
        HPoint(o, o, l),
        HPoint(l, l, l),
    )


def frame_map(field, p0, p1, p2, p3) -> ProjMap:
    """The projectivity sending the standard basis (e1, e2, e3, unit) to
    (p0, p1, p2, p3).

    Columns are d_i * p_i where the d_i are the signed 3x3 determinants
    obtained by replacing each of p0, p1, p2 in turn with p3.  Requires
    the four points to be in general position (no three collinear).
    """
    d0 = det3(p3, p1, p2)
    d1 = det3(p0, p3, p2)
    d2 = det3(p0, p1, p3)
    for d, rows in (
        (d0, (p3, p1, p2)),
        (d1, (p0, p3, p2)),
        (d2, (p0, p1, p3)),
        (det3(p0, p1, p2), (p0, p1, p2)),
    ):
        if field.det_is_zero(d, rows):
            raise DegenerateConfiguration("frame points not in general position")
    return ProjMap(
        (
            (d0 * p0[0], d1 * p1[0], d2 * p2[0]),
            (d0 * p0[1], d1 * p1[1], d2 * p2[1]),
            (d0 * p0[2], d1 * p1[2], d2 * p2[2]),
        )
    )


def transfer_map(field, source, target) -> ProjMap:
    """The unique projectivity carrying four source points to four target
    points (both quadruples in general position)."""
    fs = frame_map(field, *source)
    ft = frame_map(field, *target)
    return ft.compose(fs.adjugate())


def cross_ratio(field, a, b, c, d):
    """Cross-ratio of four collinear points, as the chart coordinate of
    ``a`` in the scale where c = 0, b = 1, d = infinity.

    Computed on the 2-coordinate pair dropping the strongest cross-product
    axis of (a, b), which keeps the 2x2 determinants well conditioned.
    Returns a ProjParam (infinite when a = d).
    """
    from .scalars import ProjParam

    c_ab = _cross(a, b)
    if field.cross_is_zero(c_ab, a, b):
        raise DegenerateConfiguration("cross-ratio chart needs a and b distinct")
    k = max(range(3), key=lambda i: field.pivot_key(c_ab[i]))
    ii, jj = [i for i in range(3) if i != k]

    def det2(u, v):
        return u[ii] * v[jj] - u[jj] * v[ii]

    def zero2(u, v, dval):
        return field.minor_is_zero(dval, (u[ii], u[jj]), (v[ii], v[jj]))

    d_ac, d_bd = det2(a, c), det2(b, d)
    d_ad, d_bc = det2(a, d), det2(b, c)
    den_zero = zero2(a, d, d_ad) or zero2(b, c, d_bc)
    if den_zero:
        if zero2(a, c, d_ac) or zero2(b, d, d_bd):
            raise DegenerateConfiguration("indeterminate cross-ratio (0/0 pattern)")
        return ProjParam.infinity()
    return ProjParam((d_ac * d_bd) / (d_ad * d_bc))
