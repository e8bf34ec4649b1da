"""Pure-Python escape-time kernel.

Twin of the compiled extension: same entry points and the same arithmetic
operation for operation, so both backends classify grids identically (the
extension is built with FP contraction off for exactly this reason).
Selected at import time by the renderer when the compiled kernel is
missing or disabled.

Pixel status codes: 0 converged, 1 not converged, 2 degenerate.
"""

from math import inf, sqrt

BACKEND = "python"

# the ten rotation/reflection relabelings of a pentagon, flattened
_DIHEDRAL = (
    0, 1, 2, 3, 4,
    1, 2, 3, 4, 0,
    2, 3, 4, 0, 1,
    3, 4, 0, 1, 2,
    4, 0, 1, 2, 3,
    0, 4, 3, 2, 1,
    1, 0, 4, 3, 2,
    2, 1, 0, 4, 3,
    3, 2, 1, 0, 4,
    4, 3, 2, 1, 0,
)


def _det3(ax, ay, az, bx, by, bz, cx, cy, cz):
    return (
        ax * (by * cz - bz * cy)
        - ay * (bx * cz - bz * cx)
        + az * (bx * cy - by * cx)
    )


def _maxabs(x, y, z):
    m = abs(x)
    t = abs(y)
    if t > m:
        m = t
    t = abs(z)
    if t > m:
        m = t
    return m


def _pentagon_ok(v, tol):
    """General position of all 5 vertices: no triple collinear, with the
    scale-free threshold |det| >= tol * product of row max-norms."""
    for i in range(3):
        for j in range(i + 1, 4):
            for k in range(j + 1, 5):
                a = 3 * i
                b = 3 * j
                c = 3 * k
                d = _det3(
                    v[a], v[a + 1], v[a + 2],
                    v[b], v[b + 1], v[b + 2],
                    v[c], v[c + 1], v[c + 2],
                )
                scale = (
                    _maxabs(v[a], v[a + 1], v[a + 2])
                    * _maxabs(v[b], v[b + 1], v[b + 2])
                    * _maxabs(v[c], v[c + 1], v[c + 2])
                )
                if abs(d) < tol * scale:
                    return False
    return True


def _step(v, lam, lam_is_inf, tol, out):
    """One iteration step on a flat 15-float pentagon into ``out``.

    New vertex i comes from old vertices i+1 .. i+4 (offset-1 windows).
    Returns False as soon as any cross product or pivot degenerates.
    """
    for i in range(5):
        ia = 3 * ((i + 1) % 5)
        ib = 3 * ((i + 2) % 5)
        ic = 3 * ((i + 3) % 5)
        idd = 3 * ((i + 4) % 5)
        ax = v[ia]
        ay = v[ia + 1]
        az = v[ia + 2]
        bx = v[ib]
        by = v[ib + 1]
        bz = v[ib + 2]
        cx = v[ic]
        cy = v[ic + 1]
        cz = v[ic + 2]
        dx = v[idd]
        dy = v[idd + 1]
        dz = v[idd + 2]
        ma = _maxabs(ax, ay, az)
        mb = _maxabs(bx, by, bz)
        mc = _maxabs(cx, cy, cz)
        md = _maxabs(dx, dy, dz)

        # two diagonals, then their meet: the chart's zero point
        l1x = ay * cz - az * cy
        l1y = az * cx - ax * cz
        l1z = ax * cy - ay * cx
        if _maxabs(l1x, l1y, l1z) < tol * ma * mc:
            return False
        l2x = by * dz - bz * dy
        l2y = bz * dx - bx * dz
        l2z = bx * dy - by * dx
        if _maxabs(l2x, l2y, l2z) < tol * mb * md:
            return False
        px = l1y * l2z - l1z * l2y
        py = l1z * l2x - l1x * l2z
        pz = l1x * l2y - l1y * l2x
        if _maxabs(px, py, pz) < tol * _maxabs(l1x, l1y, l1z) * _maxabs(l2x, l2y, l2z):
            return False

        # two outer sides, then their meet: the chart's infinity point
        l3x = ay * bz - az * by
        l3y = az * bx - ax * bz
        l3z = ax * by - ay * bx
        if _maxabs(l3x, l3y, l3z) < tol * ma * mb:
            return False
        l4x = cy * dz - cz * dy
        l4y = cz * dx - cx * dz
        l4z = cx * dy - cy * dx
        if _maxabs(l4x, l4y, l4z) < tol * mc * md:
            return False
        qx = l3y * l4z - l3z * l4y
        qy = l3z * l4x - l3x * l4z
        qz = l3x * l4y - l3y * l4x
        if _maxabs(qx, qy, qz) < tol * _maxabs(l3x, l3y, l3z) * _maxabs(l4x, l4y, l4z):
            return False

        # the axis through both meets, and the middle side crossing it:
        # the chart's unit point
        axx = py * qz - pz * qy
        axy = pz * qx - px * qz
        axz = px * qy - py * qx
        if _maxabs(axx, axy, axz) < tol * _maxabs(px, py, pz) * _maxabs(qx, qy, qz):
            return False
        l5x = by * cz - bz * cy
        l5y = bz * cx - bx * cz
        l5z = bx * cy - by * cx
        if _maxabs(l5x, l5y, l5z) < tol * mb * mc:
            return False
        hx = l5y * axz - l5z * axy
        hy = l5z * axx - l5x * axz
        hz = l5x * axy - l5y * axx
        if _maxabs(hx, hy, hz) < tol * _maxabs(l5x, l5y, l5z) * _maxabs(axx, axy, axz):
            return False

        if lam_is_inf:
            nx = qx
            ny = qy
            nz = qz
        else:
            # scale the zero and infinity lifts so they sum to the unit
            # point: a 2x2 solve on the largest-pivot coordinate pair
            # (the common determinant factor drops out projectively)
            d01 = px * qy - py * qx
            d02 = px * qz - pz * qx
            d12 = py * qz - pz * qy
            a01 = abs(d01)
            a02 = abs(d02)
            a12 = abs(d12)
            if a01 >= a02 and a01 >= a12:
                piv = d01
                pi = px
                pj = py
                qi = qx
                qj = qy
                hi = hx
                hj = hy
            elif a02 >= a12:
                piv = d02
                pi = px
                pj = pz
                qi = qx
                qj = qz
                hi = hx
                hj = hz
            else:
                piv = d12
                pi = py
                pj = pz
                qi = qy
                qj = qz
                hi = hy
                hj = hz
            if piv == 0.0:
                return False
            s_num = hi * qj - hj * qi
            t_num = pi * hj - pj * hi
            lt = lam * t_num
            nx = s_num * px + lt * qx
            ny = s_num * py + lt * qy
            nz = s_num * pz + lt * qz

        m = _maxabs(nx, ny, nz)
        if m == 0.0:
            return False
        o = 3 * i
        out[o] = nx / m
        out[o + 1] = ny / m
        out[o + 2] = nz / m
    return True


def residual(v, refmat, ref5, tol):
    """Distance from the pentagon's projective class to the regular class.

    Minimum over the dihedral relabelings of the chordal gap between the
    frame-mapped fifth vertex and the reference fifth vertex (both unit
    representatives, sign-canonicalized).  inf when every relabeling has
    a degenerate frame.
    """
    best = inf
    r0 = ref5[0]
    r1 = ref5[1]
    r2 = ref5[2]
    for s in range(10):
        o = 5 * s
        i0 = 3 * _DIHEDRAL[o]
        i1 = 3 * _DIHEDRAL[o + 1]
        i2 = 3 * _DIHEDRAL[o + 2]
        i3 = 3 * _DIHEDRAL[o + 3]
        i4 = 3 * _DIHEDRAL[o + 4]
        p0x = v[i0]
        p0y = v[i0 + 1]
        p0z = v[i0 + 2]
        p1x = v[i1]
        p1y = v[i1 + 1]
        p1z = v[i1 + 2]
        p2x = v[i2]
        p2y = v[i2 + 1]
        p2z = v[i2 + 2]
        p3x = v[i3]
        p3y = v[i3 + 1]
        p3z = v[i3 + 2]
        p4x = v[i4]
        p4y = v[i4 + 1]
        p4z = v[i4 + 2]
        m0 = _maxabs(p0x, p0y, p0z)
        m1 = _maxabs(p1x, p1y, p1z)
        m2 = _maxabs(p2x, p2y, p2z)
        m3 = _maxabs(p3x, p3y, p3z)

        dd = _det3(p0x, p0y, p0z, p1x, p1y, p1z, p2x, p2y, p2z)
        if abs(dd) < tol * m0 * m1 * m2:
            continue
        d0 = _det3(p3x, p3y, p3z, p1x, p1y, p1z, p2x, p2y, p2z)
        if abs(d0) < tol * m3 * m1 * m2:
            continue
        d1 = _det3(p0x, p0y, p0z, p3x, p3y, p3z, p2x, p2y, p2z)
        if abs(d1) < tol * m0 * m3 * m2:
            continue
        d2 = _det3(p0x, p0y, p0z, p1x, p1y, p1z, p3x, p3y, p3z)
        if abs(d2) < tol * m0 * m1 * m3:
            continue

        e0 = _det3(p4x, p4y, p4z, p1x, p1y, p1z, p2x, p2y, p2z)
        e1 = _det3(p0x, p0y, p0z, p4x, p4y, p4z, p2x, p2y, p2z)
        e2 = _det3(p0x, p0y, p0z, p1x, p1y, p1z, p4x, p4y, p4z)
        w0 = e0 / d0
        w1 = e1 / d1
        w2 = e2 / d2

        t0 = refmat[0] * w0 + refmat[1] * w1 + refmat[2] * w2
        t1 = refmat[3] * w0 + refmat[4] * w1 + refmat[5] * w2
        t2 = refmat[6] * w0 + refmat[7] * w1 + refmat[8] * w2
        n = sqrt(t0 * t0 + t1 * t1 + t2 * t2)
        if n == 0.0:
            continue
        u0 = t0 / n
        u1 = t1 / n
        u2 = t2 / n
        if u0 * r0 + u1 * r1 + u2 * r2 < 0.0:
            u0 = -u0
            u1 = -u1
            u2 = -u2
        g0 = u0 - r0
        g1 = u1 - r1
        g2 = u2 - r2
        dist = sqrt(g0 * g0 + g1 * g1 + g2 * g2)
        if dist < best:
            best = dist
    return best


def classify_point(x, y, lam, lam_is_inf, max_iter, eps, tol, refmat, ref5):
    """Escape-time classification of one moduli point.

    The initial pentagon must pass the full general-position test; after
    that, degeneracy means the construction itself collapses (a cross
    product or pivot below threshold) so wandering orbits through nearly
    flat shapes keep iterating rather than being cut off.

    Returns (status, steps): status 0 with the first step whose residual
    drops below eps, status 1 at the iteration cap, status 2 with the
    step index at which the pentagon degenerated.
    """
    v = [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, x, y, 1.0]
    if not _pentagon_ok(v, tol):
        return 2, 0
    if residual(v, refmat, ref5, tol) < eps:
        return 0, 0
    out = [0.0] * 15
    for k in range(1, max_iter + 1):
        if not _step(v, lam, lam_is_inf, tol, out):
            return 2, k
        v, out = out, v
        if residual(v, refmat, ref5, tol) < eps:
            return 0, k
    return 1, max_iter


def classify_grid(
    x0, x1, y0, y1, width, height,
    lam, lam_is_inf, max_iter, eps, tol,
    refmat, ref5, status, steps,
):
    """Classify a full pixel grid (row-major, top row at ymax, pixel
    centers) into the ``status`` and ``steps`` buffers."""
    dx = (x1 - x0) / width
    dy = (y1 - y0) / height
    idx = 0
    for i in range(height):
        yy = y1 - (i + 0.5) * dy
        for j in range(width):
            xx = x0 + (j + 0.5) * dx
            st, k = classify_point(
                xx, yy, lam, lam_is_inf, max_iter, eps, tol, refmat, ref5
            )
            status[idx] = st
            steps[idx] = k
            idx += 1
