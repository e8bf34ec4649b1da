# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled escape-time kernel.

Operation-for-operation transcription of the pure-Python twin
(_kernel_py.py); the build disables FP contraction so both backends
produce identical doubles.  Keep the two files in sync.

Pixel status codes: 0 converged, 1 not converged, 2 degenerate.
"""

from libc.math cimport INFINITY, fabs, sqrt

BACKEND = "compiled"

cdef int _DIHEDRAL[50]
_dihedral_rows = (
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
for _i in range(50):
    _DIHEDRAL[_i] = _dihedral_rows[_i]


cdef inline double _det3(double ax, double ay, double az,
                         double bx, double by, double bz,
                         double cx, double cy, double cz) nogil:
    return (
        ax * (by * cz - bz * cy)
        - ay * (bx * cz - bz * cx)
        + az * (bx * cy - by * cx)
    )


cdef inline double _maxabs(double x, double y, double z) nogil:
    cdef double m = fabs(x)
    cdef double t = fabs(y)
    if t > m:
        m = t
    t = fabs(z)
    if t > m:
        m = t
    return m


cdef bint _pentagon_ok(double* v, double tol) nogil:
    cdef int i, j, k, a, b, c
    cdef double d, scale
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
                if fabs(d) < tol * scale:
                    return False
    return True


cdef bint _step(double* v, double lam, bint lam_is_inf, double tol, double* out) nogil:
    cdef int i, ia, ib, ic, idd, o
    cdef double ax, ay, az, bx, by, bz, cx, cy, cz, dx, dy, dz
    cdef double ma, mb, mc, md
    cdef double l1x, l1y, l1z, l2x, l2y, l2z, l3x, l3y, l3z, l4x, l4y, l4z, l5x, l5y, l5z
    cdef double px, py, pz, qx, qy, qz, axx, axy, axz, hx, hy, hz
    cdef double d01, d02, d12, a01, a02, a12
    cdef double piv, pi, pj, qi, qj, hi, hj
    cdef double s_num, t_num, lt, nx, ny, nz, m
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
            a01 = fabs(d01)
            a02 = fabs(d02)
            a12 = fabs(d12)
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


cdef double _residual(double* v, double* refmat, double* ref5, double tol) nogil:
    cdef double best = INFINITY
    cdef double r0 = ref5[0]
    cdef double r1 = ref5[1]
    cdef double r2 = ref5[2]
    cdef int s, o, i0, i1, i2, i3, i4
    cdef double p0x, p0y, p0z, p1x, p1y, p1z, p2x, p2y, p2z, p3x, p3y, p3z, p4x, p4y, p4z
    cdef double m0, m1, m2, m3
    cdef double dd, d0, d1, d2, e0, e1, e2, w0, w1, w2
    cdef double t0, t1, t2, n, u0, u1, u2, g0, g1, g2, dist
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
        if fabs(dd) < tol * m0 * m1 * m2:
            continue
        d0 = _det3(p3x, p3y, p3z, p1x, p1y, p1z, p2x, p2y, p2z)
        if fabs(d0) < tol * m3 * m1 * m2:
            continue
        d1 = _det3(p0x, p0y, p0z, p3x, p3y, p3z, p2x, p2y, p2z)
        if fabs(d1) < tol * m0 * m3 * m2:
            continue
        d2 = _det3(p0x, p0y, p0z, p1x, p1y, p1z, p3x, p3y, p3z)
        if fabs(d2) < tol * m0 * m1 * m3:
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


cdef int _classify_point(double x, double y, double lam, bint lam_is_inf,
                         int max_iter, double eps, double tol,
                         double* refmat, double* ref5, int* steps_out) nogil:
    cdef double va[15]
    cdef double vb[15]
    cdef double* v = va
    cdef double* out = vb
    cdef double* tmp
    cdef int k
    va[0] = 1.0
    va[1] = 0.0
    va[2] = 0.0
    va[3] = 0.0
    va[4] = 1.0
    va[5] = 0.0
    va[6] = 0.0
    va[7] = 0.0
    va[8] = 1.0
    va[9] = 1.0
    va[10] = 1.0
    va[11] = 1.0
    va[12] = x
    va[13] = y
    va[14] = 1.0
    if not _pentagon_ok(v, tol):
        steps_out[0] = 0
        return 2
    if _residual(v, refmat, ref5, tol) < eps:
        steps_out[0] = 0
        return 0
    for k in range(1, max_iter + 1):
        if not _step(v, lam, lam_is_inf, tol, out):
            steps_out[0] = k
            return 2
        tmp = v
        v = out
        out = tmp
        if _residual(v, refmat, ref5, tol) < eps:
            steps_out[0] = k
            return 0
    steps_out[0] = max_iter
    return 1


def residual(v, refmat, ref5, tol):
    """See the twin's docstring; v is a flat 15-float pentagon."""
    cdef double vv[15]
    cdef double R[9]
    cdef double r5[3]
    cdef int i
    for i in range(15):
        vv[i] = v[i]
    for i in range(9):
        R[i] = refmat[i]
    for i in range(3):
        r5[i] = ref5[i]
    return _residual(vv, R, r5, tol)


def classify_point(double x, double y, double lam, bint lam_is_inf,
                   int max_iter, double eps, double tol, refmat, ref5):
    """See the twin's docstring; returns (status, steps)."""
    cdef double R[9]
    cdef double r5[3]
    cdef int i, steps
    for i in range(9):
        R[i] = refmat[i]
    for i in range(3):
        r5[i] = ref5[i]
    cdef int status = _classify_point(x, y, lam, lam_is_inf, max_iter, eps, tol, R, r5, &steps)
    return status, steps


def classify_grid(double x0, double x1, double y0, double y1,
                  int width, int height,
                  double lam, bint lam_is_inf, int max_iter, double eps, double tol,
                  refmat, ref5,
                  unsigned char[::1] status, int[::1] steps):
    """See the twin's docstring; fills the status/steps buffers row-major."""
    cdef double R[9]
    cdef double r5[3]
    cdef int i, j, idx, k, st
    cdef double dx, dy, xx, yy
    for i in range(9):
        R[i] = refmat[i]
    for i in range(3):
        r5[i] = ref5[i]
    dx = (x1 - x0) / width
    dy = (y1 - y0) / height
    idx = 0
    with nogil:
        for i in range(height):
            yy = y1 - (i + 0.5) * dy
            for j in range(width):
                xx = x0 + (j + 0.5) * dx
                st = _classify_point(xx, yy, lam, lam_is_inf, max_iter, eps, tol, R, r5, &k)
                status[idx] = <unsigned char> st
                steps[idx] = k
                idx += 1
