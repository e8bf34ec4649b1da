"""Derive the exact chart coordinates of the order-5-symmetric pentagons.

Independent oracle for the exact reference pentagon: it never imports
the package.  A labeled pentagon admits a projective symmetry cycling
its vertices exactly when its chart point is fixed by the cyclic
relabeling (v0..v4) -> (v1..v4, v0) acting on the chart.  This script
builds that action symbolically on the frame pentagon
(e1, e2, e3, u, (x:y:1)), solves the fixed-point conditions with sympy,
and prints the real solutions in radicals.

Expected output: exactly two real chart points,

    x = (3 + sqrt(5))/2 = phi + 1    y = (1 + sqrt(5))/2 = phi
    x = (3 - sqrt(5))/2 = 2 - phi    y = (1 - sqrt(5))/2 = psi

the first with convex labeling (the regular class), the second the
star-order one.  The package freezes these as its exact references;
tests certify them again through the order-5 symmetry property.

Run: python3 tools/derive_regular_reference.py
"""

import sympy as sp


def cross(u, v):
    return sp.Matrix(
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    )


def frame_matrix(p0, p1, p2, p3):
    """Columns d_i * p_i, sending the standard basis to p0..p3."""
    d0 = sp.Matrix.hstack(p3, p1, p2).det()
    d1 = sp.Matrix.hstack(p0, p3, p2).det()
    d2 = sp.Matrix.hstack(p0, p1, p3).det()
    return sp.Matrix.hstack(d0 * p0, d1 * p1, d2 * p2)


def chart_point(pentagon):
    """(x, y) of the frame-normalized fifth vertex."""
    m = frame_matrix(*pentagon[:4])
    w = m.adjugate() * pentagon[4]
    return sp.cancel(w[0] / w[2]), sp.cancel(w[1] / w[2])


def main():
    x, y = sp.symbols("x y")
    e1 = sp.Matrix([1, 0, 0])
    e2 = sp.Matrix([0, 1, 0])
    e3 = sp.Matrix([0, 0, 1])
    u = sp.Matrix([1, 1, 1])
    p5 = sp.Matrix([x, y, 1])
    pentagon = (e1, e2, e3, u, p5)

    shifted = (e2, e3, u, p5, e1)
    sx, sy = chart_point(shifted)

    solutions = sp.solve(
        [sp.together(sx - x), sp.together(sy - y)], [x, y], dict=True
    )
    real = [
        s
        for s in solutions
        if s[x].is_real and s[y].is_real
    ]
    print(f"{len(solutions)} fixed points of the cyclic shift, {len(real)} real:")
    phi = (1 + sp.sqrt(5)) / 2
    for s in real:
        xv = sp.radsimp(sp.nsimplify(s[x], [sp.sqrt(5)]))
        yv = sp.radsimp(sp.nsimplify(s[y], [sp.sqrt(5)]))
        tags = []
        if sp.simplify(xv - (phi + 1)) == 0 and sp.simplify(yv - phi) == 0:
            tags.append("= (phi + 1, phi), the regular class")
        if sp.simplify(xv - (2 - phi)) == 0 and sp.simplify(yv - (1 - phi)) == 0:
            tags.append("= (2 - phi, psi), the star-order class")
        print(f"  x = {xv}   y = {yv}   {' '.join(tags)}")

    # sanity: both solutions really have order 5, not just fixed labels
    for s in real:
        pent = (e1, e2, e3, u, sp.Matrix([s[x], s[y], 1]))
        f_src = frame_matrix(*pent[:4])
        f_dst = frame_matrix(pent[1], pent[2], pent[3], pent[4])
        shift = sp.simplify(f_dst * f_src.adjugate())
        fifth_power = sp.simplify(shift**5)
        off_diag = sp.simplify(
            fifth_power - fifth_power[0, 0] * sp.eye(3)
        )
        assert off_diag == sp.zeros(3, 3), "shift map is not of order 5"
        carried = sp.simplify(shift * pent[4])
        assert sp.simplify(cross(carried, pent[0])) == sp.zeros(3, 1)
    print("order-5 certification passed for both real solutions")


if __name__ == "__main__":
    main()
