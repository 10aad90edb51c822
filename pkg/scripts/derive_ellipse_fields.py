"""Symbolic oracle for the elliptical packet's driving fields.

Differentiates the closed-form potential with sympy (no dual numbers) and
prints ``(E, B)`` at a few fixed points; the printed table is frozen into
tests/test_ellipse.py.  Also prints the nonrelativistic difference at
``beta`` and ``beta / 2`` to show the quadratic approach.
"""

import sympy as sp

t, x, y = sp.symbols("t x y", real=True)


def fields(a1, a2, eB, w, hbar=1):
    f, g = a1 * sp.cos(w * t), a2 * sp.sin(w * t)
    u1, u2 = sp.diff(f, t), sp.diff(g, t)
    d1, d2 = sp.diff(u1, t), sp.diff(u2, t)
    gam = 1 / sp.sqrt(1 - u1 ** 2 - u2 ** 2)
    xp, yp = x - f, y - g
    Gx, Gy = 2 * xp, 2 * yp
    k = eB * gam / 4
    turn = -gam ** 2 * (u1 * d2 - u2 * d1) / (gam + 1)
    along = u1 * Gx + u2 * Gy
    A0 = hbar * turn / 2 - k * (u2 * Gx - u1 * Gy) - gam
    A1 = -hbar * gam * d2 / 2 - k * (u2 * along - Gy) - gam * u1
    A2 = hbar * gam * d1 / 2 + k * (u1 * along - Gx) - gam * u2
    E1 = -sp.diff(A0, x) - sp.diff(A1, t)
    E2 = -sp.diff(A0, y) - sp.diff(A2, t)
    B3 = sp.diff(A2, x) - sp.diff(A1, y)
    return E1, E2, B3


CASES = [
    # (a1, a2, eB, omega, t, x, y)
    (0.8, 1.2, 0.7, 0.6, 0.3, 0.9, -0.4),
    (0.8, 1.2, 0.7, 0.6, 2.1, -0.5, 1.1),
    (1.0, 1.0, 0.5, 0.5, 1.7, 0.2, 0.3),
]

if __name__ == "__main__":
    for a1, a2, eB, w, t0, x0, y0 in CASES:
        E1, E2, B3 = fields(sp.Rational(str(a1)), sp.Rational(str(a2)), sp.Rational(str(eB)),
                            sp.Rational(str(w)))
        sub = {t: sp.Rational(str(t0)), x: sp.Rational(str(x0)), y: sp.Rational(str(y0))}
        vals = [sp.N(e.subs(sub), 20) for e in (E1, E2, B3)]
        print((a1, a2, eB, w, t0, x0, y0), [f"{float(v):.17g}" for v in vals])
