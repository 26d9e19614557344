"""Genus-one curves y^2 = q(x) with deg q in {3, 4}: Weierstrass models and j."""
from __future__ import annotations

from fractions import Fraction

from .exact_arith import UniPoly, qnorm
from .verify.elliptic import WeierstrassCurve


class NoRationalPoint(ValueError):
    pass


def _coeffs(q: UniPoly, k: int):
    return [Fraction(q[i]) for i in range(k + 1)]


def from_cubic(q: UniPoly):
    """y^2 = b x^3 + c x^2 + d x + e  ->  Y^2 = X^3 + c X^2 + bd X + b^2 e, (X, Y) = (bx, by)."""
    if q.degree != 3:
        raise ValueError("expected a cubic")
    e, d, c, b = _coeffs(q, 3)
    curve = WeierstrassCurve(0, qnorm(c), 0, qnorm(b * d), qnorm(b * b * e))

    def to_curve(P):
        if P is None:
            return None
        return (qnorm(b * P[0]), qnorm(b * P[1]))

    return curve, to_curve


def from_quartic(q: UniPoly, base):
    """Weierstrass model of y^2 = q(x), deg q = 4, sending the rational point ``base`` to O."""
    if q.degree != 4:
        raise ValueError("expected a quartic")
    x0, y0 = Fraction(base[0]), Fraction(base[1])
    if y0 * y0 != q(x0):
        raise ValueError("base point is not on the curve")
    r = q.shift(x0)
    e, d, c, b, a = _coeffs(r, 4)
    if y0 != 0:
        s = y0
        a1 = d / s
        a2 = c - d * d / (4 * s * s)
        a3 = 2 * s * b
        a4 = -4 * s * s * a
        a6 = a2 * a4
        curve = WeierstrassCurve(*(qnorm(v) for v in (a1, a2, a3, a4, a6)))

        def to_curve(P):
            if P is None:
                raise ValueError("points at infinity of the quartic are not handled")
            u, v = Fraction(P[0]) - x0, Fraction(P[1])
            if u == 0:
                if v == s:
                    return None
                return (qnorm(-a2), qnorm(a1 * a2 - a3))
            X = (2 * s * (v + s) + d * u) / (u * u)
            Y = (4 * s * s * (v + s) + 2 * s * (d * u + c * u * u) - d * d * u * u / (2 * s)) / u ** 3
            return (qnorm(X), qnorm(Y))

        return curve, to_curve
    # base point at a root: x = x0 + 1/u turns the quartic into a cubic in u
    if d == 0:
        raise ValueError("quartic is not separable at the base point")
    curve = WeierstrassCurve(0, qnorm(c), 0, qnorm(b * d), qnorm(a * d * d))

    def to_curve(P):
        if P is None:
            raise ValueError("points at infinity of the quartic are not handled")
        u, v = Fraction(P[0]) - x0, Fraction(P[1])
        if u == 0:
            return None
        return (qnorm(d / u), qnorm(d * v / (u * u)))

    return curve, to_curve


def weierstrass_model(q: UniPoly, base=None):
    """(curve, point map) for y^2 = q(x); ``base`` is required for quartics."""
    if q.degree == 3:
        curve, to_curve = from_cubic(q)
        if base is None:
            return curve, to_curve
        shift = to_curve(base)
        return curve, lambda P: curve.sub(to_curve(P), shift)
    if q.degree == 4:
        if base is None:
            raise NoRationalPoint("a rational point is needed to reach a Weierstrass model")
        return from_quartic(q, base)
    raise ValueError("genus-one models have degree 3 or 4")


def j_from_invariants(q: UniPoly):
    """j of y^2 = q(x) from the invariants I, J of the binary quartic form.

    With q = a x^4 + 4b x^3 + 6c x^2 + 4d x + e:
    I = ae - 4bd + 3c^2, J = ace + 2bcd - ad^2 - eb^2 - c^3, j = 1728 I^3 / (I^3 - 27 J^2).
    """
    if q.degree not in (3, 4):
        raise ValueError("genus-one models have degree 3 or 4")
    e, d4, c6, b4, a = _coeffs(q, 4)
    b, c, d = b4 / 4, c6 / 6, d4 / 4
    I = a * e - 4 * b * d + 3 * c * c
    J = a * c * e + 2 * b * c * d - a * d * d - e * b * b - c ** 3
    den = I ** 3 - 27 * J * J
    if den == 0:
        raise ValueError("singular model")
    return qnorm(1728 * I ** 3 / den)


def j_from_weierstrass(q: UniPoly, base=None):
    curve, _ = weierstrass_model(q, base)
    return curve.j_invariant()
