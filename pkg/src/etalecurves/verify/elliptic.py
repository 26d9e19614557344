"""Weierstrass cubics over Q and over prime fields.

Points are ``None`` (the point at infinity) or ``(x, y)`` tuples.  The group
law is the general one for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact_arith import qnorm


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: object
    a2: object
    a3: object
    a4: object
    a6: object

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self):
        a1, a2, a3, a4, a6 = map(Fraction, self.ainvs)
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c4(self):
        b2, b4, _, _ = self.b_invariants
        return qnorm(b2 * b2 - 24 * b4)

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants
        return qnorm(-b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6)

    def j_invariant(self):
        disc = self.discriminant
        if not disc:
            raise ValueError("singular cubic")
        return qnorm(Fraction(self.c4) ** 3 / disc)

    def contains(self, P) -> bool:
        if P is None:
            return True
        x, y = P
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y == x ** 3 + a2 * x * x + a4 * x + a6

    def neg(self, P):
        if P is None:
            return None
        x, y = P
        return (x, qnorm(Fraction(-y - self.a1 * x - self.a3)))

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        a1, a2, a3, a4, a6 = map(Fraction, self.ainvs)
        x1, y1 = map(Fraction, P)
        x2, y2 = map(Fraction, Q)
        if x1 == x2:
            if y1 + y2 + a1 * x2 + a3 == 0:
                return None
            den = 2 * y1 + a1 * x1 + a3
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
            nu = (-x1 ** 3 + a4 * x1 + 2 * a6 - a3 * y1) / den
        else:
            lam = (y2 - y1) / (x2 - x1)
            nu = (y1 * x2 - y2 * x1) / (x2 - x1)
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return (qnorm(x3), qnorm(y3))

    def sub(self, P, Q):
        return self.add(P, self.neg(Q))

    def mul(self, k: int, P):
        if k < 0:
            return self.mul(-k, self.neg(P))
        result = None
        while k:
            if k & 1:
                result = self.add(result, P)
            k >>= 1
            if k:
                P = self.add(P, P)
        return result

    def combination(self, coeffs, points):
        total = None
        for c, P in zip(coeffs, points):
            if c:
                total = self.add(total, self.mul(c, P))
        return total

    # reduction -------------------------------------------------------------
    def is_good_prime(self, p: int) -> bool:
        if p < 5:
            return False
        for a in self.ainvs:
            if Fraction(a).denominator % p == 0:
                return False
        disc = Fraction(self.discriminant)
        return disc.numerator % p != 0

    def reduce(self, p: int) -> "CurveFp":
        return CurveFp(p, *(_mod(a, p) for a in self.ainvs))

    def to_json(self):
        return [str(Fraction(a)) for a in self.ainvs]


def _mod(q, p: int) -> int:
    q = Fraction(q)
    return q.numerator * pow(q.denominator, -1, p) % p


def reduce_point(P, p: int):
    """Reduction of a rational point on a p-integral model (None for the identity)."""
    if P is None:
        return None
    x, y = Fraction(P[0]), Fraction(P[1])
    if x.denominator % p == 0 or y.denominator % p == 0:
        return None
    return (_mod(x, p), _mod(y, p))


class CurveFp:
    """Weierstrass cubic over F_p with integer-tuple points."""

    __slots__ = ("p", "a1", "a2", "a3", "a4", "a6")

    def __init__(self, p, a1, a2, a3, a4, a6):
        self.p = p
        self.a1, self.a2, self.a3, self.a4, self.a6 = a1 % p, a2 % p, a3 % p, a4 % p, a6 % p

    def contains(self, P) -> bool:
        if P is None:
            return True
        x, y = P
        p = self.p
        return (y * y + self.a1 * x * y + self.a3 * y
                - (x * x * x + self.a2 * x * x + self.a4 * x + self.a6)) % p == 0

    def neg(self, P):
        if P is None:
            return None
        x, y = P
        return (x, (-y - self.a1 * x - self.a3) % self.p)

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        p = self.p
        x1, y1 = P
        x2, y2 = Q
        a1, a3 = self.a1, self.a3
        if x1 == x2:
            if (y1 + y2 + a1 * x2 + a3) % p == 0:
                return None
            inv = pow(2 * y1 + a1 * x1 + a3, -1, p)
            lam = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4 - a1 * y1) * inv % p
            nu = (-x1 * x1 * x1 + self.a4 * x1 + 2 * self.a6 - a3 * y1) * inv % p
        else:
            inv = pow(x2 - x1, -1, p)
            lam = (y2 - y1) * inv % p
            nu = (y1 * x2 - y2 * x1) * inv % p
        x3 = (lam * lam + a1 * lam - self.a2 - x1 - x2) % p
        y3 = (-(lam + a1) * x3 - nu - a3) % p
        return (x3, y3)

    def mul(self, k: int, P):
        if k < 0:
            return self.mul(-k, self.neg(P))
        result = None
        while k:
            if k & 1:
                result = self.add(result, P)
            k >>= 1
            if k:
                P = self.add(P, P)
        return result

    def points(self):
        """All affine points, by solving the quadratic in y for every x."""
        p = self.p
        roots = {}
        for y in range(p):
            roots.setdefault(y * y % p, []).append(y)
        inv2 = pow(2, -1, p)
        out = []
        for x in range(p):
            b = (self.a1 * x + self.a3) % p
            c = (x * x * x + self.a2 * x * x + self.a4 * x + self.a6) % p
            disc = (b * b + 4 * c) % p
            for r in roots.get(disc, ()):
                out.append((x, (r - b) * inv2 % p))
        return out

    def order(self) -> int:
        return len(self.points()) + 1


class SubgroupTable:
    """Breadth-first table of a subgroup generated incrementally.

    Every element of the subgroup maps to one coefficient vector over the
    generators added so far; ``relations`` is a triangular integer basis of
    all relations among those generators.
    """

    def __init__(self, curve, identity=None):
        self.curve = curve
        self.table = {identity: ()}
        self.gens = []
        self.relations = []

    def __len__(self):
        return len(self.table)

    def __contains__(self, P):
        return P in self.table

    def vector(self, P):
        v = self.table[P]
        return v + (0,) * (len(self.gens) - len(v))

    def add(self, g):
        """Add a generator; returns the index m of the old subgroup in the new one."""
        curve, table = self.curve, self.table
        j = len(self.gens)
        m, cur = 1, g
        while cur not in table:
            cur = curve.add(cur, g)
            m += 1
        row = [-c for c in self.vector(cur)] + [m]
        self.gens.append(g)
        self.relations = [r + [0] for r in self.relations] + [row]
        if m > 1:
            old = list(table.items())
            step = g
            for i in range(1, m):
                for P, vec in old:
                    table[curve.add(P, step)] = vec + (0,) * (j - len(vec)) + (i,)
                step = curve.add(step, g)
        return m


def subgroup_relations(curve, gens, identity=None):
    """Relation basis (rows, one per generator) and element table of the subgroup
    generated by ``gens``."""
    sub = SubgroupTable(curve, identity)
    for g in gens:
        sub.add(g)
    return sub.relations, {P: sub.vector(P) for P in sub.table}
