"""Univariate polynomials over an exact coefficient ring.

Coefficients are stored lowest degree first.  Anything that supports ``+``,
``-``, ``*`` and truthiness works as a coefficient (ints, Fractions, ModInt,
MultiPoly); division-based routines additionally need field inverses.
"""
from __future__ import annotations

from fractions import Fraction

from .rational import ModInt, qnorm, rational_to_str, to_rational, is_scalar


def _inverse(c):
    if isinstance(c, int):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 if c == 1 else (-1 if c == -1 else Fraction(1, c))
    if isinstance(c, Fraction):
        return qnorm(1 / c)
    if isinstance(c, ModInt):
        return c.inverse()
    if hasattr(c, "is_constant") and c.is_constant():
        return _inverse(c.constant_value())
    raise TypeError(f"coefficient {c!r} is not invertible here")


def _is_field_coeff(c) -> bool:
    return is_scalar(c) or isinstance(c, ModInt)


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(qnorm(x) if type(x) is Fraction else x for x in c)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots) -> "UniPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    # inspection ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if not other:
            return not self.coeffs
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return UniPoly((other,)) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly(out)

    def __rmul__(self, other):
        return UniPoly([other * c for c in self.coeffs])

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = UniPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "UniPoly":
        return UniPoly([x * c for x in self.coeffs])

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs])

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        if self.coeffs[-1] == 1:
            return self
        return self.scale(_inverse(self.coeffs[-1]))

    def compose_square(self) -> "UniPoly":
        """Return p(x^2)."""
        out = []
        for c in self.coeffs:
            out.extend((c, 0))
        return UniPoly(out[:-1] if out else out)

    def shift(self, a) -> "UniPoly":
        """Return p(x + a)."""
        result = UniPoly()
        for c in reversed(self.coeffs):
            result = result * UniPoly((a, 1)) + c
        return result

    def __divmod__(self, other: "UniPoly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        inv = None if other.lc == 1 else _inverse(other.lc)
        rem = list(self.coeffs)
        db = other.degree
        b = other.coeffs
        q = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            if inv is not None:
                c = c * inv
            q[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] = rem[k - db + j] - c * b[j]
        return UniPoly(q), UniPoly(rem[:db] if db > 0 else [])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar, a polynomial or an algebra element."""
        if not self.coeffs:
            return 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    # serialization ------------------------------------------------------
    def to_json(self):
        out = []
        for c in self.coeffs:
            out.append(c.to_json() if hasattr(c, "to_json") else rational_to_str(c))
        return out

    @classmethod
    def from_json(cls, data, coeff_parser=to_rational) -> "UniPoly":
        return cls([coeff_parser(c) for c in data])

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = str(c)
            if not is_scalar(c):
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1 and is_scalar(c):
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over a field; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a: UniPoly, b: UniPoly):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly((1,)), UniPoly()
    t0, t1 = UniPoly(), UniPoly((1,))
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = _inverse(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def charpoly_berkowitz(matrix):
    """Division-free characteristic polynomial det(xI - A) of a square matrix.

    Works over any commutative ring.  Returns a UniPoly (lowest degree first).
    """
    n = len(matrix)
    if n == 0:
        return UniPoly((1,))
    p = [1, -matrix[n - 1][n - 1]]  # highest degree first while building
    for k in range(n - 2, -1, -1):
        row = matrix[k][k + 1:]
        col = [matrix[i][k] for i in range(k + 1, n)]
        sub = [r[k + 1:] for r in matrix[k + 1:]]
        m = n - k - 1
        t = [1, -matrix[k][k]]
        v = col
        for _ in range(m):
            acc = 0
            for r, x in zip(row, v):
                if r and x:
                    acc = acc + r * x
            t.append(-acc)
            v = [_dot(srow, v) for srow in sub]
        newp = []
        for i in range(m + 2):
            acc = 0
            for j in range(min(i, m) + 1):
                if t[i - j] and p[j]:
                    acc = acc + t[i - j] * p[j]
            newp.append(acc)
        p = newp
    return UniPoly(list(reversed(p)))


def _dot(u, v):
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def determinant(matrix):
    n = len(matrix)
    cp = charpoly_berkowitz(matrix)
    c0 = cp[0]
    return -c0 if n % 2 else c0


def sylvester_matrix(a: UniPoly, b: UniPoly):
    m, n = a.degree, b.degree
    size = m + n
    rows = []
    ac = list(reversed(a.coeffs))
    bc = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([0] * i + ac + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + bc + [0] * (size - n - 1 - i))
    return rows


def resultant(a: UniPoly, b: UniPoly):
    """Res(a, b) with the Sylvester-determinant normalization.

    Uses the Euclidean recurrence over fields and a division-free
    Sylvester determinant when the coefficients are not field elements.
    """
    if not a or not b:
        return 0
    coeffs = a.coeffs + b.coeffs
    if all(_is_field_coeff(c) for c in coeffs):
        return _resultant_euclid(a, b)
    if a.degree == 0:
        return a.lc ** b.degree if b.degree else 1
    if b.degree == 0:
        return b.lc ** a.degree
    return determinant(sylvester_matrix(a, b))


def _resultant_euclid(a: UniPoly, b: UniPoly):
    result = 1
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return qnorm(result * b.lc ** da) if da else result
        r = a % b
        if not r:
            return 0
        if da % 2 and db % 2:
            result = -result
        result = result * b.lc ** (da - r.degree)
        a, b = b, r


def discriminant(f: UniPoly):
    """(-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant of a constant polynomial")
    r = resultant(f, f.derivative())
    if d * (d - 1) // 2 % 2:
        r = -r
    lc = f.lc
    if lc == 1:
        return r
    if hasattr(r, "is_constant") and not hasattr(lc, "is_constant"):
        return r / lc
    return qnorm(r * _inverse(lc)) if _is_field_coeff(lc) else r / lc


def is_separable(f: UniPoly) -> bool:
    if f.degree < 1:
        raise ValueError("separability of a constant polynomial")
    return poly_gcd(f, f.derivative()).degree == 0
