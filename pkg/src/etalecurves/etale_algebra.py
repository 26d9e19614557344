"""Finite étale algebras over Q and their quadratic (Kummer) extensions.

An algebra is a product of quotient rings Q[y]/(f_i).  Elements carry one
residue vector per factor, in the monomial basis 1, y, ..., y^(k-1); the
concatenation of those bases is the standard basis of the algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import MultiPoly, UniPoly, is_separable, is_scalar, qnorm, to_rational
from .exact_arith.unipoly import poly_gcd, xgcd


class ParentMismatch(ValueError):
    pass


def _mul_residues(a, b, red, k):
    """Product of two residue vectors of length k, reduced with table ``red``."""
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                prod[i + j] = prod[i + j] + x * y
    out = prod[:k]
    for e in range(k, 2 * k - 1):
        c = prod[e]
        if not c:
            continue
        for i, r in red[e - k]:
            out[i] = out[i] + c * r
    return out


def newton_charpoly(power_sums, n):
    """Monic degree-n polynomial whose roots have power sums p_1..p_n."""
    e = [1]
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k + 1):
            term = e[k - i] * power_sums[i - 1]
            acc = acc + term if i % 2 else acc - term
        e.append(_exact_div(acc, k))
    # e_k are elementary symmetric functions; charpoly = sum (-1)^k e_k x^(n-k)
    coeffs = [0] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = e[k] if k % 2 == 0 else -e[k]
    return UniPoly(coeffs)


def _exact_div(c, k):
    if k == 1:
        return c
    if isinstance(c, int):
        q, r = divmod(c, k)
        return q if r == 0 else Fraction(c, k)
    if isinstance(c, Fraction):
        return qnorm(c / k)
    return c * Fraction(1, k)


class EtaleAlgebra:
    """Product of Q[y]/(f_i) for monic separable f_i with rational coefficients."""

    def __init__(self, factors):
        factors = tuple(f if isinstance(f, UniPoly) else UniPoly([to_rational(c) for c in f])
                        for f in factors)
        if not factors:
            raise ValueError("an étale algebra needs at least one factor")
        for f in factors:
            if f.degree < 1:
                raise ValueError(f"factor {f} has degree < 1")
            if not f.is_monic():
                raise ValueError(f"factor {f} is not monic")
            if not all(is_scalar(c) for c in f.coeffs):
                raise ValueError("factor coefficients must be rational")
            if not is_separable(f):
                raise ValueError(f"factor {f} is not separable")
        self.factors = factors
        self.degrees = tuple(f.degree for f in factors)
        self.n = sum(self.degrees)
        self._red = [self._reduction_table(f) for f in factors]
        self._tr = [self._basis_traces(f) for f in factors]

    @staticmethod
    def _reduction_table(f: UniPoly):
        k = f.degree
        table = []
        cur = [-c for c in f.coeffs[:k]]  # y^k mod f
        for _ in range(k, 2 * k - 1):
            table.append([(i, c) for i, c in enumerate(cur) if c])
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [qnorm(c - top * fc) for c, fc in zip(cur, f.coeffs[:k])]
        return table

    @staticmethod
    def _basis_traces(f: UniPoly):
        """Tr(y^j) for j < deg f, i.e. power sums of the roots of f."""
        k = f.degree
        a = f.coeffs
        p = [k]
        for j in range(1, k):
            s = j * a[k - j]
            for i in range(1, j):
                s += a[k - i] * p[j - i]
            p.append(qnorm(-s))
        return p

    @classmethod
    def split(cls, n: int) -> "EtaleAlgebra":
        return cls([UniPoly((0, 1))] * n)

    def padded(self, extra: int) -> "EtaleAlgebra":
        if extra < 0:
            raise ValueError("negative padding")
        return EtaleAlgebra(self.factors + (UniPoly((0, 1)),) * extra)

    @property
    def is_split(self) -> bool:
        return all(d == 1 for d in self.degrees)

    def __eq__(self, other):
        return isinstance(other, EtaleAlgebra) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return "EtaleAlgebra(" + " x ".join(f"Q[y]/({f})" for f in self.factors) + ")"

    # elements -----------------------------------------------------------
    def element(self, components) -> "AlgebraElement":
        comps = []
        for k, c in zip(self.degrees, components):
            if isinstance(c, UniPoly):
                c = c.coeffs
            c = list(c)
            if len(c) > k:
                raise ValueError("component exceeds the factor degree; reduce first")
            comps.append(tuple(c) + (0,) * (k - len(c)))
        if len(comps) != len(self.factors):
            raise ValueError("one component per factor required")
        return AlgebraElement(self, tuple(comps))

    def reduce(self, polys) -> "AlgebraElement":
        """Element whose i-th component is ``polys[i]`` mod f_i."""
        comps = []
        for f, p in zip(self.factors, polys):
            if not isinstance(p, UniPoly):
                p = UniPoly(p)
            comps.append((p % f).coeffs)
        return self.element(comps)

    def scalar(self, c) -> "AlgebraElement":
        return self.element([(c,) for _ in self.factors])

    def zero(self):
        return self.scalar(0)

    def one(self):
        return self.scalar(1)

    def from_coordinates(self, coords) -> "AlgebraElement":
        coords = list(coords)
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates")
        comps, pos = [], 0
        for k in self.degrees:
            comps.append(coords[pos:pos + k])
            pos += k
        return self.element(comps)

    def standard_basis(self):
        out = []
        for i in range(self.n):
            v = [0] * self.n
            v[i] = 1
            out.append(self.from_coordinates(v))
        return out

    def to_json(self):
        return {"factors": [f.to_json() for f in self.factors]}

    @classmethod
    def from_json(cls, data) -> "EtaleAlgebra":
        return cls([UniPoly.from_json(f) for f in data["factors"]])


class AlgebraElement:
    __slots__ = ("algebra", "comps")

    def __init__(self, algebra: EtaleAlgebra, comps):
        self.algebra = algebra
        self.comps = comps

    def _same(self, other):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise ParentMismatch("elements of different algebras")

    def _lift(self, other):
        if isinstance(other, AlgebraElement):
            self._same(other)
            return other
        if isinstance(other, QuadElement):
            return NotImplemented
        return self.algebra.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.algebra, tuple(
            tuple(x + y for x, y in zip(a, b)) for a, b in zip(self.comps, other.comps)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(tuple(-x for x in a) for a in self.comps))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._same(other)
            alg = self.algebra
            comps = tuple(
                tuple(_mul_residues(a, b, red, k))
                for a, b, red, k in zip(self.comps, other.comps, alg._red, alg.degrees))
            return AlgebraElement(alg, comps)
        if isinstance(other, QuadElement):
            return NotImplemented
        return AlgebraElement(self.algebra, tuple(tuple(x * other for x in a) for a in self.comps))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.algebra.one(), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra == other.algebra and all(
                x == y for a, b in zip(self.comps, other.comps) for x, y in zip(a, b))
        if is_scalar(other) or isinstance(other, MultiPoly):
            return self == self.algebra.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.comps)

    def is_zero(self) -> bool:
        return not any(x for a in self.comps for x in a)

    def __repr__(self):
        return "(" + ", ".join(str(UniPoly(a)).replace("x", "y") for a in self.comps) + ")"

    # linear algebra -----------------------------------------------------
    def coordinates(self):
        return [x for a in self.comps for x in a]

    def component_traces(self):
        return [_trace_residue(a, tr) for a, tr in zip(self.comps, self.algebra._tr)]

    def trace(self):
        total = 0
        for t in self.component_traces():
            total = total + t
        return total

    def mult_matrix(self):
        """Matrix of multiplication by self in the standard basis (columns = images)."""
        cols = [(self * b).coordinates() for b in self.algebra.standard_basis()]
        n = self.algebra.n
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def factor_charpolys(self):
        alg = self.algebra
        out = []
        for a, red, tr, k in zip(self.comps, alg._red, alg._tr, alg.degrees):
            if k == 1:
                out.append(UniPoly((-a[0], 1)))
                continue
            sums, cur = [], list(a)
            for j in range(k):
                if j:
                    cur = _mul_residues(cur, a, red, k)
                sums.append(_trace_residue(cur, tr))
            out.append(newton_charpoly(sums, k))
        return out

    def charpoly(self) -> UniPoly:
        result = UniPoly((1,))
        for p in self.factor_charpolys():
            result = result * p
        return result

    def norm(self):
        cp = self.charpoly()
        return cp[0] if self.algebra.n % 2 == 0 else -cp[0]

    # units --------------------------------------------------------------
    def _rational(self):
        if not all(is_scalar(x) for a in self.comps for x in a):
            raise TypeError("operation needs rational coefficients")

    def is_unit(self) -> bool:
        self._rational()
        return all(poly_gcd(UniPoly(a), f).degree == 0
                   for a, f in zip(self.comps, self.algebra.factors))

    def inverse(self) -> "AlgebraElement":
        self._rational()
        comps = []
        for a, f in zip(self.comps, self.algebra.factors):
            g, s, _ = xgcd(UniPoly(a), f)
            if g.degree != 0:
                raise ZeroDivisionError("element is not a unit")
            comps.append((s % f).coeffs)
        return self.algebra.element(comps)

    def to_json(self):
        return [UniPoly(a).to_json() if True else None for a in self.comps]

    @classmethod
    def from_json(cls, algebra: EtaleAlgebra, data, coeff_parser=to_rational):
        return algebra.element([[coeff_parser(c) for c in comp] for comp in data])


def _trace_residue(a, tr):
    total = 0
    for x, t in zip(a, tr):
        if x and t:
            total = total + x * t
    return total


def generic_element(algebra: EtaleAlgebra, names=None) -> AlgebraElement:
    """Sum of z_i times the i-th standard basis vector, over Q[z_1..z_n]."""
    n = algebra.n
    names = names or tuple(f"z{i + 1}" for i in range(n))
    zs = MultiPoly.variables(n, names)
    return algebra.from_coordinates(zs)


@dataclass(frozen=True)
class QuadExtension:
    """The algebra base[s]/(s^2 - delta) for a unit delta of the base."""

    base: EtaleAlgebra
    delta: AlgebraElement

    def __post_init__(self):
        if self.delta.algebra != self.base:
            raise ParentMismatch("delta does not belong to the base algebra")
        if not self.delta.is_unit():
            raise ValueError("delta must be a unit of the base algebra")

    @property
    def n(self):
        return 2 * self.base.n

    def element(self, a, b=None) -> "QuadElement":
        if not isinstance(a, AlgebraElement):
            a = self.base.scalar(a)
        if b is None:
            b = self.base.zero()
        elif not isinstance(b, AlgebraElement):
            b = self.base.scalar(b)
        return QuadElement(self, a, b)

    def s(self) -> "QuadElement":
        return QuadElement(self, self.base.zero(), self.base.one())

    def to_json(self):
        return {"base": self.base.to_json(), "delta": self.delta.to_json()}

    @classmethod
    def from_json(cls, data):
        base = EtaleAlgebra.from_json(data["base"])
        return cls(base, AlgebraElement.from_json(base, data["delta"]))

    def is_split_factor(self, i: int):
        """For a degree-one base factor, the rational square root of delta there, if any."""
        if self.base.degrees[i] != 1:
            return None
        return rational_sqrt(self.delta.comps[i][0])


def rational_sqrt(q):
    from math import isqrt
    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return qnorm(Fraction(a, b))
    return None


class QuadElement:
    """a + b*s inside base[s]/(s^2 - delta)."""

    __slots__ = ("ext", "a", "b")

    def __init__(self, ext: QuadExtension, a: AlgebraElement, b: AlgebraElement):
        self.ext = ext
        self.a = a
        self.b = b

    def _lift(self, other):
        if isinstance(other, QuadElement):
            if other.ext != self.ext:
                raise ParentMismatch("elements of different quadratic extensions")
            return other
        if isinstance(other, AlgebraElement):
            return QuadElement(self.ext, other, self.ext.base.zero())
        return QuadElement(self.ext, self.ext.base.scalar(other), self.ext.base.zero())

    def __add__(self, other):
        o = self._lift(other)
        return QuadElement(self.ext, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(self.ext, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (QuadElement, AlgebraElement)):
            return QuadElement(self.ext, self.a * other, self.b * other)
        o = self._lift(other)
        a, b, c, d = self.a, self.b, o.a, o.b
        return QuadElement(self.ext, a * c + self.ext.delta * (b * d), a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = QuadElement(self.ext, self.ext.base.one(), self.ext.base.zero())
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (QuadElement, AlgebraElement)) or is_scalar(other) \
                or isinstance(other, MultiPoly):
            o = self._lift(other)
            return self.a == o.a and self.b == o.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def __repr__(self):
        return f"{self.a} + {self.b}*s"

    def trace(self):
        return 2 * self.a.trace()

    def factor_charpolys(self):
        """Characteristic polynomial over each factor (base factor i, degree 2k_i)."""
        base = self.ext.base
        out = []
        for i, (red, tr, k) in enumerate(zip(base._red, base._tr, base.degrees)):
            a, b, dl = self.a.comps[i], self.b.comps[i], self.ext.delta.comps[i]
            sums = []
            ca, cb = list(a), list(b)
            for j in range(2 * k):
                if j:
                    na = _add(_mul_residues(ca, a, red, k),
                              _mul_residues(_mul_residues(cb, b, red, k), dl, red, k))
                    nb = _add(_mul_residues(ca, b, red, k), _mul_residues(cb, a, red, k))
                    ca, cb = na, nb
                sums.append(2 * _trace_residue(ca, tr))
            out.append(newton_charpoly(sums, 2 * k))
        return out

    def charpoly(self) -> UniPoly:
        result = UniPoly((1,))
        for p in self.factor_charpolys():
            result = result * p
        return result

    def to_json(self):
        return {"a": self.a.to_json(), "b": self.b.to_json()}


def _add(u, v):
    return [x + y for x, y in zip(u, v)]


def quad_generic(algebra: EtaleAlgebra, delta: AlgebraElement, names=None):
    """Return (beta, alpha) with gamma generic, alpha = delta*gamma^2 and beta = s*gamma."""
    ext = QuadExtension(algebra, delta)
    gamma = generic_element(algebra, names)
    alpha = delta * (gamma * gamma)
    beta = QuadElement(ext, algebra.zero(), gamma)
    return beta, alpha


def elem_mul(a, b):
    return a * b


def charpoly(a) -> UniPoly:
    return a.charpoly()
