"""Sparse multivariate polynomials with rational coefficients.

A polynomial is stored as integer numerators over one positive common
denominator, kept reduced (gcd of denominator and all numerators is 1).  The
hot loops therefore only touch Python ints.

Exponent vectors are packed into a single int, ``_W`` bits per variable.  The
top bit of every field is a guard: a product whose key touches a guard bit
would be ambiguous, so it raises instead.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .rational import is_scalar, qnorm, rational_to_str, to_rational

_W = 16
_MASK = (1 << _W) - 1
_GUARDS = {}


def _guard(nvars: int) -> int:
    g = _GUARDS.get(nvars)
    if g is None:
        g = 0
        for i in range(nvars):
            g |= 1 << (_W * i + _W - 1)
        _GUARDS[nvars] = g
    return g


def pack(exps) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e >= 1 << (_W - 1):
            raise OverflowError(f"exponent {e} out of range")
        key |= e << (_W * i)
    return key


def unpack(key: int, nvars: int) -> tuple:
    out = []
    for _ in range(nvars):
        out.append(key & _MASK)
        key >>= _W
    return tuple(out)


def _reduced(terms: dict, den: int):
    if den == 1 or not terms:
        return terms, 1
    g = gcd(den, *terms.values())
    if g == 1:
        return terms, den
    return {k: v // g for k, v in terms.items()}, den // g


class MultiPoly:
    __slots__ = ("nvars", "terms", "den", "names")

    def __init__(self, nvars: int, terms=None, names=None, den: int = 1):
        """``terms`` maps packed exponent keys to nonzero int numerators."""
        self.nvars = nvars
        terms = {} if terms is None else terms
        if den < 0:
            terms, den = {k: -v for k, v in terms.items()}, -den
        self.terms, self.den = _reduced(terms, den)
        if names is not None and len(names) != nvars:
            raise ValueError("one name per variable required")
        self.names = tuple(names) if names is not None else None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c, nvars: int, names=None) -> "MultiPoly":
        c = Fraction(to_rational(c))
        return cls(nvars, {0: c.numerator} if c else {}, names, c.denominator)

    @classmethod
    def var(cls, i: int, nvars: int, names=None) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise IndexError("variable index out of range")
        return cls(nvars, {1 << (_W * i): 1}, names)

    @classmethod
    def variables(cls, nvars: int, names=None):
        return [cls.var(i, nvars, names) for i in range(nvars)]

    @classmethod
    def from_dict(cls, nvars: int, data: dict, names=None) -> "MultiPoly":
        acc = {}
        for exps, c in data.items():
            if len(exps) != nvars:
                raise ValueError("exponent vector arity mismatch")
            k = pack(exps)
            acc[k] = acc.get(k, 0) + Fraction(to_rational(c))
        return cls._from_fractions(nvars, acc, names)

    @classmethod
    def _from_fractions(cls, nvars, acc: dict, names=None):
        acc = {k: c for k, c in acc.items() if c}
        den = 1
        for c in acc.values():
            den = den * c.denominator // gcd(den, c.denominator)
        terms = {k: c.numerator * (den // c.denominator) for k, c in acc.items()}
        return cls(nvars, terms, names, den)

    def _new(self, terms, den=1) -> "MultiPoly":
        return MultiPoly(self.nvars, terms, self.names, den)

    def _check(self, other: "MultiPoly"):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    # inspection ---------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exps):
        v = self.terms.get(pack(exps), 0)
        return qnorm(Fraction(v, self.den)) if self.den != 1 else v

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return qnorm(Fraction(self.terms.get(0, 0), self.den))

    def items(self):
        """Yield (exponent tuple, rational coefficient) pairs in a deterministic order."""
        for k in sorted(self.terms):
            c = self.terms[k]
            yield unpack(k, self.nvars), (c if self.den == 1 else qnorm(Fraction(c, self.den)))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(unpack(k, self.nvars)) for k in self.terms)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            if not other.terms:
                return self
            if not self.terms:
                return other
            da, db = self.den, other.den
            if da == db:
                out = dict(self.terms)
                for k, c in other.terms.items():
                    v = out.get(k, 0) + c
                    if v:
                        out[k] = v
                    else:
                        del out[k]
                return self._new(out, da)
            g = gcd(da, db)
            fa, fb = db // g, da // g
            out = {k: c * fa for k, c in self.terms.items()}
            for k, c in other.terms.items():
                v = out.get(k, 0) + c * fb
                if v:
                    out[k] = v
                else:
                    del out[k]
            return self._new(out, da * fa)
        if is_scalar(other):
            if not other:
                return self
            return self + MultiPoly.const(other, self.nvars, self.names)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()}, self.den)

    def __sub__(self, other):
        if isinstance(other, MultiPoly) or is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if is_scalar(other):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            a, b = self.terms, other.terms
            if len(a) < len(b):
                a, b = b, a
            den = self.den * other.den
            if not b:
                return self._new({})
            if len(b) == 1:
                (kb, cb), = b.items()
                out = {ka + kb: ca * cb for ka, ca in a.items()}
                self._overflow(out)
                return self._new(out, den)
            out = {}
            get = out.get
            for kb, cb in b.items():
                for ka, ca in a.items():
                    k = ka + kb
                    out[k] = get(k, 0) + ca * cb
            self._overflow(out)
            return self._new({k: v for k, v in out.items() if v}, den)
        if is_scalar(other):
            if not other:
                return self._new({})
            if other == 1:
                return self
            q = Fraction(other)
            return self._new({k: c * q.numerator for k, c in self.terms.items()},
                             self.den * q.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def _overflow(self, terms):
        g = _guard(self.nvars)
        for k in terms:
            if k & g:
                raise OverflowError("exponent overflow in multivariate product")

    def __truediv__(self, other):
        if is_scalar(other):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, MultiPoly) and other.is_constant():
            return self / other.constant_value()
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1, self.nvars, self.names)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self.nvars == other.nvars and self.den == other.den
                    and self.terms == other.terms)
        if is_scalar(other):
            if not other:
                return not self.terms
            q = Fraction(other)
            return self.den == q.denominator and self.terms == {0: q.numerator}
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, self.den, frozenset(self.terms.items())))

    # evaluation ---------------------------------------------------------
    def substitute(self, values):
        """Evaluate at ``values`` (one per variable).

        Values may be rationals or any ring elements supporting ``+`` and ``*``
        (for instance other MultiPolys), which makes this double as composition.
        """
        values = list(values)
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        if all(is_scalar(v) for v in values):
            return self._substitute_rational([Fraction(v) for v in values])
        powers = [[1] for _ in range(self.nvars)]
        total = 0
        for key, c in self.terms.items():
            term = c
            for i in range(self.nvars):
                e = key & _MASK
                key >>= _W
                if e:
                    pw = powers[i]
                    while len(pw) <= e:
                        pw.append(pw[-1] * values[i])
                    term = term * pw[e]
            total = total + term
        if self.den != 1:
            total = total * Fraction(1, self.den)
        return qnorm(total) if is_scalar(total) else total

    def _substitute_rational(self, values):
        # clear denominators: v_i = a_i / b_i, work with integers scaled by prod b_i^deg_i
        nums = [v.numerator for v in values]
        dens = [v.denominator for v in values]
        maxdeg = [0] * self.nvars
        for key in self.terms:
            for i in range(self.nvars):
                e = key & _MASK
                key >>= _W
                if e > maxdeg[i]:
                    maxdeg[i] = e
        npow = [[a ** e for e in range(md + 1)] for a, md in zip(nums, maxdeg)]
        dpow = [[b ** (md - e) for e in range(md + 1)] for b, md in zip(dens, maxdeg)]
        total = 0
        for key, c in self.terms.items():
            term = c
            for i in range(self.nvars):
                e = key & _MASK
                key >>= _W
                term *= npow[i][e] * dpow[i][e]
            total += term
        scale = self.den
        for b, md in zip(dens, maxdeg):
            scale *= b ** md
        return qnorm(Fraction(total, scale))

    # serialization ------------------------------------------------------
    def to_json(self):
        return [{"exps": list(e), "coef": rational_to_str(c)} for e, c in self.items()]

    @classmethod
    def from_json(cls, data, nvars: int, names=None) -> "MultiPoly":
        return cls.from_dict(nvars, {tuple(t["exps"]): t["coef"] for t in data}, names)

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.names or tuple(f"z{i + 1}" for i in range(self.nvars))
        parts = []
        for exps, c in sorted(self.items(), key=lambda t: (-sum(t[0]), t[0])):
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            elif type(c) is int:
                parts.append(f"{c}*{mono}")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
