"""Polynomials over F_p as lists of ints (lowest degree first)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact_arith import UniPoly


class InseparableModP(ValueError):
    pass


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def pmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return _trim(a[:db])


def pdivexact(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        q[k - db] = c
        if c:
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    if _trim(a[:db]):
        raise ArithmeticError("division is not exact")
    return _trim(q)


def pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return pmod([c % p for c in out], f, p)


def ppowmod(a, e, f, p):
    result = [1]
    base = pmod(a, f, p)
    while e:
        if e & 1:
            result = pmulmod(result, base, f, p)
        e >>= 1
        if e:
            base = pmulmod(base, base, f, p)
    return result


def pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, pmod(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def psub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def pderiv(a, p):
    return _trim([i * c % p for i, c in enumerate(a)][1:])


@dataclass(frozen=True)
class PrimeFieldPoly:
    p: int
    coeffs: tuple

    @classmethod
    def from_rational(cls, f: UniPoly, p: int) -> "PrimeFieldPoly":
        out = []
        for c in f.coeffs:
            c = Fraction(c)
            if c.denominator % p == 0:
                raise ValueError(f"{p} divides a denominator")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        out = _trim(out)
        if len(out) != len(f.coeffs):
            raise ValueError(f"{p} divides the leading coefficient")
        return cls(p, tuple(out))

    @property
    def degree(self):
        return len(self.coeffs) - 1


def ddf_cycle_type(f: PrimeFieldPoly):
    """Degrees of the irreducible factors of a squarefree f over F_p, sorted descending."""
    p = f.p
    a = list(f.coeffs)
    inv = pow(a[-1], -1, p)
    a = [c * inv % p for c in a]
    if len(pgcd(a, pderiv(a, p), p)) > 1:
        raise InseparableModP(f"polynomial is not squarefree mod {p}")
    degrees = []
    h = [0, 1]
    i = 0
    while len(a) - 1 >= 2 * (i + 1):
        i += 1
        h = ppowmod(h, p, a, p)
        g = pgcd(a, psub(h, [0, 1], p), p)
        if len(g) > 1:
            degrees += [i] * ((len(g) - 1) // i)
            a = pdivexact(a, g, p)
            h = pmod(h, a, p)
    if len(a) > 1:
        degrees.append(len(a) - 1)
    return sorted(degrees, reverse=True)


def primes(start: int = 2, stop: int = 10 ** 6):
    """Primes in [start, stop), by trial division (small ranges only)."""
    for n in range(max(start, 2), stop):
        if n < 4 or (n % 2 and all(n % q for q in range(3, int(n ** 0.5) + 1, 2))):
            if n == 2 or n % 2:
                yield n
