"""Square-root approximation of a monic even-degree polynomial.

Every monic m of degree 2d+2 (characteristic not 2) is uniquely h^2 - ell with
h monic of degree d+1 and deg ell <= d.  The coefficients of h are found top
down by matching x^(2d+1), ..., x^(d+1); ell is whatever is left over.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact_arith import MultiPoly, UniPoly, is_separable, is_scalar, qnorm
from .exact_arith.rational import characteristic


@dataclass(frozen=True)
class SqrtDecomposition:
    m: UniPoly
    h: UniPoly
    ell: UniPoly
    d: int
    warnings: tuple = field(default=())

    @property
    def n(self) -> int:
        return 2 * self.d + 2

    @property
    def degenerate(self) -> bool:
        return bool(self.warnings)


def _half(c):
    if isinstance(c, int):
        return c // 2 if c % 2 == 0 else Fraction(c, 2)
    if isinstance(c, Fraction):
        return qnorm(c / 2)
    return c * Fraction(1, 2) if isinstance(c, MultiPoly) else c / 2


def decompose(m: UniPoly) -> SqrtDecomposition:
    n = m.degree
    if n < 2 or n % 2:
        raise ValueError(f"degree must be even and at least 2, got {n}")
    if not m.is_monic():
        raise ValueError("polynomial must be monic")
    if any(characteristic(c) == 2 for c in m.coeffs):
        raise ValueError("characteristic 2 is not supported")
    d = n // 2 - 1
    h = [0] * (d + 2)
    h[d + 1] = 1
    h[d] = _half(m[n - 1])
    for j in range(2, d + 2):
        # coefficient of x^(n-j) in h^2, ignoring the 2*h_{d+1-j} term still unknown
        target = n - j
        g = 0
        lo = d + 2 - j
        for a in range(lo, d + 1):
            b = target - a
            if lo <= b <= d and h[a] and h[b]:
                g = g + h[a] * h[b]
        h[d + 1 - j] = _half(m[target] - g)
    hp = UniPoly(h)
    ell = hp * hp - m
    if ell.degree > d:
        raise ArithmeticError("back-substitution failed to cancel the top coefficients")
    return SqrtDecomposition(m, hp, ell, d, _flags(ell, d))


def _flags(ell: UniPoly, d: int) -> tuple:
    warnings = []
    if not ell:
        warnings.append("ell-zero")
    elif ell.degree < d:
        warnings.append("ell-degree-drop")
    elif ell.degree >= 1 and all(is_scalar(c) for c in ell.coeffs) and not is_separable(ell):
        warnings.append("ell-inseparable")
    return tuple(warnings)


def recompose(dec: SqrtDecomposition) -> UniPoly:
    return dec.h * dec.h - dec.ell


def generic_monic(n: int, prefix: str = "m") -> UniPoly:
    names = tuple(f"{prefix}{i}" for i in range(n))
    ms = MultiPoly.variables(n, names)
    return UniPoly(ms + [1])


def decompose_generic(n: int) -> SqrtDecomposition:
    """Decomposition of x^n + m_{n-1} x^{n-1} + ... + m_0 over Q[m_0..m_{n-1}]."""
    return decompose(generic_monic(n))
