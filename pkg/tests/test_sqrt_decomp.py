import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from etalecurves.exact_arith import ModInt, MultiPoly, UniPoly
from etalecurves.sqrt_decomp import (SqrtDecomposition, decompose, decompose_generic,
                                     generic_monic, recompose)

from conftest import polys


def U(*cs):
    return UniPoly(list(cs))


def test_symbolic_quadratic():
    m0, m1 = MultiPoly.variables(2, ("m0", "m1"))
    dec = decompose(UniPoly([m0, m1, 1]))
    assert dec.h == UniPoly([m1 / 2, 1])
    assert dec.ell == UniPoly([m1 * m1 / 4 - m0])
    gen = decompose_generic(2)
    assert gen.h == dec.h and gen.ell == dec.ell


def test_small_examples():
    dec = decompose(U(1, 2, 1))
    assert dec.h == U(1, 1) and dec.ell == UniPoly([]) and "ell-zero" in dec.warnings
    dec = decompose(U(1, 0, 0, 0, 1))
    assert dec.h == U(0, 0, 1) and dec.ell == U(-1)
    assert recompose(dec) == U(1, 0, 0, 0, 1)


def test_recompose_examples():
    assert recompose(SqrtDecomposition(U(0, 0, 1), U(0, 1), UniPoly([]), 0)) == U(0, 0, 1)
    assert recompose(SqrtDecomposition(U(0, 2, 1), U(1, 1), U(1), 0)) == U(0, 2, 1)
    assert recompose(SqrtDecomposition(U(9, -2, 6, 0, 1), U(3, 0, 1), U(0, 2), 1)) == \
        U(9, -2, 6, 0, 1)


def test_generic_quartic_coefficients():
    dec = decompose_generic(4)
    m = MultiPoly.variables(4, ("m0", "m1", "m2", "m3"))
    assert dec.h[1] == m[3] / 2
    assert dec.h[0] == m[2] / 2 - m[3] * m[3] / 8


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_generic_roundtrip(n):
    dec = decompose_generic(n)
    assert recompose(dec) == generic_monic(n)
    assert dec.h.degree == n // 2 and dec.h.is_monic()
    assert dec.ell.degree <= n // 2 - 1


def test_generic_sextic_against_sympy():
    dec = decompose_generic(6)
    ms = sympy.symbols("m0:6")
    x = sympy.Symbol("x")
    m = x ** 6 + sum(ms[i] * x ** i for i in range(6))
    h3 = sympy.symbols("h0:3")
    h = x ** 3 + sum(h3[i] * x ** i for i in range(3))
    # top three coefficients of h^2 - m vanish: solve the triangular system
    diff = sympy.Poly(sympy.expand(h * h - m), x)
    sol = sympy.solve([diff.coeff_monomial(x ** k) for k in (5, 4, 3)], h3, dict=True)[0]
    for i in range(3):
        ours = sympy.sympify(str(dec.h[i]).replace("^", "**"))
        assert sympy.simplify(ours - sol[h3[i]]) == 0


def test_errors():
    with pytest.raises(ValueError):
        decompose(U(1, 0, 0, 1))
    with pytest.raises(ValueError):
        decompose(U(1, 0, 2))
    with pytest.raises(ValueError):
        decompose(UniPoly([ModInt(1, 2), ModInt(0, 2), ModInt(1, 2)]))
    with pytest.raises(ValueError):
        decompose(U(1))


def test_roundtrip_random_500():
    rng = random.Random(1)
    for _ in range(500):
        n = 2 * rng.randint(1, 6)
        m = UniPoly([Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(n)] + [1])
        dec = decompose(m)
        assert recompose(dec) == m
        assert dec.h.degree == n // 2 and dec.h.is_monic()
        assert dec.ell.degree <= dec.d


@given(polys(min_degree=1, max_degree=6, monic=True), polys(min_degree=-1, max_degree=5))
def test_uniqueness(h, ell):
    """Any admissible (h, ell) with m = h^2 - ell is the one decompose returns."""
    if ell.degree >= h.degree:
        ell = ell % h if h.degree > 0 else UniPoly([])
    m = h * h - ell
    dec = decompose(m)
    assert dec.h == h and dec.ell == ell


def test_degenerate_flags():
    h = U(1, 0, 1)
    assert "ell-degree-drop" in decompose(h * h - U(5)).warnings
    cube = U(0, 0, 0, 1)
    dec = decompose(cube * cube - U(1, 2, 1))
    assert dec.ell == U(1, 2, 1) and dec.warnings == ("ell-inseparable",)
    assert decompose(h * h - U(1, 3)).warnings == ()


def test_modular_field():
    p = 7
    m = UniPoly([ModInt(c, p) for c in (3, 1, 4, 1, 1)])
    dec = decompose(m)
    assert recompose(dec) == m
