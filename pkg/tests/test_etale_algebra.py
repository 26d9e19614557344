import random
from fractions import Fraction

import pytest
import sympy

from etalecurves.etale_algebra import (EtaleAlgebra, ParentMismatch, QuadExtension,
                                       charpoly, elem_mul, generic_element, quad_generic)
from etalecurves.exact_arith import MultiPoly, UniPoly, charpoly_berkowitz, determinant

X, Y = sympy.symbols("x y")


def U(*cs):
    return UniPoly(list(cs))


def random_algebra(rng, max_n=10):
    """Products of split, pure-power and random irreducible-ish factors."""
    factors, n = [], 0
    target = rng.randint(1, max_n)
    while n < target:
        k = rng.randint(1, min(4, target - n))
        while True:
            if k == 1:
                f = U(-rng.randint(-9, 9), 1)
            elif rng.random() < 0.5:
                f = UniPoly([-rng.choice([2, 3, 5, 7])] + [0] * (k - 1) + [1])
            else:
                f = UniPoly([rng.randint(-5, 5) for _ in range(k)] + [1])
            try:
                alg = EtaleAlgebra(factors + [f])
            except ValueError:
                continue
            if f.degree > 1 or all(g != f for g in factors):
                break
        factors.append(f)
        n += k
    return alg


def random_element(rng, alg):
    return alg.from_coordinates([Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                                 for _ in range(alg.n)])


def sympy_factor_charpoly(f: UniPoly, comp):
    fy = sum(sympy.Rational(str(c)) * Y ** i for i, c in enumerate(f.coeffs))
    ay = sum(sympy.Rational(str(c)) * Y ** i for i, c in enumerate(comp))
    r = sympy.resultant(fy, X - ay, Y)
    return sympy.Poly(r, X).monic()


def test_multiplication_examples():
    A = EtaleAlgebra([U(-2, 0, 1)])
    x = A.element([(0, 1)])
    assert elem_mul(x, x) == A.scalar(2)
    S = EtaleAlgebra.split(2)
    assert elem_mul(S.element([(1,), (2,)]), S.element([(3,), (4,)])) == S.element([(3,), (8,)])
    C = EtaleAlgebra([U(-2, 0, 0, 1)])
    a = C.element([(1, 1, 0)])
    assert a * a == C.element([(1, 2, 1)])


def test_parent_mismatch():
    A, B = EtaleAlgebra.split(2), EtaleAlgebra([U(-2, 0, 1)])
    with pytest.raises(ParentMismatch):
        A.one() * B.one()


def test_algebra_validation():
    with pytest.raises(ValueError):
        EtaleAlgebra([U(0, 0, 1)])        # inseparable
    with pytest.raises(ValueError):
        EtaleAlgebra([U(1, 2)])           # not monic
    with pytest.raises(ValueError):
        EtaleAlgebra([])


def test_charpoly_examples():
    S = EtaleAlgebra.split(2)
    assert charpoly(S.element([(2,), (3,)])) == U(6, -5, 1)
    A = EtaleAlgebra([U(-2, 0, 1)])
    assert charpoly(A.element([(0, 1)])) == U(-2, 0, 1)
    C = EtaleAlgebra([U(-2, 0, 0, 1)])
    cp = charpoly(C.element([(1, 1, 0)]))
    assert cp == U(-3, 3, -3, 1)
    ref = sympy_factor_charpoly(C.factors[0], (1, 1, 0))
    assert [Fraction(str(c)) for c in reversed(ref.all_coeffs())] == list(map(Fraction, cp.coeffs))


def test_charpoly_agrees_with_resultant_and_matrix_oracles():
    rng = random.Random(2)
    for _ in range(25):
        alg = random_algebra(rng, 8)
        a = random_element(rng, alg)
        cp = a.charpoly()
        assert cp == charpoly_berkowitz(a.mult_matrix())
        expected = sympy.Integer(1)
        for f, comp in zip(alg.factors, a.comps):
            expected *= sympy_factor_charpoly(f, comp).as_expr()
        ref = sympy.Poly(sympy.expand(expected), X)
        assert [Fraction(str(c)) for c in reversed(ref.all_coeffs())] == list(map(Fraction, cp.coeffs))


def test_cayley_hamilton_random():
    rng = random.Random(3)
    for _ in range(200):
        alg = random_algebra(rng, 10)
        a = random_element(rng, alg)
        assert a.charpoly()(a).is_zero()


def test_charpoly_multiplicative_over_factors():
    rng = random.Random(4)
    for _ in range(30):
        A, B = random_algebra(rng, 5), random_algebra(rng, 5)
        try:
            AB = EtaleAlgebra(A.factors + B.factors)
        except ValueError:
            continue
        a, b = random_element(rng, A), random_element(rng, B)
        ab = AB.element(list(a.comps) + list(b.comps))
        assert ab.charpoly() == a.charpoly() * b.charpoly()


def test_trace_and_norm():
    rng = random.Random(6)
    for _ in range(40):
        alg = random_algebra(rng, 4)
        a = random_element(rng, alg)
        cp = a.charpoly()
        n = alg.n
        assert cp[n - 1] == -a.trace()
        assert cp[0] == (-1) ** n * a.norm()
        assert a.norm() == determinant(a.mult_matrix())


def test_inverse():
    rng = random.Random(7)
    for _ in range(30):
        alg = random_algebra(rng, 6)
        a = random_element(rng, alg)
        if a.is_unit():
            assert a * a.inverse() == alg.one()


def test_generic_element_examples():
    (z1,) = MultiPoly.variables(1, ("z1",))
    Q1 = EtaleAlgebra.split(1)
    assert generic_element(Q1).comps[0][0] == z1
    z1, z2 = MultiPoly.variables(2, ("z1", "z2"))
    Q2 = EtaleAlgebra.split(2)
    x = UniPoly.x()
    assert generic_element(Q2).charpoly() == (x - z1) * (x - z2)
    A = EtaleAlgebra([U(-2, 0, 1)])
    cp = generic_element(A).charpoly()
    assert cp == UniPoly([z1 * z1 - 2 * z2 * z2, -2 * z1, 1])


@pytest.mark.parametrize("factors", [
    [U(-2, 0, 0, 1), U(-1, 1)],
    [U(1, 1, 1)],
    [U(-3, 0, 1), U(-2, 0, 1)],
])
def test_generic_cayley_hamilton_small(factors):
    A = EtaleAlgebra(factors)
    g = generic_element(A)
    assert g.charpoly()(g).is_zero()


def test_generic_charpoly_matches_symbolic_resultant():
    A = EtaleAlgebra([U(-2, 0, 0, 1)])
    cp = generic_element(A).charpoly()
    z = sympy.symbols("z1:4")
    ay = z[0] + z[1] * Y + z[2] * Y ** 2
    ref = sympy.Poly(sympy.resultant(Y ** 3 - 2, X - ay, Y), X)
    ours = sum(sympy.sympify(str(c).replace("^", "**")) * X ** i for i, c in enumerate(cp.coeffs))
    assert sympy.expand(ours - ref.as_expr()) == 0


def test_quad_generic_examples():
    x = UniPoly.x()
    Q1 = EtaleAlgebra.split(1)
    beta, alpha = quad_generic(Q1, Q1.one())
    (z1,) = MultiPoly.variables(1, ("z1",))
    assert alpha.comps[0][0] == z1 * z1
    assert beta.charpoly() == x * x - z1 * z1
    Q2 = EtaleAlgebra.split(2)
    beta, alpha = quad_generic(Q2, Q2.one())
    z1, z2 = MultiPoly.variables(2, ("z1", "z2"))
    assert beta.charpoly() == (x * x - z1 * z1) * (x * x - z2 * z2)
    A = EtaleAlgebra([U(-2, 0, 1)])
    beta, alpha = quad_generic(A, A.element([(0, 1)]))
    assert beta.charpoly() == alpha.charpoly().compose_square()


@pytest.mark.parametrize("factors,delta", [
    ([U(-1, 1), U(-2, 1), U(-3, 1), U(-4, 1)], [(1,), (2,), (3,), (-1,)]),
    ([U(-2, 0, 1), U(-5, 1)], [(0, 1), (5,)]),
    ([U(-2, 0, 0, 1), U(0, 1)], [(1, 1, 0), (3,)]),
    ([U(1, 0, 0, 0, 1)], [(0, 1, 0, 0)]),
])
def test_quad_generic_identity(factors, delta):
    A = EtaleAlgebra(factors)
    beta, alpha = quad_generic(A, A.element(delta))
    assert beta.charpoly() == alpha.charpoly().compose_square()


def test_quad_extension_requires_unit():
    A = EtaleAlgebra.split(2)
    with pytest.raises(ValueError):
        QuadExtension(A, A.element([(1,), (0,)]))


def test_quad_element_arithmetic():
    A = EtaleAlgebra([U(-2, 0, 1)])
    E = QuadExtension(A, A.element([(0, 1)]))
    s = E.s()
    assert s * s == E.element(A.element([(0, 1)]))
    a = E.element(A.element([(1, 1)]), A.element([(2, 0)]))
    assert a.charpoly()(a).is_zero()


def test_algebra_json_roundtrip():
    A = EtaleAlgebra([U(-2, 0, 1), U(Fraction(1, 2), 1)])
    assert EtaleAlgebra.from_json(A.to_json()) == A
    e = A.element([(Fraction(1, 3), 2), (5,)])
    from etalecurves.etale_algebra import AlgebraElement
    assert AlgebraElement.from_json(A, e.to_json()) == e
