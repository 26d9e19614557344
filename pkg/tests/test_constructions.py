from fractions import Fraction

import pytest

from etalecurves.constructions import (CapacityError, GenericConstruction, construct_C1,
                                       construct_C2C3, construct_family, construct_quadratic,
                                       d_for_genus, diagram_morphisms, genus_bookkeeping)
from etalecurves.etale_algebra import EtaleAlgebra
from etalecurves.exact_arith import MultiPoly, UniPoly, substitute

x = UniPoly.x()


def U(*cs):
    return UniPoly(list(cs))


TABLE = [  # (kind, d) -> (genus, divisor degree)
    ("X1", 5, 2, 12), ("X1", 4, 1, 10), ("X1", 3, 1, 8), ("X1", 6, 2, 14),
    ("X2", 3, 1, 16), ("X2", 2, 1, 12), ("X2", 5, 2, 24), ("X2", 4, 2, 20),
    ("X3", 2, 1, 12), ("X3", 3, 2, 16), ("X3", 1, 0, 8),
]


@pytest.mark.parametrize("kind,d,g,deg", TABLE)
def test_genus_bookkeeping(kind, d, g, deg):
    assert genus_bookkeeping(kind, d) == (g, deg)


def test_genus_formulas_for_many_d():
    for g in range(0, 8):
        assert genus_bookkeeping("X1", 2 * g + 1) == (g, 4 * g + 4)
        assert genus_bookkeeping("X1", 2 * g + 2) == (g, 4 * g + 6)
        assert genus_bookkeeping("X2", 2 * g + 1) == (g, 8 * g + 8)
        if g:
            assert genus_bookkeeping("X2", 2 * g) == (g, 8 * g + 4)
        assert genus_bookkeeping("X3", g + 1) == (g, 4 * g + 8)
        for kind in ("X1", "X2", "X3"):
            assert genus_bookkeeping(kind, d_for_genus(kind, g))[0] == g


def test_genus_bookkeeping_rejects_bad_input():
    with pytest.raises(ValueError):
        genus_bookkeeping("X1", 0)
    with pytest.raises(ValueError):
        genus_bookkeeping("X4", 3)


@pytest.fixture(scope="module")
def split10():
    return construct_C1(EtaleAlgebra.split(10), 1)


def test_split_c1_marks_the_split_points(split10):
    gc = split10
    assert (gc.n, gc.d, gc.genus, gc.divisor_degree) == (10, 4, 1, 10)
    z = MultiPoly.variables(10, gc.variables)
    expected = U(1)
    for zi in z:
        expected = expected * (x - zi)
    assert gc.decomposition.m == expected
    P = gc.generic_point()
    h = gc.decomposition.h
    for i in range(10):
        assert P.x.comps[i][0] == z[i]
        assert P.y.comps[i][0] == h(z[i])


def test_split_substitution_reproduces_points(split10):
    u = list(range(1, 11))
    dec = split10.decomposition
    sub = lambda p: UniPoly([substitute(c, u) for c in p.coeffs])  # noqa: E731
    m, h, ell = sub(dec.m), sub(dec.h), sub(dec.ell)
    assert m == UniPoly.from_roots(u)
    assert ell.degree == 4
    for ui in u:
        assert h(ui) ** 2 == ell(ui)


def test_padding():
    A = EtaleAlgebra([U(-2, 0, 1)])
    gc = construct_C1(A, 1, symbolic=False)
    assert gc.n == 10 and gc.d == 4
    assert gc.omega.degrees == (2,) + (1,) * 8
    assert gc.user_factors == 1
    with pytest.raises(ValueError):
        construct_C1(EtaleAlgebra.split(12), 1)


def test_irreducible_degree_ten_symbolic_identity():
    gc = construct_C1(EtaleAlgebra([UniPoly([-2] + [0] * 9 + [1])]), 1)
    assert all(gc.check_identities().values())


def test_symbolic_cap():
    A = EtaleAlgebra.split(14)
    with pytest.raises(CapacityError):
        construct_C1(A, 2, symbolic=True)
    gc = construct_C1(A, 2)
    assert gc.decomposition is None and gc.notes
    with pytest.raises(CapacityError):
        gc.generic_point()
    assert construct_C1(EtaleAlgebra.split(6), 0, symbolic=True, cap=6).decomposition is not None


def test_split_x2_points():
    A = EtaleAlgebra.split(8)
    gc = construct_C2C3(A, A.one(), 1, "X2")
    assert (gc.d, gc.genus, gc.divisor_degree) == (3, 1, 16)
    z = MultiPoly.variables(8, gc.variables)
    P = gc.generic_point()
    h = gc.decomposition.h
    for i in range(8):
        assert P.x.a.comps[i][0] == z[i] ** 2 and P.x.b.is_zero()
        assert P.y.a.is_zero() and P.y.b.comps[i][0] == z[i] * h(z[i] ** 2)
    assert all(gc.check_identities().values())


def test_split_x3_points():
    A = EtaleAlgebra.split(8)
    gc = construct_quadratic(A, A.one(), 3, "X3")
    z = MultiPoly.variables(8, gc.variables)
    P = gc.generic_point()
    h = gc.decomposition.h
    for i in range(8):
        assert P.x.b.comps[i][0] == z[i] and P.x.a.is_zero()
        assert P.y.a.comps[i][0] == h(z[i] ** 2)
    assert all(gc.check_identities().values())


def test_x3_over_quadratic_field():
    A = EtaleAlgebra([U(-3, 0, 1)])
    gc = construct_C2C3(A, A.element([(0, 1)]), 1, "X3")
    assert gc.n == 6 and gc.d == 2
    checks = gc.check_identities()
    assert checks == {"charpoly_vanishes": True, "recompose": True,
                      "point_on_curve": True, "beta_charpoly": True}


def test_x2_over_cubic_field_pads_delta():
    A = EtaleAlgebra([U(-2, 0, 0, 1)])
    gc = construct_C2C3(A, A.element([(0, 1, 0)]), 1, "X2")
    assert gc.n == 8 and gc.omega.degrees == (3, 1, 1, 1, 1, 1)
    assert all(c == (1,) for c in gc.delta.comps[1:])
    assert all(gc.check_identities().values())


def test_delta_must_be_unit():
    A = EtaleAlgebra.split(2)
    with pytest.raises(ValueError):
        construct_C2C3(A, A.element([(1,), (0,)]), 1, "X3")
    with pytest.raises(ValueError):
        construct_C2C3(A, A.one(), 1, "X1")


def test_diagram_morphisms_generic():
    A = EtaleAlgebra([U(-3, 0, 1), U(-1, 1)])
    delta = A.element([(0, 1), (2,)])
    x1, x2, x3 = construct_family(A, delta, 2)
    R = x3.generic_point()
    on1, on2 = diagram_morphisms(R)
    assert on1.check() and on2.check()
    assert on1.model == x1.model and on2.model == x2.model
    # the images are the marked points of the partners
    P, Q = x1.generic_point(), x2.generic_point()
    assert on1.x == x3.extension.element(P.x) and on1.y == R.y
    assert on2.x == Q.x and on2.y == Q.y
    # x-line compatibility and the involution
    assert on1.x == R.x * R.x
    with pytest.raises(ValueError):
        diagram_morphisms(P)


def test_construction_json_roundtrip():
    A = EtaleAlgebra([U(-3, 0, 1)])
    gc = construct_C2C3(A, A.element([(0, 1)]), 1, "X3")
    back = GenericConstruction.from_json(gc.to_json())
    assert back.decomposition.m == gc.decomposition.m
    assert back.decomposition.ell == gc.decomposition.ell
    assert back.delta == gc.delta and back.omega == gc.omega
    assert all(back.check_identities().values())
