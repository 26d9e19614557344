import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from etalecurves.galois_modules import (
    EXACT_ORDER_CAP, SPLIT, Character, FiniteGroup, GroupTooLarge, PatternError, TableFailure,
    alternating, character_table, check_quad_identity, coset_fixed_points, cycle_type, cyclic,
    dihedral, fixed_dimension, from_cycles, parse_cycles, parse_group, perm_character,
    rank_growth_report, submodule_test, symmetric, v_etale, v_module, wreath_mu2)

from module_patterns import patterns


def by_cycle_type(chi):
    return {cycle_type(r): v for r, v in zip(chi.group.representatives, chi.values)}


def orbit_count(H, G, K):
    """Number of H-orbits on the left cosets G/K, counted directly."""
    cosets, seen = [], set()
    for g in G.elements:
        if g not in seen:
            c = frozenset(tuple(g[k[i]] for i in range(G.degree)) for k in K.elements)
            seen |= c
            cosets.append(c)
    index = {x: i for i, c in enumerate(cosets) for x in c}
    parent = list(range(len(cosets)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for h in H.gens:
        for i, c in enumerate(cosets):
            x = next(iter(c))
            j = index[tuple(h[x[a]] for a in range(G.degree))]
            parent[find(i)] = find(j)
    return len({find(i) for i in range(len(cosets))})


def random_subgroup(G, rng, k=None):
    k = rng.randint(0, 2) if k is None else k
    return FiniteGroup([rng.choice(G.elements) for _ in range(k)], G.degree, G.bound)


SMALL_GROUPS = [symmetric(3), symmetric(4), dihedral(5), alternating(4), cyclic(6),
                wreath_mu2(2), symmetric(5)]


# -- groups -------------------------------------------------------------------

@pytest.mark.parametrize("text,order", [("S4", 24), ("A5", 60), ("C3", 3), ("D4", 8),
                                        ("W4", 384), ("mu2wrS3", 48),
                                        ("4: (1,2); (1,2,3,4)", 24), ("S1", 1)])
def test_parse_group(text, order):
    assert parse_group(text).order == order


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_group("Q8")
    with pytest.raises(ValueError):
        parse_cycles("(1,5)", 4)


def test_permutation_conventions():
    g = from_cycles([(1, 2, 3)], 3)
    assert g == (1, 2, 0)
    assert cycle_type(from_cycles([(1, 2), (3, 4, 5)], 6)) == (3, 2, 1)


def test_group_too_large():
    with pytest.raises(GroupTooLarge):
        symmetric(8).order
    assert FiniteGroup(symmetric(8).gens, 8, bound=50_000).order == 40320


def test_classes_and_stabilizers():
    S4 = symmetric(4)
    assert sorted(S4.class_sizes) == [1, 3, 6, 6, 8]
    assert S4.classes[0] == [tuple(range(4))]
    assert S4.stabilizer(2).order == 6
    assert S4.set_stabilizer([0, 1]).order == 4
    W = wreath_mu2(4)
    assert W.set_stabilizer([0, 4]).order == 96 and W.stabilizer(0).order == 48
    assert sum(W.class_sizes) == 384


# -- permutation characters -----------------------------------------------------

def test_perm_character_s3():
    S3 = symmetric(3)
    chi = perm_character(S3, S3.stabilizer(0))
    assert by_cycle_type(chi) == {(1, 1, 1): 3, (2, 1): 1, (3,): 0}
    assert chi == coset_fixed_points(S3, S3.stabilizer(0))
    assert by_cycle_type(v_module(S3, S3.stabilizer(0))) == {(1, 1, 1): 2, (2, 1): 0, (3,): -1}


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=lambda G: G.name)
def test_perm_character_extremes(G):
    assert perm_character(G, G) == Character.trivial(G)
    assert v_module(G, G) == Character.zero(G)
    reg = perm_character(G, G.trivial_subgroup())
    assert reg.values == (G.order,) + (0,) * (len(G.classes) - 1)


def test_perm_character_rejects_non_subgroup():
    S3 = symmetric(3)
    with pytest.raises(PatternError):
        perm_character(S3, symmetric(4))


@given(st.integers(0, 10 ** 6))
def test_perm_character_matches_coset_count(seed):
    rng = random.Random(seed)
    G = rng.choice(SMALL_GROUPS)
    H = random_subgroup(G, rng)
    chi = perm_character(G, H)
    assert chi == coset_fixed_points(G, H)
    assert chi.dimension == G.order // H.order
    assert v_module(G, H).dimension == G.order // H.order - 1


def test_v_etale_examples():
    S3 = symmetric(3)
    s = S3.stabilizer(0)
    assert v_etale(S3, [s]) == v_module(S3, s)
    assert v_etale(S3, [s, S3]).dimension == 3
    r = 4
    assert v_etale(S3, [s] * r) == Character.trivial(S3) * (r - 1) + v_module(S3, s) * r
    with pytest.raises(PatternError):
        v_etale(S3, [])


@given(st.integers(0, 10 ** 6))
def test_v_etale_dimension(seed):
    rng = random.Random(seed)
    G = rng.choice(SMALL_GROUPS)
    Hs = [random_subgroup(G, rng) for _ in range(rng.randint(1, 4))]
    assert v_etale(G, Hs).dimension == sum(G.order // H.order for H in Hs) - 1


# -- reciprocity and orbit counting ---------------------------------------------

@given(st.integers(0, 10 ** 6))
def test_frobenius_reciprocity(seed):
    rng = random.Random(seed)
    G = rng.choice(SMALL_GROUPS)
    H = random_subgroup(G, rng, rng.randint(1, 2))
    chi = perm_character(H, random_subgroup(H, rng))
    psi = perm_character(G, random_subgroup(G, rng))
    assert chi.induce(G).inner(psi) == chi.inner(psi.restrict(H))


@given(st.integers(0, 10 ** 6))
def test_burnside(seed):
    rng = random.Random(seed)
    G = rng.choice(SMALL_GROUPS)
    H, K = random_subgroup(G, rng), random_subgroup(G, rng)
    assert perm_character(G, H).inner(Character.trivial(G)) == 1
    assert v_module(G, H).inner(Character.trivial(G)) == 0
    # <Res perm(G/K), 1_H> counts H-orbits on G/K
    assert fixed_dimension(perm_character(G, K), H) == orbit_count(H, G, K)


def test_induction_is_transitive():
    S4 = symmetric(4)
    H = S4.stabilizer(0)
    K = H.stabilizer(1)
    assert perm_character(H, K).induce(S4) == perm_character(S4, K)


# -- refinement identity ----------------------------------------------------------

def coset_oracle(G, omega, tilde):
    """Sum over factors of perm(G/K_ij) - perm(G/H_i), all by coset counting."""
    total = Character.zero(G)
    for H, sub in zip(omega, tilde):
        sub = [H, H] if sub == SPLIT else sub
        for K in sub:
            total = total + coset_fixed_points(G, K)
        total = total - coset_fixed_points(G, H)
    return total


@pytest.mark.parametrize("label,G,omega,tilde", patterns(), ids=[p[0] for p in patterns()])
def test_quad_identity(label, G, omega, tilde):
    res = check_quad_identity(G, omega, tilde)
    assert res.holds
    assert res.dimension == res.e * res.n - res.n
    assert res.difference == res.induced == coset_oracle(G, omega, tilde)
    # V(tilde) = V(tilde/omega) + V(omega) as characters
    flat = [K for H, sub in zip(omega, tilde) for K in ([H, H] if sub == SPLIT else sub)]
    assert v_etale(G, flat) == res.difference + v_etale(G, omega)
    rec = res.to_json()
    assert rec["dimension"] == rec["expected_dimension"]


def test_quad_identity_split_s4():
    S4 = symmetric(4)
    res = check_quad_identity(S4, [S4.stabilizer(0)], [SPLIT])
    assert res.holds and res.n == 4 and res.e == 2 and res.dimension == 4
    assert res.difference == perm_character(S4, S4.stabilizer(0))


def test_quad_identity_pattern_errors():
    S4 = symmetric(4)
    s = S4.stabilizer(0)
    with pytest.raises(PatternError):
        check_quad_identity(S4, [s], [SPLIT, SPLIT])
    with pytest.raises(PatternError):
        check_quad_identity(S4, [s], [[S4]])
    with pytest.raises(PatternError):
        # degrees 2 and 3 over the two factors
        check_quad_identity(S4, [s, s], [SPLIT, [s.stabilizer(1)]])


# -- character tables and submodules --------------------------------------------------

@pytest.mark.parametrize("G,degrees", [
    (symmetric(3), [1, 1, 2]),
    (symmetric(4), [1, 1, 2, 3, 3]),
    (symmetric(5), [1, 1, 4, 4, 5, 5, 6]),
    (alternating(5), [1, 3, 3, 4, 5]),
    (dihedral(4), [1, 1, 1, 1, 2]),
    (cyclic(5), [1] * 5),
])
def test_character_table_degrees(G, degrees):
    assert character_table(G).degrees == degrees


def test_character_table_wreath():
    W = wreath_mu2(4)
    table = character_table(W)
    assert len(table.degrees) == len(W.classes) == 20
    assert sum(d * d for d in table.degrees) == 384


def test_regular_character_decomposition():
    for G in (symmetric(4), alternating(5)):
        table = character_table(G)
        reg = perm_character(G, G.trivial_subgroup())
        assert table.decompose(reg) == table.degrees


def test_character_table_order_cap():
    big = FiniteGroup(symmetric(7).gens, 7)
    assert big.order > EXACT_ORDER_CAP
    with pytest.raises(TableFailure):
        character_table(big)


def test_submodule_examples():
    S3 = symmetric(3)
    s = S3.stabilizer(0)
    V = v_module(S3, s)
    assert submodule_test(V, v_etale(S3, [s, S3])).holds
    verdict = submodule_test(Character.trivial(S3), V)
    assert not verdict.holds and verdict.exact
    assert submodule_test(V, V).holds


@given(st.integers(0, 10 ** 6))
def test_submodule_of_direct_sum(seed):
    rng = random.Random(seed)
    G = rng.choice(SMALL_GROUPS)
    Hs = [random_subgroup(G, rng) for _ in range(rng.randint(1, 3))]
    V = v_module(G, Hs[0])
    assert submodule_test(V, v_etale(G, Hs)).holds
    assert submodule_test(V + Character.trivial(G), V).holds is False


def test_submodule_partial_mode():
    big = FiniteGroup(symmetric(7).gens, 7, name="S7")
    s = big.stabilizer(0)
    V = v_module(big, s)
    verdict = submodule_test(V, v_etale(big, [s, big]))
    assert verdict.holds and not verdict.exact and verdict.notes
    assert not submodule_test(Character.trivial(big), V).holds
    with pytest.raises(TableFailure):
        submodule_test(V, V, allow_partial=False)


# -- rank growth ------------------------------------------------------------------------

def test_rank_growth_cyclic_cubic():
    C3 = cyclic(3)
    realized = v_module(C3, C3.trivial_subgroup()) * 3 + Character.trivial(C3) * 3
    report = rank_growth_report(realized, [C3, C3.trivial_subgroup()])
    assert report.base_rank_bound == 3
    assert report.fixed_dimensions == [3, 9]
    assert report.steps == [{"from": 0, "to": 1, "growth_at_least": 6}]
    assert report.steps[0]["growth_at_least"] >= 3


def klein_four():
    return FiniteGroup([from_cycles([(1, 2), (3, 4)], 4), from_cycles([(1, 3), (2, 4)], 4)], 4)


def test_rank_growth_trivial_module():
    S4 = symmetric(4)
    chain = [S4, alternating(4), klein_four(), S4.trivial_subgroup()]
    report = rank_growth_report(Character.trivial(S4) * 5, chain)
    assert report.fixed_dimensions == [5, 5, 5, 5]
    assert all(s["growth_at_least"] == 0 for s in report.steps)


def test_rank_growth_full_chain():
    S4 = symmetric(4)
    one = S4.trivial_subgroup()
    chain = [S4, alternating(4), klein_four(), one]
    realized = v_module(S4, one)
    report = rank_growth_report(realized, chain)
    # oracle: H-orbits on G/1 minus the trivial summand
    assert report.fixed_dimensions == [orbit_count(H, S4, one) - 1 for H in chain]
    assert report.fixed_dimensions == [0, 1, 5, 23]
    assert all(s["growth_at_least"] > 0 for s in report.steps)


def test_rank_growth_requires_descending_chain():
    S4 = symmetric(4)
    with pytest.raises(PatternError):
        rank_growth_report(Character.trivial(S4), [S4.trivial_subgroup(), S4])


def test_character_json():
    S3 = symmetric(3)
    rec = v_module(S3, S3.stabilizer(0)).to_json()
    assert rec["class_sizes"] == S3.class_sizes
    assert sorted(rec["values"]) == ["-1/1", "0/1", "2/1"]
    assert Fraction(rec["values"][0]) == 2
