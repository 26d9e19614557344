"""Refinement patterns (G, Omega subgroups, refinement) shared by the module tests."""
from etalecurves.galois_modules import (SPLIT, FiniteGroup, alternating, dihedral, symmetric,
                                        wreath_mu2)


def _meet(G, H, K):
    """Intersection of two subgroups, by listing elements."""
    common = [g for g in H.elements if g in K]
    return FiniteGroup(common, G.degree, G.bound)


def patterns():
    S3, S4, S5, A5 = symmetric(3), symmetric(4), symmetric(5), alternating(5)
    W3, W4 = wreath_mu2(3), wreath_mu2(4)
    D4 = dihedral(4)
    out = []

    def add(label, G, omega, tilde):
        out.append((label, G, omega, tilde))

    s = S3.stabilizer(0)
    add("S3: L split", S3, [s], [SPLIT])
    add("S3: L x K split", S3, [s, S3], [SPLIT, SPLIT])
    add("S3: K to Galois closure", S3, [S3], [[S3.trivial_subgroup()]])
    add("S3: L to Galois closure", S3, [s], [[S3.trivial_subgroup()]])

    s = S4.stabilizer(0)
    add("S4: L split", S4, [s], [SPLIT])
    add("S4: L cubic refinement", S4, [s], [[_meet(S4, s, S4.stabilizer(1))]])
    add("S4: L x L split", S4, [s, s], [SPLIT, SPLIT])

    s = S5.stabilizer(0)
    add("S5: L split", S5, [s], [SPLIT])
    add("S5: L quartic refinement", S5, [s], [[_meet(S5, s, S5.stabilizer(1))]])
    add("S5: L x K split", S5, [s, S5], [SPLIT, SPLIT])
    add("S5: L quadratic through A4", S5, [s], [[_meet(S5, s, A5)]])

    s = A5.stabilizer(0)
    add("A5: L split", A5, [s], [SPLIT])
    add("A5: L quartic refinement", A5, [s], [[_meet(A5, s, A5.stabilizer(1))]])

    add("D4: square roots", D4, [D4.stabilizer(0)], [SPLIT])

    for W, k in ((W3, 3), (W4, 4)):
        pair = W.set_stabilizer([0, k])
        add(f"mu2wrS{k}: pairs to points", W, [pair], [[W.stabilizer(0)]])
        add(f"mu2wrS{k}: pairs split", W, [pair], [SPLIT])

    T = FiniteGroup([], 1, name="1")
    add("trivial group", T, [T], [SPLIT])
    return out
