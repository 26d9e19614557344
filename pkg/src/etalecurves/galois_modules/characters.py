"""Rational class functions and permutation characters."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exact_arith import qnorm, rational_to_str
from .groups import FiniteGroup, compose, inverse


class PatternError(ValueError):
    pass


class Character:
    """A rational-valued class function, one value per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        values = tuple(qnorm(Fraction(v)) for v in values)
        if len(values) != len(group.classes):
            raise ValueError("one value per conjugacy class is required")
        self.group = group
        self.values = values

    @classmethod
    def trivial(cls, group):
        return cls(group, [1] * len(group.classes))

    @classmethod
    def zero(cls, group):
        return cls(group, [0] * len(group.classes))

    @classmethod
    def from_function(cls, group, fn):
        return cls(group, [fn(r) for r in group.representatives])

    @property
    def dimension(self):
        return self.values[0]

    def __call__(self, g):
        return self.values[self.group.class_of(g)]

    def _check(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        if other.group is not self.group:
            raise ValueError("characters live on different groups")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Character(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Character(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return Character(self.group, [-a for a in self.values])

    def __mul__(self, other):
        if isinstance(other, Character):
            self._check(other)
            return Character(self.group, [a * b for a, b in zip(self.values, other.values)])
        return Character(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return other.group is self.group and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def inner(self, other: "Character"):
        """<chi, psi> = |G|^-1 sum chi(g) psi(g^-1)."""
        self._check(other)
        G = self.group
        total = sum(size * self.values[j] * other.values[G.inverse_class(j)]
                    for j, size in enumerate(G.class_sizes))
        return qnorm(Fraction(total, G.order))

    def restrict(self, H: FiniteGroup) -> "Character":
        if not H.is_subgroup_of(self.group):
            raise PatternError("restriction target is not a subgroup")
        return Character(H, [self(r) for r in H.representatives])

    def induce(self, G: FiniteGroup) -> "Character":
        """Induction from self.group up to G by the class-sum formula."""
        H = self.group
        if not H.is_subgroup_of(G):
            raise PatternError("induction source is not a subgroup")
        acc = [Fraction(0)] * len(G.classes)
        for j, cls in enumerate(H.classes):
            acc[G.class_of(cls[0])] += len(cls) * Fraction(self.values[j])
        return Character(G, [G.centralizer_order(k) * acc[k] / H.order
                             for k in range(len(G.classes))])

    def is_character_of_module(self) -> bool:
        """Integral values with nonnegative dimension (necessary, not sufficient)."""
        return all(isinstance(v, int) for v in self.values) and self.dimension >= 0

    def to_json(self):
        G = self.group
        return {"group": G.name, "class_sizes": G.class_sizes,
                "class_cycle_types": [list(_cycle_type(r)) for r in G.representatives],
                "values": [rational_to_str(v) for v in self.values]}

    def __repr__(self):
        return f"Character({list(self.values)})"


def _cycle_type(g):
    from .groups import cycle_type
    return cycle_type(g)


def perm_character(G: FiniteGroup, H: FiniteGroup) -> Character:
    """Character of Q[G/H]: chi(g) = |C_G(g)| |cl(g) & H| / |H|."""
    if not H.is_subgroup_of(G):
        raise PatternError("H is not a subgroup of G")
    hits = [0] * len(G.classes)
    for h in H.elements:
        hits[G.class_of(h)] += 1
    return Character(G, [Fraction(G.centralizer_order(j) * hits[j], H.order)
                         for j in range(len(G.classes))])


def coset_fixed_points(G: FiniteGroup, H: FiniteGroup) -> Character:
    """Same character by listing left cosets and counting fixed ones."""
    if not H.is_subgroup_of(G):
        raise PatternError("H is not a subgroup of G")
    Hset = set(H.elements)
    cosets = []
    seen = set()
    for g in G.elements:
        if g not in seen:
            c = frozenset(compose(g, h) for h in H.elements)
            seen |= c
            cosets.append(c)
    reps = [next(iter(c)) for c in cosets]
    values = []
    for x in G.representatives:
        # x fixes gH iff g^-1 x g in H
        values.append(sum(1 for g in reps if compose(inverse(g), compose(x, g)) in Hset))
    return Character(G, values)


def v_module(G: FiniteGroup, H: FiniteGroup) -> Character:
    return perm_character(G, H) - Character.trivial(G)


def v_etale(G: FiniteGroup, subgroups) -> Character:
    subgroups = list(subgroups)
    if not subgroups:
        raise PatternError("an etale algebra needs at least one factor")
    out = Character.trivial(G) * (len(subgroups) - 1)
    for H in subgroups:
        out = out + v_module(G, H)
    return out


SPLIT = "split"


@dataclass
class QuadIdentityResult:
    holds: bool
    difference: Character
    induced: Character
    n: int
    e: int
    notes: list = field(default_factory=list)

    @property
    def dimension(self):
        return self.difference.dimension

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"holds": self.holds, "n": self.n, "e": self.e,
                "dimension": self.dimension,
                "expected_dimension": self.e * self.n - self.n,
                "character": self.difference.to_json(), "notes": self.notes}


def _refinement(G, omega, tilde):
    if len(tilde) != len(omega):
        raise PatternError("one refinement entry per factor is required")
    pieces = []
    for H, sub in zip(omega, tilde):
        if sub == SPLIT:
            sub = [H, H]
        sub = list(sub)
        if not sub:
            raise PatternError("empty refinement")
        for K in sub:
            if not K.is_subgroup_of(H):
                raise PatternError("refinement subgroup does not lie in its factor")
        pieces.append(sub)
    return pieces


def check_quad_identity(G: FiniteGroup, omega, tilde) -> QuadIdentityResult:
    """Compare V(tilde/K) - V(omega/K) with the sum of induced V(C_i/L_i).

    `omega` lists the subgroups H_i fixing the factors L_i; `tilde[i]` is either
    SPLIT (C_i = L_i x L_i) or a list of subgroups K_ij <= H_i whose cosets
    describe the factors of C_i over L_i.
    """
    omega = list(omega)
    for H in omega:
        if not H.is_subgroup_of(G):
            raise PatternError("factor subgroup is not in G")
    pieces = _refinement(G, omega, tilde)
    degrees = [sum(H.order // K.order for K in sub) for H, sub in zip(omega, pieces)]
    if len(set(degrees)) != 1:
        raise PatternError("the refinement must have constant degree over every factor")
    e = degrees[0]
    n = sum(G.order // H.order for H in omega)

    flat = [K for sub in pieces for K in sub]
    difference = v_etale(G, flat) - v_etale(G, omega)

    induced = Character.zero(G)
    for H, sub in zip(omega, pieces):
        local = Character.trivial(H) * -1
        for K in sub:
            local = local + perm_character(H, K)
        induced = induced + local.induce(G)
    holds = difference == induced and difference.dimension == e * n - n
    return QuadIdentityResult(holds, difference, induced, n, e)


@dataclass
class RankGrowthReport:
    fixed_dimensions: list
    steps: list

    @property
    def base_rank_bound(self):
        return self.fixed_dimensions[0]

    def to_json(self):
        return {"fixed_dimensions": self.fixed_dimensions, "steps": self.steps}


def fixed_dimension(chi: Character, H: FiniteGroup):
    return chi.restrict(H).inner(Character.trivial(H))


def rank_growth_report(realized: Character, chain) -> RankGrowthReport:
    """Fixed-vector dimensions along a descending chain of subgroups.

    chain[0] is the group of the base field and later entries belong to larger
    fields; a realized module forces rank growth of at least the jump in
    fixed dimension between consecutive fields.
    """
    chain = list(chain)
    for a, b in zip(chain, chain[1:]):
        if not b.is_subgroup_of(a):
            raise PatternError("chain must descend")
    dims = [fixed_dimension(realized, H) for H in chain]
    steps = [{"from": i, "to": i + 1, "growth_at_least": dims[i + 1] - dims[i]}
             for i in range(len(chain) - 1)]
    return RankGrowthReport(dims, steps)
