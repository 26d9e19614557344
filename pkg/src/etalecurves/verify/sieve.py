"""Relation-lattice sieve for rational points on a genus-one curve.

For each good prime p the integer relations satisfied by the reduced points form
a full-rank lattice in Z^k.  Every relation that holds over Q lies in all of them,
so it lies in their intersection.  Once the intersection has no nonzero vector of
max-norm <= B, no relation with coefficients bounded by B exists over Q.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .elliptic import SubgroupTable, WeierstrassCurve, reduce_point
from .ffield import primes
from .lattice import gram_schmidt, hnf, kernel_modulo, lll, short_vectors, smith_invariants


@dataclass
class PrimeData:
    p: int
    order: int
    invariants: list       # Z/a x Z/b with b | a, given as [a, b] (trivial factors dropped)
    relations: list        # triangular relation basis for the generators found by enumeration
    dlogs: list            # per marked point, coefficient vector over those generators

    def point_lattice(self):
        """Relations among the marked points at this prime."""
        return kernel_modulo(self.dlogs, self.relations) if self.relations else \
            [[int(i == j) for j in range(len(self.dlogs))] for i in range(len(self.dlogs))]

    def to_json(self):
        return {"p": self.p, "order": self.order, "structure": self.invariants,
                "dlogs": self.dlogs}


def prime_data(curve: WeierstrassCurve, points, p: int) -> PrimeData:
    if not curve.is_good_prime(p):
        raise ValueError(f"bad reduction at {p}")
    E = curve.reduce(p)
    reduced = [reduce_point(P, p) for P in points]
    for Q in reduced:
        if not E.contains(Q):
            raise ArithmeticError("reduced point is not on the reduced curve")
    allpts = E.points()
    order = len(allpts) + 1
    sub = SubgroupTable(E)
    for P in allpts:
        if len(sub) == order:
            break
        if P not in sub:
            sub.add(P)
    dlogs = [list(sub.vector(Q)) for Q in reduced]
    rel = [list(r) for r in sub.relations]
    inv = smith_invariants(rel) if rel else []
    return PrimeData(p, order, inv, rel, dlogs)


@dataclass
class RelationLattice:
    k: int
    basis: list
    provenance: list = field(default_factory=list)

    @property
    def index(self) -> int:
        H = hnf(self.basis)
        d = 1
        for i, row in enumerate(H):
            d *= row[i]
        return abs(d)

    def to_json(self):
        return {"k": self.k, "basis": self.basis,
                "provenance": [pd.to_json() for pd in self.provenance]}


@dataclass
class SieveResult:
    verdict: str                      # no-relation-up-to-B | relation-found | inconclusive
    B: int
    lattice: RelationLattice
    primes: list
    relations: list = field(default_factory=list)   # verified over Q
    notes: list = field(default_factory=list)

    @property
    def k(self):
        return self.lattice.k

    @property
    def dimension_estimate(self) -> Optional[int]:
        if self.verdict == "no-relation-up-to-B":
            return self.k
        if self.verdict == "relation-found":
            return self.k - len(self.relations)
        return None

    def to_json(self):
        return {
            "verdict": self.verdict,
            "B": self.B,
            "k": self.k,
            "primes": self.primes,
            "lattice_basis": self.lattice.basis,
            "verified_relations": self.relations,
            "dimension_estimate": self.dimension_estimate,
            "per_prime": [pd.to_json() for pd in self.lattice.provenance],
            "notes": self.notes,
        }


def is_relation(curve: WeierstrassCurve, points, coeffs) -> bool:
    return curve.combination(coeffs, points) is None


def _intersect_with(basis, pd: PrimeData):
    """basis intersected with the relation lattice at one prime."""
    if not pd.relations:
        return basis
    images = []
    r = len(pd.relations)
    for b in basis:
        img = [0] * r
        for c, v in zip(b, pd.dlogs):
            if c:
                for j in range(r):
                    img[j] += c * v[j]
        images.append(img)
    Y = kernel_modulo(images, pd.relations)
    k = len(basis[0])
    return [[sum(y[i] * basis[i][c] for i in range(len(basis))) for c in range(k)] for y in Y]


def _gs_cut(basis, radius2):
    _, norms = gram_schmidt(basis)
    s = 0
    for j, nrm in enumerate(norms):
        if nrm <= radius2:
            s = j + 1
    return s


def _ball_count(k, radius2, det):
    """Rough expected number of lattice points in the ball (used only to decide
    whether exact enumeration is cheap enough to try)."""
    logvol = (k / 2) * math.log(math.pi) - math.lgamma(k / 2 + 1) + (k / 2) * math.log(radius2)
    return math.exp(min(logvol - math.log(det), 700)) if det > 0 else float("inf")


def _worker(args):
    curve, points, p = args
    return prime_data(curve, points, p)


def sieve_points(curve: WeierstrassCurve, points, B: int = 5, prime_budget: int = 200,
                 start: int = 5, max_prime: int = 10 ** 5, skip=(), workers: int = 1,
                 node_cap: int = 100_000) -> SieveResult:
    """Sieve the rational points ``points`` of ``curve`` (elements of E(Q))."""
    k = len(points)
    if k == 0:
        raise ValueError("need at least one point")
    for P in points:
        if not curve.contains(P):
            raise ValueError("point not on the curve")
    radius2 = k * B * B
    basis = [[int(i == j) for j in range(k)] for i in range(k)]
    lat = RelationLattice(k, basis)
    used = []
    skip = set(skip)
    candidates = (p for p in primes(start, max_prime + 1)
                  if p not in skip and curve.is_good_prime(p))
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        exhausted = False
        while not exhausted and len(used) < prime_budget:
            batch = []
            while len(batch) < max(workers, 1) and len(used) + len(batch) < prime_budget:
                p = next(candidates, None)
                if p is None:
                    exhausted = True
                    break
                batch.append(p)
            if not batch:
                break
            if pool is None:
                datas = [prime_data(curve, points, p) for p in batch]
            else:
                datas = list(pool.map(_worker, [(curve, points, p) for p in batch]))
            for pd in datas:
                used.append(pd.p)
                lat.provenance.append(pd)
                lat.basis = lll(_intersect_with(lat.basis, pd))
                outcome = _decide(curve, points, lat, B, radius2, node_cap)
                if outcome is not None:
                    verdict, rels, note = outcome
                    return SieveResult(verdict, B, lat, used, rels, [note])
    finally:
        if pool is not None:
            pool.shutdown()
    return SieveResult("inconclusive", B, lat, used, [],
                       ["prime budget exhausted before the lattice separated short vectors"])


def _projected_basis(basis, rels):
    """Integer basis of D * (projection of the lattice orthogonal to rels), and D."""
    def project(b, ortho):
        v = [Fraction(x) for x in b]
        for w, nw in ortho:
            c = sum(x * y for x, y in zip(v, w)) / nw
            if c:
                v = [x - c * y for x, y in zip(v, w)]
        return v

    ortho = []
    for r in rels:
        w = project(r, ortho)
        if any(w):
            ortho.append((w, sum(x * x for x in w)))
    gens = [project(b, ortho) for b in basis]
    D = 1
    for v in gens:
        for x in v:
            D = D * x.denominator // math.gcd(D, x.denominator)
    rows = hnf([[int(x * D) for x in v] for v in gens])
    return (lll(rows) if rows else []), D


def _max_norm(v):
    return max(abs(x) for x in v)


def _decide(curve, points, lat, B, radius2, node_cap, verify_limit=200):
    s = _gs_cut(lat.basis, radius2)
    if s == 0:
        return ("no-relation-up-to-B", [],
                "every Gram-Schmidt norm exceeds B*sqrt(k): no short vector exists")
    short = lat.basis[:s]
    _, norms = gram_schmidt(short)
    det = 1
    for nrm in norms:
        det *= nrm
    det = math.sqrt(float(det)) if det else 0.0
    found, complete = [], False
    if _ball_count(s, radius2, det) <= node_cap:
        found, complete = short_vectors(short, radius2, box=B, node_cap=node_cap)
        if complete and not found:
            return ("no-relation-up-to-B", [],
                    "exhaustive enumeration found no vector of max-norm <= B")
    # only vectors with small coefficients are checked over Q: the cost of the
    # exact check grows with the square of the coefficients
    candidates = [v for v in short if _max_norm(v) <= B]
    candidates += sorted(found, key=lambda v: sum(x * x for x in v))[:verify_limit]
    verified = [v for v in candidates if is_relation(curve, points, v)]
    if not verified:
        return None
    rels = hnf(verified)
    proj, D = _projected_basis(lat.basis, rels)
    scaled = radius2 * D * D
    s2 = _gs_cut(proj, scaled) if proj else 0
    if s2:
        rest, done = short_vectors(proj[:s2], scaled, box=None, node_cap=node_cap)
        if not done or rest:
            return None
    return ("relation-found", rels,
            f"relations of rank {len(rels)} verified over Q; no lattice vector of max-norm "
            "<= B lies outside their span")


def marked_classes(curve_poly, marked, base_index: int = 0, model_point=None):
    """Weierstrass model of y^2 = curve_poly and the classes [P_i - P_base], i != base.

    ``model_point`` picks the rational point used for the transformation (default:
    the base point itself)."""
    from ..genus_one import weierstrass_model

    base = marked[base_index]
    E, to_curve = weierstrass_model(curve_poly, model_point if model_point is not None
                                    else (base if curve_poly.degree == 4 else None))
    img0 = to_curve(base)
    classes = [E.sub(to_curve(P), img0) for i, P in enumerate(marked) if i != base_index]
    return E, classes


def reduce_points_mod_p(sc, p: int) -> PrimeData:
    E, classes = curve_classes(sc)
    return prime_data(E, classes, p)


def curve_classes(sc, base_index: int = 0, model_point=None):
    if sc.genus != 1:
        raise ValueError("the sieve works on genus-one curves only")
    marked = [P for _, P in sc.rational_points()]
    if len(marked) < 2:
        raise ValueError("fewer than two rational marked points")
    return marked_classes(sc.defining_poly, marked, base_index, model_point)


def independence_sieve(sc, B: int = 5, prime_budget: int = 200, **kw) -> SieveResult:
    E, classes = curve_classes(sc)
    return sieve_points(E, classes, B, prime_budget, **kw)
