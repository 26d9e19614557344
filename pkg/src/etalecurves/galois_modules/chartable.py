"""Irreducible characters modulo a prime (Dixon) and the submodule test."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import isqrt

from ..verify.ffield import pgcd, pmod, ppowmod, psub
from .characters import Character, fixed_dimension
from .groups import FiniteGroup, compose, inverse

EXACT_ORDER_CAP = 2000


class TableFailure(RuntimeError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _roots(f, p, rng):
    """Distinct roots in F_p of a monic f (list of ints, low degree first)."""
    g = pgcd(f, psub(ppowmod([0, 1], p, f, p), [0, 1], p), p)
    out = []
    stack = [g]
    while stack:
        g = stack.pop()
        if len(g) <= 1:
            continue
        if len(g) == 2:
            out.append(-g[0] % p)
            continue
        while True:
            a = rng.randrange(p)
            h = pgcd(g, psub(ppowmod([a, 1], (p - 1) // 2, g, p), [1], p), p)
            if 1 < len(h) < len(g):
                break
        q = _pdiv(g, h, p)
        stack += [h, q]
    return sorted(out)


def _pdiv(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        q[k - db] = c
        for j in range(db + 1):
            a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return q


def _charpoly(A, p):
    """Faddeev-LeVerrier over F_p (p larger than the size)."""
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) % p for j in range(n)]
              for i in range(n)]
        for i in range(n):
            AM[i][i] = (AM[i][i] + c_prev) % p
        M = AM
        tr = sum(A[i][t] * M[t][i] for i in range(n) for t in range(n)) % p
        coeffs[n - k] = -tr * pow(k, -1, p) % p
    return coeffs


def _nullspace(A, p):
    rows = [list(r) for r in A]
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc] % p
        basis.append(v)
    return basis


def _echelon(vectors, p):
    """Reduced basis of the span: returns (basis, pivots)."""
    rows = [list(v) for v in vectors]
    n = len(rows[0])
    out, pivots = [], []
    for c in range(n):
        piv = next((i for i in range(len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        v = rows.pop(piv)
        inv = pow(v[c], -1, p)
        v = [x * inv % p for x in v]
        rows = [[(x - r[c] * y) % p for x, y in zip(r, v)] for r in rows]
        out = [[(x - o[c] * y) % p for x, y in zip(o, v)] for o in out]
        out.append(v)
        pivots.append(c)
    return out, pivots


@dataclass
class CharacterTable:
    group: FiniteGroup
    p: int
    rows: list            # rows[i][j] = chi_i(g_j) mod p
    degrees: list
    notes: list = field(default_factory=list)

    def multiplicity(self, chi: Character, i: int) -> int:
        """<chi, chi_i> for a rational character chi, lifted from F_p."""
        G, p = self.group, self.p
        total = 0
        for j, size in enumerate(G.class_sizes):
            v = chi.values[j]
            vp = v.numerator * pow(v.denominator, -1, p) if hasattr(v, "denominator") else v
            total += size * vp * self.rows[i][G.inverse_class(j)]
        m = total * pow(G.order, -1, p) % p
        return m - p if m > p // 2 else m

    def decompose(self, chi: Character) -> list:
        if abs(chi.dimension) * 2 >= self.p:
            raise TableFailure("character too large for the working prime")
        mults = [self.multiplicity(chi, i) for i in range(len(self.rows))]
        if sum(m * d for m, d in zip(mults, self.degrees)) != chi.dimension:
            raise TableFailure("decomposition does not reproduce the dimension")
        return mults


def _class_matrices(G: FiniteGroup):
    reps = G.representatives
    r = len(reps)
    mats = []
    for j, cls in enumerate(G.classes):
        M = [[0] * r for _ in range(r)]
        for l, z in enumerate(reps):
            for x in cls:
                M[G.class_of(compose(inverse(x), z))][l] += 1
        mats.append(M)
    return mats


def _prime_for(G: FiniteGroup, floor: int):
    e = G.exponent()
    lo = max(2 * isqrt(G.order) + 3, floor)
    k = lo // e + 1
    while not _is_prime(k * e + 1):
        k += 1
    return k * e + 1


def character_table(G: FiniteGroup, floor: int = 10_007, seed: int = 0) -> CharacterTable:
    """Dixon's algorithm: common eigenvectors of the class matrices over F_p."""
    if G.order > EXACT_ORDER_CAP:
        raise TableFailure(f"group order {G.order} exceeds {EXACT_ORDER_CAP}")
    p = _prime_for(G, floor)
    rng = random.Random(seed)
    mats = _class_matrices(G)
    r = len(mats)
    if r == 1:
        return CharacterTable(G, p, [[1]], [1])
    weights = [rng.randrange(1, p) for _ in range(r)]
    combo = [[sum(weights[j] * mats[j][a][b] for j in range(1, r)) % p
              for b in range(r)] for a in range(r)]
    spaces = [[[int(i == k) for i in range(r)] for k in range(r)]]
    for A in [combo] + mats[1:]:
        if all(len(S) == 1 for S in spaces):
            break
        nxt = []
        for S in spaces:
            if len(S) == 1:
                nxt.append(S)
                continue
            basis, pivots = _echelon(S, p)
            s = len(basis)
            images = [[sum(A[a][b] * v[b] for b in range(r)) % p for a in range(r)]
                      for v in basis]
            R = [[images[i][pivots[a]] for i in range(s)] for a in range(s)]
            found = 0
            for lam in _roots(_charpoly(R, p), p, rng):
                shifted = [[(R[a][b] - (lam if a == b else 0)) % p for b in range(s)]
                           for a in range(s)]
                vecs = [[sum(c * basis[i][k] for i, c in enumerate(coef)) % p
                         for k in range(r)] for coef in _nullspace(shifted, p)]
                if vecs:
                    nxt.append(vecs)
                    found += len(vecs)
            if found != s:
                raise TableFailure("class matrix not diagonalizable over the working prime")
        spaces = nxt
    if not all(len(S) == 1 for S in spaces) or len(spaces) != r:
        raise TableFailure("eigenspaces did not separate")
    sizes = G.class_sizes
    inv_cls = [G.inverse_class(j) for j in range(r)]
    rows, degrees = [], []
    for (w,) in spaces:
        if w[0] == 0:
            raise TableFailure("eigenvector vanishes at the identity")
        w0 = pow(w[0], -1, p)
        w = [x * w0 % p for x in w]
        s = sum(w[l] * w[inv_cls[l]] * pow(sizes[l], -1, p) for l in range(r)) % p
        target = G.order * pow(s, -1, p) % p
        deg = next((d for d in range(1, isqrt(G.order) + 1) if d * d % p == target), None)
        if deg is None:
            raise TableFailure("no admissible degree")
        rows.append([w[l] * deg * pow(sizes[l], -1, p) % p for l in range(r)])
        degrees.append(deg)
    order = sorted(range(r), key=lambda i: (degrees[i], rows[i]))
    rows = [rows[i] for i in order]
    degrees = [degrees[i] for i in order]
    if sum(d * d for d in degrees) != G.order:
        raise TableFailure("degrees do not sum to the group order")
    for a in range(r):
        for b in range(r):
            ip = sum(sizes[j] * rows[a][j] * rows[b][inv_cls[j]] for j in range(r)) % p
            if ip != (G.order % p if a == b else 0):
                raise TableFailure("orthogonality relations fail")
    return CharacterTable(G, p, rows, degrees)


_TABLES: dict = {}


def cached_table(G: FiniteGroup) -> CharacterTable:
    key = id(G)
    hit = _TABLES.get(key)
    if hit is None or hit[0] is not G:
        hit = (G, character_table(G))
        _TABLES[key] = hit
    return hit[1]


@dataclass
class SubmoduleVerdict:
    holds: bool
    exact: bool
    multiplicities: list | None = None
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"holds": self.holds, "exact": self.exact,
                "multiplicities": self.multiplicities, "notes": self.notes}


def _cyclic_subgroups(G):
    seen, out = set(), []
    for g in G.representatives:
        H = FiniteGroup([g], G.degree, G.bound)
        key = frozenset(H.elements)
        if key not in seen:
            seen.add(key)
            out.append(H)
    return out


def submodule_test(V: Character, W: Character, allow_partial: bool = True) -> SubmoduleVerdict:
    """Does the module with character V embed in the one with character W?"""
    if V.group is not W.group:
        raise ValueError("characters live on different groups")
    G = V.group
    if G.order <= EXACT_ORDER_CAP:
        table = cached_table(G)
        mv, mw = table.decompose(V), table.decompose(W)
        if any(m < 0 for m in mv + mw):
            raise ValueError("virtual character given where a module was expected")
        return SubmoduleVerdict(all(a <= b for a, b in zip(mv, mw)), True,
                                [(a, b) for a, b in zip(mv, mw)])
    if not allow_partial:
        raise TableFailure("group too large for the exact test")
    notes = ["partial: only fixed dimensions under cyclic subgroups compared"]
    if V.dimension > W.dimension:
        return SubmoduleVerdict(False, False, None, notes)
    for H in _cyclic_subgroups(G):
        if fixed_dimension(V, H) > fixed_dimension(W, H):
            return SubmoduleVerdict(False, False, None, notes)
    return SubmoduleVerdict(True, False, None, notes)
