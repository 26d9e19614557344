"""Integer lattices given by row bases: Hermite form, kernels, intersections, LLL
and short-vector enumeration.  Everything is exact (ints and Fractions)."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt


def hnf(rows):
    """Row Hermite normal form: nonzero rows, positive pivots, reduced above pivots."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            best = None
            for i in range(r, m):
                if A[i][c] and (best is None or abs(A[i][c]) < abs(A[best][c])):
                    best = i
            if best is None:
                break
            A[r], A[best] = A[best], A[r]
            piv = A[r]
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // piv[c]
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], piv)]
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if r < m and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-a for a in A[r]]
            piv = A[r]
            for i in range(r):
                q = A[i][c] // piv[c]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], piv)]
            r += 1
    return [row for row in A[:r] if any(row)]


def kernel_modulo(images, relations):
    """Basis of {y in Z^k : y . images lies in the row span of ``relations``}.

    ``images`` is k x r, ``relations`` is a full-rank basis of a lattice in Z^r.
    """
    k = len(images)
    r = len(relations[0]) if relations else (len(images[0]) if images else 0)
    stacked = []
    for i, row in enumerate(images):
        e = [0] * k
        e[i] = 1
        stacked.append(list(row) + e)
    for row in relations:
        stacked.append(list(row) + [0] * k)
    H = hnf(stacked)
    return [row[r:] for row in H if not any(row[:r])]


def intersect(B1, B2):
    """Basis of the intersection of two lattices in Z^k (stacked-basis kernel)."""
    k = len(B1[0])
    stacked = [list(b) + list(b) for b in B1] + [list(b) + [0] * k for b in B2]
    H = hnf(stacked)
    return [row[k:] for row in H if not any(row[:k])]


def determinant_abs(basis):
    H = hnf(basis)
    if len(H) != len(H[0]):
        return 0
    d = 1
    for i, row in enumerate(H):
        d *= row[i]
    return abs(d)


def contains(basis, v) -> bool:
    return hnf(list(basis)) == hnf(list(basis) + [list(v)])


def smith_invariants(matrix):
    """Invariant factors (>1) of Z^r / rowspan(matrix), largest first, for a full-rank square matrix."""
    A = [list(r) for r in matrix]
    n = len(A)
    diag = []
    for t in range(n):
        while True:
            # move the smallest nonzero entry of the trailing block to (t, t)
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return None
            i, j = best
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
            p = A[t][t]
            done = True
            for i in range(t + 1, n):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if not done:
                continue
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
    return sorted((d for d in diag if d != 1), reverse=True)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def gram_schmidt(basis):
    """(mu, squared norms of the Gram-Schmidt vectors), as Fractions."""
    n = len(basis)
    bstar, norms = [], []
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        v = [Fraction(x) for x in basis[i]]
        for j in range(i):
            mu[i][j] = _dot(basis[i], bstar[j]) / norms[j] if norms[j] else Fraction(0)
            v = [a - mu[i][j] * b for a, b in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(_dot(v, v))
    return mu, norms


def lll(basis, delta=Fraction(3, 4)):
    """LLL-reduce a basis of linearly independent integer rows (exact arithmetic)."""
    b = [list(r) for r in basis]
    n = len(b)
    if n <= 1:
        return b
    mu, norms = gram_schmidt(b)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                for i in range(j + 1):
                    mu[k][i] -= q * (mu[j][i] if i < j else 1)
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gram_schmidt(b)
            k = max(k - 1, 1)
    return b


def short_vectors(basis, radius2, box=None, node_cap=200_000):
    """All nonzero lattice vectors v with |v|^2 <= radius2 (and max|v_i| <= box if given),
    one per +-pair.  Returns (vectors, complete); ``complete`` is False if the node cap hit."""
    s = len(basis)
    if s == 0:
        return [], True
    mu, norms = gram_schmidt(basis)
    R2 = Fraction(radius2)
    x = [0] * s
    found = []
    nodes = 0
    dim = len(basis[0])

    def rec(i, partial):
        nonlocal nodes
        if nodes > node_cap:
            return
        center = -sum((mu[j][i] * x[j] for j in range(i + 1, s)), Fraction(0))
        slack = R2 - partial
        if slack < 0 or norms[i] == 0:
            return
        T = slack / norms[i]
        r = isqrt(T.numerator // T.denominator + 1) + 1
        lo = int(center) - r - 1
        hi = int(center) + r + 1
        for xi in range(lo, hi + 1):
            nodes += 1
            t = (xi - center) ** 2 * norms[i]
            if t > slack:
                continue
            x[i] = xi
            if i == 0:
                if any(x):
                    v = [sum(x[j] * basis[j][c] for j in range(s)) for c in range(dim)]
                    first = next(a for a in v if a)
                    if first > 0 and (box is None or max(abs(a) for a in v) <= box):
                        found.append(v)
            else:
                rec(i - 1, partial + t)
        x[i] = 0

    rec(s - 1, Fraction(0))
    return found, nodes <= node_cap
