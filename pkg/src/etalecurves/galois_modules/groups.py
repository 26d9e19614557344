"""Finite permutation groups small enough to enumerate.

A permutation of {0..N-1} is a tuple g with g[i] the image of i; products
compose right to left, (g*h)(i) = g(h(i)).
"""
from __future__ import annotations

import re
from math import gcd

DEFAULT_BOUND = 10_000


def compose(g, h):
    return tuple(g[i] for i in h)


def inverse(g):
    out = [0] * len(g)
    for i, j in enumerate(g):
        out[j] = i
    return tuple(out)


def identity(n):
    return tuple(range(n))


def element_order(g):
    seen = [False] * len(g)
    o = 1
    for i in range(len(g)):
        if not seen[i]:
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = g[j]
                length += 1
            o = o * length // gcd(o, length)
    return o


def cycle_type(g):
    seen = [False] * len(g)
    out = []
    for i in range(len(g)):
        if not seen[i]:
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = g[j]
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def from_cycles(cycles, n):
    """Permutation from cycles given with 1-based points, e.g. [(1, 2, 3), (4, 5)]."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"point out of range 1..{n}")
            img[a - 1] = b - 1
    return tuple(img)


def parse_cycles(text: str, n: int):
    """Parse '(1,2,3)(4,5)' into a permutation of degree n."""
    text = text.strip()
    if text in ("", "()", "e", "1"):
        return identity(n)
    cycles = []
    for body in re.findall(r"\(([^()]*)\)", text):
        pts = [int(x) for x in re.split(r"[,\s]+", body.strip()) if x]
        if pts:
            cycles.append(tuple(pts))
    if not cycles:
        raise ValueError(f"cannot parse permutation {text!r}")
    return from_cycles(cycles, n)


class GroupTooLarge(RuntimeError):
    pass


class FiniteGroup:
    def __init__(self, gens, degree: int, bound: int = DEFAULT_BOUND, name: str = ""):
        self.degree = degree
        self.gens = [tuple(g) for g in gens if tuple(g) != identity(degree)]
        for g in self.gens:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError("generator is not a permutation of the right degree")
        self.bound = bound
        self.name = name
        self._elements = None
        self._classes = None

    # elements ----------------------------------------------------------------
    @property
    def elements(self):
        if self._elements is None:
            e = identity(self.degree)
            seen = {e: 0}
            order = [e]
            i = 0
            while i < len(order):
                g = order[i]
                for s in self.gens:
                    h = compose(g, s)
                    if h not in seen:
                        seen[h] = len(order)
                        order.append(h)
                        if len(order) > self.bound:
                            raise GroupTooLarge(f"group order exceeds {self.bound}")
                i += 1
            self._elements = order
            self._index = seen
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    def __contains__(self, g):
        self.elements
        return tuple(g) in self._index

    def is_subgroup_of(self, other: "FiniteGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.gens)

    def subgroup(self, gens, name: str = "") -> "FiniteGroup":
        H = FiniteGroup(gens, self.degree, self.bound, name)
        if not H.is_subgroup_of(self):
            raise ValueError("generators do not lie in the group")
        return H

    def trivial_subgroup(self) -> "FiniteGroup":
        return FiniteGroup([], self.degree, self.bound, "1")

    def stabilizer(self, point: int) -> "FiniteGroup":
        """Point stabilizer (0-based point), by Schreier generators."""
        orbit = {point: identity(self.degree)}
        queue = [point]
        while queue:
            a = queue.pop()
            for s in self.gens:
                b = s[a]
                if b not in orbit:
                    orbit[b] = compose(s, orbit[a])
                    queue.append(b)
        gens = set()
        for a, u in orbit.items():
            for s in self.gens:
                g = compose(inverse(orbit[s[a]]), compose(s, u))
                if g != identity(self.degree):
                    gens.add(g)
        return FiniteGroup(sorted(gens), self.degree, self.bound, f"Stab({point + 1})")

    def set_stabilizer(self, points) -> "FiniteGroup":
        pts = frozenset(points)
        gens = [g for g in self.elements if frozenset(g[i] for i in pts) == pts]
        return FiniteGroup(gens, self.degree, self.bound, f"Stab({sorted(p + 1 for p in pts)})")

    # conjugacy classes -------------------------------------------------------
    @property
    def classes(self):
        if self._classes is None:
            class_of = {}
            classes = []
            invgens = [inverse(s) for s in self.gens]
            for g in self.elements:
                if g in class_of:
                    continue
                idx = len(classes)
                cls = [g]
                class_of[g] = idx
                i = 0
                while i < len(cls):
                    x = cls[i]
                    for s, si in zip(self.gens, invgens):
                        y = compose(s, compose(x, si))
                        if y not in class_of:
                            class_of[y] = idx
                            cls.append(y)
                    i += 1
                classes.append(cls)
            self._classes = classes
            self._class_of = class_of
        return self._classes

    def class_of(self, g) -> int:
        self.classes
        return self._class_of[tuple(g)]

    @property
    def class_sizes(self):
        return [len(c) for c in self.classes]

    @property
    def representatives(self):
        return [c[0] for c in self.classes]

    def centralizer_order(self, j: int) -> int:
        return self.order // len(self.classes[j])

    def inverse_class(self, j: int) -> int:
        return self.class_of(inverse(self.classes[j][0]))

    def exponent(self) -> int:
        e = 1
        for g in self.representatives:
            o = element_order(g)
            e = e * o // gcd(e, o)
        return e

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, degree={self.degree})"


# named groups -----------------------------------------------------------------
def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup([], 1, name="S1")
    gens = [from_cycles([(1, 2)], n), from_cycles([tuple(range(1, n + 1))], n)]
    return FiniteGroup(gens, n, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return FiniteGroup([], n, name=f"A{n}")
    gens = [from_cycles([(1, 2, i)], n) for i in range(3, n + 1)]
    return FiniteGroup(gens, n, name=f"A{n}")


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([from_cycles([tuple(range(1, n + 1))], n)] if n > 1 else [], n,
                       name=f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    refl = from_cycles([(i, n + 1 - i) for i in range(1, n // 2 + 1)], n)
    return FiniteGroup([from_cycles([tuple(range(1, n + 1))], n), refl], n, name=f"D{n}")


def wreath_mu2(k: int) -> FiniteGroup:
    """mu_2 wr S_k on 2k points: point i and i+k form the i-th pair (1-based: i, i+k)."""
    n = 2 * k
    gens = [from_cycles([(1, k + 1)], n)]
    if k > 1:
        gens.append(from_cycles([(1, 2), (k + 1, k + 2)], n))
        gens.append(from_cycles([tuple(range(1, k + 1)), tuple(range(k + 1, 2 * k + 1))], n))
    return FiniteGroup(gens, n, name=f"mu2wrS{k}")


def parse_group(text: str) -> FiniteGroup:
    """'S4', 'A5', 'C3', 'D4', 'W4' (mu_2 wr S_4), or 'n: (1,2)(3,4); (1,2,3)'."""
    text = text.strip()
    m = re.fullmatch(r"([SACDW])(\d+)", text)
    if m:
        kind, n = m.group(1), int(m.group(2))
        return {"S": symmetric, "A": alternating, "C": cyclic, "D": dihedral,
                "W": wreath_mu2}[kind](n)
    m = re.fullmatch(r"(?:mu2\s*wr\s*S|mu_2\s*wr\s*S_?)(\d+)", text)
    if m:
        return wreath_mu2(int(m.group(1)))
    m = re.fullmatch(r"(\d+)\s*:(.*)", text, re.S)
    if m:
        n = int(m.group(1))
        gens = [parse_cycles(part, n) for part in m.group(2).split(";") if part.strip()]
        return FiniteGroup(gens, n, name=text)
    raise ValueError(f"cannot parse group {text!r}")
