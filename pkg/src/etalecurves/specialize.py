"""Rational specializations of a generic construction.

A parameter tuple t replaces the generic coordinates z.  The resulting curve is
kept only if it passes the admissibility checks (separability, exact degree
and the nonvanishing conditions of the quadratic kinds).
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

from .constructions import CurveModel, GenericConstruction, OmegaPoint, genus_bookkeeping
from .etale_algebra import AlgebraElement, EtaleAlgebra, QuadExtension, rational_sqrt
from .exact_arith import UniPoly, discriminant, qnorm, rational_to_str, to_rational
from .genus_one import NoRationalPoint, j_from_invariants, j_from_weierstrass
from .sqrt_decomp import SqrtDecomposition, decompose


class InadmissibleSpecialization(ValueError):
    def __init__(self, check: str, detail: str):
        super().__init__(f"{check}: {detail}")
        self.check = check
        self.detail = detail


class SamplingExhausted(RuntimeError):
    pass


@dataclass
class SpecializedCurve:
    kind: str
    d: int
    t: tuple
    omega: EtaleAlgebra
    delta: Optional[AlgebraElement]
    decomposition: SqrtDecomposition
    admissibility: dict = field(default_factory=dict)

    @property
    def m(self) -> UniPoly:
        return self.decomposition.m

    @property
    def h(self) -> UniPoly:
        return self.decomposition.h

    @property
    def ell(self) -> UniPoly:
        return self.decomposition.ell

    @property
    def model(self) -> CurveModel:
        return CurveModel(self.kind, self.ell, self.d)

    @property
    def genus(self) -> int:
        return genus_bookkeeping(self.kind, self.d)[0]

    @property
    def defining_poly(self) -> UniPoly:
        return self.model.defining_poly

    @property
    def extension(self) -> Optional[QuadExtension]:
        return QuadExtension(self.omega, self.delta) if self.delta is not None else None

    def gamma(self) -> AlgebraElement:
        return self.omega.from_coordinates(self.t)

    def alpha_beta(self):
        gamma = self.gamma()
        if self.delta is None:
            return gamma, None
        ext = self.extension
        return self.delta * (gamma * gamma), ext.element(0, gamma)

    @property
    def omega_point(self) -> OmegaPoint:
        alpha, beta = self.alpha_beta()
        h_alpha = self.h(alpha)
        if self.kind == "X1":
            return OmegaPoint(self.model, self.omega, alpha, h_alpha)
        ext = beta.ext
        if self.kind == "X2":
            return OmegaPoint(self.model, ext, ext.element(alpha), beta * h_alpha)
        return OmegaPoint(self.model, ext, beta, ext.element(h_alpha))

    def rational_points(self):
        """Marked points that are rational: one per degree-one factor (X1), or two per
        degree-one factor whose delta component is a rational square (X2, X3).

        Returns a list of (label, (x, y)); labels are (factor index, sign)."""
        alpha, beta = self.alpha_beta()
        h_alpha = self.h(alpha)
        out = []
        for i, k in enumerate(self.omega.degrees):
            if k != 1:
                continue
            u = alpha.comps[i][0]
            hu = h_alpha.comps[i][0]
            if self.kind == "X1":
                out.append(((i, 0), (u, hu)))
                continue
            c = rational_sqrt(self.delta.comps[i][0])
            if c is None:
                continue
            t = c * beta.b.comps[i][0]
            for sign in (1, -1):
                if self.kind == "X2":
                    out.append(((i, sign), (u, qnorm(sign * t * hu))))
                else:
                    out.append(((i, sign), (qnorm(sign * t), hu)))
        return out

    def check_identities(self) -> dict:
        alpha, beta = self.alpha_beta()
        out = {
            "charpoly": alpha.charpoly() == self.m,
            "charpoly_vanishes": self.m(alpha).is_zero(),
            "recompose": self.h * self.h - self.ell == self.m,
            "point_on_curve": self.omega_point.check(),
        }
        if beta is not None:
            out["beta_charpoly"] = beta.charpoly() == self.m.compose_square()
        return out

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "d": self.d,
            "genus": self.genus,
            "t": [rational_to_str(v) for v in self.t],
            "omega": self.omega.to_json(),
            "delta": self.delta.to_json() if self.delta is not None else None,
            "m": self.m.to_json(),
            "h": self.h.to_json(),
            "ell": self.ell.to_json(),
            "defining_poly": self.defining_poly.to_json(),
            "admissibility": dict(self.admissibility),
            "rational_points": [[list(lbl), [rational_to_str(c) for c in P]]
                                for lbl, P in self.rational_points()],
        }

    @classmethod
    def from_json(cls, rec: dict) -> "SpecializedCurve":
        """Rebuild from a record, recomputing everything from (Omega, delta, t)."""
        omega = EtaleAlgebra.from_json(rec["omega"])
        delta = AlgebraElement.from_json(omega, rec["delta"]) if rec.get("delta") else None
        t = tuple(to_rational(v) for v in rec["t"])
        sc = _specialize_numeric(rec["kind"], rec["d"], omega, delta, t)
        if sc.ell != UniPoly.from_json(rec["ell"]) or sc.m != UniPoly.from_json(rec["m"]):
            raise ValueError("record does not match the recomputed specialization")
        return sc


def _admissibility(kind, d, dec: SqrtDecomposition) -> dict:
    m, ell = dec.m, dec.ell
    record = {}

    def need(name, value, what):
        if not value:
            raise InadmissibleSpecialization(name, what)
        record[name] = rational_to_str(value)

    need("disc_m", discriminant(m), "m_t has a repeated root")
    need("deg_ell", ell[d], f"ell_t has degree below {d}")
    need("disc_ell", discriminant(ell) if ell.degree >= 1 else 1, "ell_t has a repeated root")
    if kind in ("X2", "X3"):
        need("m_at_zero", m[0], "m_t(0) = 0")
    if kind == "X2":
        need("ell_at_zero", ell[0], "ell_t(0) = 0")
    if kind == "X3":
        need("disc_ell_x2", discriminant(ell.compose_square()), "ell_t(x^2) has a repeated root")
    return record


def _specialize_numeric(kind, d, omega, delta, t) -> SpecializedCurve:
    gamma = omega.from_coordinates(t)
    alpha = gamma if delta is None else delta * (gamma * gamma)
    dec = decompose(alpha.charpoly())
    adm = _admissibility(kind, d, dec)
    return SpecializedCurve(kind, d, tuple(t), omega, delta, dec, adm)


def specialize_at(gc: GenericConstruction, t, route: str = "auto") -> SpecializedCurve:
    """Specialize at the rational tuple ``t`` (length n).

    ``route`` picks substitution into the symbolic m, h, ell ("symbolic"), direct
    recomputation from alpha_t ("numeric"), or the former when available ("auto").
    """
    t = tuple(to_rational(v) for v in t)
    if len(t) != gc.omega.n:
        raise ValueError(f"expected {gc.omega.n} parameters, got {len(t)}")
    if route == "auto":
        route = "symbolic" if gc.decomposition is not None else "numeric"
    if route == "numeric":
        return _specialize_numeric(gc.kind, gc.d, gc.omega, gc.delta, t)
    if route != "symbolic":
        raise ValueError(f"unknown route {route!r}")
    dec = gc.decomposition
    if dec is None:
        raise ValueError("construction has no symbolic parts")
    sub = lambda p: UniPoly([c.substitute(t) if hasattr(c, "substitute") else c  # noqa: E731
                             for c in p.coeffs])
    m, h, ell = sub(dec.m), sub(dec.h), sub(dec.ell)
    sdec = SqrtDecomposition(m, h, ell, gc.d)
    adm = _admissibility(gc.kind, gc.d, sdec)
    return SpecializedCurve(gc.kind, gc.d, t, gc.omega, gc.delta, sdec, adm)


def _try(args):
    gc, t = args
    try:
        return specialize_at(gc, t)
    except InadmissibleSpecialization:
        return None


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("ETALECURVES_THREADS", "1")))
    except ValueError:
        return 1


def sample_specializations(gc: GenericConstruction, count: int, height_bound: int, seed: int,
                           budget: Optional[int] = None, workers: Optional[int] = None):
    """Seeded sampling of integer tuples with |t_i| <= height_bound.

    Candidates are drawn in a fixed order from ``random.Random(seed)`` and the first
    ``count`` admissible ones with pairwise distinct ell_t are kept, so the output
    does not depend on ``workers``.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = random.Random(seed)
    n = gc.omega.n
    budget = budget if budget is not None else 200 * count + 1000
    space = (2 * height_bound + 1) ** n
    workers = workers or default_workers()
    seen, models, out = set(), set(), []
    drawn = 0
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while len(out) < count and drawn < budget and len(seen) < space:
            batch = []
            while len(batch) < max(4 * (count - len(out)), 8) and drawn < budget \
                    and len(seen) < space:
                t = tuple(rng.randint(-height_bound, height_bound) for _ in range(n))
                drawn += 1
                if t in seen:
                    continue
                seen.add(t)
                batch.append(t)
            if pool is None:
                results = [_try((gc, t)) for t in batch]
            else:
                results = list(pool.map(_try, [(gc, t) for t in batch]))
            for sc in results:
                if sc is None:
                    continue
                key = sc.ell.coeffs
                if key in models:
                    continue
                models.add(key)
                out.append(sc)
                if len(out) == count:
                    break
    finally:
        if pool is not None:
            pool.shutdown()
    if len(out) < count:
        raise SamplingExhausted(
            f"found {len(out)} admissible specializations out of {count} requested "
            f"after {drawn} draws")
    return out


def _find_point(q: UniPoly, search_height: int = 30):
    """A rational point on y^2 = q(x), with small height numerator and denominator."""
    for den in range(1, search_height + 1):
        for num in sorted(range(-search_height, search_height + 1), key=abs):
            x = Fraction(num, den)
            if x.denominator != den:
                continue
            v = Fraction(q(x))
            if v < 0:
                continue
            a, b = isqrt(v.numerator), isqrt(v.denominator)
            if a * a == v.numerator and b * b == v.denominator:
                return (qnorm(x), qnorm(Fraction(a, b)))
    return None


def base_point(sc: SpecializedCurve):
    """A rational point used to reach a Weierstrass model (None for cubic models)."""
    q = sc.defining_poly
    if q.degree == 3:
        return None
    pts = sc.rational_points()
    if pts:
        return pts[0][1]
    if q[0] == 0:
        return (0, 0)
    P = _find_point(q)
    if P is None:
        raise NoRationalPoint("no rational point found for the Weierstrass transformation")
    return P


def j_invariant(sc: SpecializedCurve, route: str = "weierstrass"):
    if sc.genus != 1:
        raise ValueError("j-invariant needs a genus-one curve")
    q = sc.defining_poly
    if route == "invariants":
        return j_from_invariants(q)
    return j_from_weierstrass(q, base_point(sc))


def sample_family(triple, count: int, height_bound: int, seed: int,
                  budget: Optional[int] = None):
    """Seeded sampling of parameters admissible for every member of an (X1, X2, X3) triple."""
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = random.Random(seed)
    n = triple[0].omega.n
    budget = budget if budget is not None else 200 * count + 1000
    seen, models, out = set(), set(), []
    drawn = 0
    while len(out) < count and drawn < budget:
        t = tuple(rng.randint(-height_bound, height_bound) for _ in range(n))
        drawn += 1
        if t in seen:
            continue
        seen.add(t)
        members = [_try((gc, t)) for gc in triple]
        if any(sc is None for sc in members):
            continue
        key = members[-1].ell.coeffs
        if key in models:
            continue
        models.add(key)
        out.append(tuple(members))
    if len(out) < count:
        raise SamplingExhausted(
            f"found {len(out)} admissible parameter tuples out of {count} requested "
            f"after {drawn} draws")
    return out
