"""Frobenius cycle types and a certificate that a polynomial has Galois group S_d.

Witnesses (a transitive group containing all three is the full symmetric group):
  * a d-cycle: the polynomial is irreducible, so the group is transitive;
  * a cycle type with exactly one 2-cycle and all other cycles odd: an odd power
    of that Frobenius element is a transposition;
  * a cycle of prime length q > d/2: a suitable power is a q-cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exact_arith import UniPoly, discriminant
from .ffield import InseparableModP, PrimeFieldPoly, ddf_cycle_type, primes


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, int(n ** 0.5) + 1))


def witness_kinds(cycle_type, d):
    kinds = []
    if cycle_type == [d]:
        kinds.append("full_cycle")
    if cycle_type.count(2) == 1 and all(c % 2 for c in cycle_type if c != 2):
        kinds.append("transposition")
    if any(_is_prime(c) and 2 * c > d for c in cycle_type):
        kinds.append("prime_cycle")
    return kinds


@dataclass
class CycleTypeEvidence:
    d: int
    samples: list = field(default_factory=list)   # (p, cycle type)
    skipped: list = field(default_factory=list)   # bad primes

    def to_json(self):
        return {"samples": [[p, ct] for p, ct in self.samples], "skipped": self.skipped}


@dataclass
class SimplicityCertificate:
    d: int
    evidence: CycleTypeEvidence
    verdict: str
    witnesses: dict
    zarhin: dict

    @property
    def certified(self) -> bool:
        return self.verdict == "certified-S_d"

    def to_json(self):
        return {
            "d": self.d,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "cycle_types": self.evidence.to_json(),
            "zarhin": self.zarhin,
        }


def zarhin_flags(kind, d, ell: UniPoly, certified: bool) -> dict:
    if kind == "X1":
        ok = d >= 5
        reason = "y^2 = f(x) with deg f >= 5" if ok else "degree below 5"
    elif kind == "X2":
        ok = d >= 5 and d % 2 == 1 and bool(ell[0])
        reason = ("y^2 = x f(x) with deg f odd >= 5 and f(0) != 0" if ok
                  else "needs odd degree >= 5 and ell(0) != 0")
    elif kind == "X3":
        ok, reason = False, "criterion not applicable to y^2 = ell(x^2)"
    else:
        ok, reason = False, "no model kind given"
    return {"kind": kind, "applicable": ok, "reason": reason,
            "absolutely_simple": bool(ok and certified)}


def _bad(f: UniPoly, p: int, disc) -> bool:
    if Fraction(disc).numerator % p == 0:
        return True
    return any(Fraction(c).denominator % p == 0 for c in f.coeffs) or \
        Fraction(f.lc).numerator % p == 0


def certify_galois_Sd(ell: UniPoly, prime_budget: int = 100, kind=None,
                      start: int = 3) -> SimplicityCertificate:
    d = ell.degree
    if d < 2:
        raise ValueError("degree must be at least 2")
    disc = discriminant(ell)
    if not disc:
        raise ValueError("polynomial is not separable")
    evidence = CycleTypeEvidence(d)
    found = {}
    used = 0
    for p in primes(start):
        if used >= prime_budget:
            break
        if _bad(ell, p, disc):
            evidence.skipped.append(p)
            continue
        try:
            ct = ddf_cycle_type(PrimeFieldPoly.from_rational(ell, p))
        except (InseparableModP, ValueError):
            evidence.skipped.append(p)
            continue
        used += 1
        evidence.samples.append((p, ct))
        for kind_ in witness_kinds(ct, d):
            found.setdefault(kind_, p)
        if len(found) == 3:
            break
    verdict = "certified-S_d" if len(found) == 3 else "inconclusive"
    return SimplicityCertificate(d, evidence, verdict, found,
                                 zarhin_flags(kind, d, ell, verdict == "certified-S_d"))
