"""Point-level and dimension-level comparison of an (X1, X2, X3) triple."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..constructions import phi1, phi2, tau
from .sieve import independence_sieve


@dataclass
class DecompositionReport:
    images_ok: bool
    onto_x1: bool
    onto_x2: bool
    tau_ok: bool
    dimensions: dict
    verdicts: dict
    comparison: Optional[bool]
    notes: list = field(default_factory=list)

    def to_json(self):
        return {"images_ok": self.images_ok, "onto_x1": self.onto_x1,
                "onto_x2": self.onto_x2, "tau_ok": self.tau_ok,
                "dimensions": self.dimensions, "verdicts": self.verdicts,
                "dimension_sum_holds": self.comparison, "notes": self.notes}


def _member_dimension(sc, B, prime_budget, run_sieve, **kw):
    if sc.genus == 0:
        return 0, "genus-0"
    if sc.genus > 1:
        return None, "unsupported-genus"
    if not run_sieve:
        return None, "skipped"
    try:
        res = independence_sieve(sc, B, prime_budget, **kw)
    except ValueError as exc:
        return None, f"unsupported: {exc}"
    return res.dimension_estimate, res.verdict


def isogeny_decomposition_check(triple, B: int = 5, prime_budget: int = 200,
                                run_sieve: bool = True, **kw) -> DecompositionReport:
    """triple = specialized (X1, X2, X3) curves built from one (Omega, delta, t)."""
    x1, x2, x3 = triple
    if (x1.kind, x2.kind, x3.kind) != ("X1", "X2", "X3"):
        raise ValueError("expected curves of kinds X1, X2, X3 in that order")
    if not (x1.t == x2.t == x3.t and x1.d == x2.d == x3.d):
        raise ValueError("the three curves must share the specialization point and d")

    P = dict(x1.rational_points())
    Q = dict(x2.rational_points())
    R = dict(x3.rational_points())
    images_ok, tau_ok = True, True
    hit1, hit2 = set(), set()
    for (i, sign), pt in R.items():
        a, b = phi1(*pt), phi2(*pt)
        if P.get((i, 0)) != a or Q.get((i, sign)) != b:
            images_ok = False
        if phi1(*tau(*pt)) != a:
            tau_ok = False
        if not (x1.model.contains(*a) and x2.model.contains(*b)):
            images_ok = False
        hit1.add(a)
        hit2.add(b)
    onto1 = set(P.values()) <= hit1
    onto2 = set(Q.values()) <= hit2

    dims, verdicts = {}, {}
    for sc in triple:
        dims[sc.kind], verdicts[sc.kind] = _member_dimension(sc, B, prime_budget, run_sieve, **kw)
    notes = []
    if all(v is not None for v in dims.values()):
        comparison = dims["X3"] == dims["X2"] + dims["X1"]
    else:
        comparison = None
        notes.append("dimension comparison skipped: not every member is conclusive")
    return DecompositionReport(images_ok and bool(R), onto1, onto2, tau_ok, dims, verdicts,
                               comparison, notes)
