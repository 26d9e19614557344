"""Generic curve families carrying a marked divisor of a prescribed étale type.

Three models share one square-root decomposition m = h^2 - ell:

    X1: y^2 = ell(x)      point (alpha, h(alpha))           over Omega
    X2: y^2 = x ell(x)    point (alpha, beta h(alpha))      over Omega[s]/(s^2 - delta)
    X3: y^2 = ell(x^2)    point (beta, h(alpha))            over Omega[s]/(s^2 - delta)

with alpha = gamma (X1 alone) or alpha = delta gamma^2 and beta = s gamma, gamma
the generic element of Omega.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .etale_algebra import (
    AlgebraElement,
    EtaleAlgebra,
    QuadElement,
    QuadExtension,
    generic_element,
)
from .exact_arith import MultiPoly, UniPoly
from .sqrt_decomp import SqrtDecomposition, decompose

KINDS = ("X1", "X2", "X3")
DEFAULT_SYMBOLIC_CAP = 12


class CapacityError(RuntimeError):
    """Raised when a symbolic computation is requested above the configured cap."""


def genus_bookkeeping(kind: str, d: int):
    """(genus, degree of the marked divisor) for the model of the given kind built from d."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if kind == "X1":
        if d % 2:
            g = (d - 1) // 2
            return g, 4 * g + 4
        g = (d - 2) // 2
        return g, 4 * g + 6
    if kind == "X2":
        if d % 2:
            g = (d - 1) // 2
            return g, 8 * g + 8
        g = d // 2
        return g, 8 * g + 4
    if kind == "X3":
        g = d - 1
        return g, 4 * g + 8
    raise ValueError(f"unknown model kind {kind!r}")


def d_for_genus(kind: str, g: int) -> int:
    """The d used to reach genus g: the largest divisor degree for X1, odd d for X2."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    return {"X1": 2 * g + 2, "X2": 2 * g + 1, "X3": g + 1}[kind]


@dataclass(frozen=True)
class CurveModel:
    kind: str
    ell: UniPoly
    d: int

    @property
    def genus(self) -> int:
        return genus_bookkeeping(self.kind, self.d)[0]

    @property
    def defining_poly(self) -> UniPoly:
        if self.kind == "X1":
            return self.ell
        if self.kind == "X2":
            return self.ell * UniPoly.x()
        return self.ell.compose_square()

    def contains(self, x, y) -> bool:
        return y * y == self.defining_poly(x)


@dataclass(frozen=True)
class OmegaPoint:
    model: CurveModel
    algebra: object  # EtaleAlgebra or QuadExtension
    x: object
    y: object

    def check(self) -> bool:
        return self.model.contains(self.x, self.y)


def phi1(x, y):
    return x * x, y


def phi2(x, y):
    return x * x, x * y


def tau(x, y):
    return -x, y


def diagram_morphisms(point: OmegaPoint):
    """Images of an X3 point on the paired X1 and X2 models."""
    if point.model.kind != "X3":
        raise ValueError("diagram morphisms start from an X3 point")
    ell, d = point.model.ell, point.model.d
    x1, y1 = phi1(point.x, point.y)
    x2, y2 = phi2(point.x, point.y)
    return (OmegaPoint(CurveModel("X1", ell, d), point.algebra, x1, y1),
            OmegaPoint(CurveModel("X2", ell, d), point.algebra, x2, y2))


@dataclass
class GenericConstruction:
    kind: str
    omega: EtaleAlgebra          # after padding
    user_factors: int            # how many factors came from the caller
    d: int
    delta: Optional[AlgebraElement] = None
    symbolic: bool = True
    decomposition: Optional[SqrtDecomposition] = None
    variables: tuple = ()
    notes: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return 2 * self.d + 2

    @property
    def genus(self) -> int:
        return genus_bookkeeping(self.kind, self.d)[0]

    @property
    def divisor_degree(self) -> int:
        return genus_bookkeeping(self.kind, self.d)[1]

    @property
    def quadratic(self) -> bool:
        return self.delta is not None

    @property
    def extension(self) -> Optional[QuadExtension]:
        return QuadExtension(self.omega, self.delta) if self.quadratic else None

    # elements built from a parameter tuple (symbols or rationals) ------------
    def gamma_at(self, values) -> AlgebraElement:
        return self.omega.from_coordinates(values)

    def alpha_beta_at(self, values):
        gamma = self.gamma_at(values)
        if not self.quadratic:
            return gamma, None
        ext = self.extension
        return self.delta * (gamma * gamma), QuadElement(ext, self.omega.zero(), gamma)

    def generic_gamma(self) -> AlgebraElement:
        return generic_element(self.omega, self.variables)

    def point_from(self, alpha, beta, dec: SqrtDecomposition) -> OmegaPoint:
        model = CurveModel(self.kind, dec.ell, self.d)
        h_alpha = dec.h(alpha)
        if self.kind == "X1":
            alg = self.omega if beta is None else beta.ext
            return OmegaPoint(model, alg, alpha, h_alpha)
        ext = beta.ext
        if self.kind == "X2":
            return OmegaPoint(model, ext, ext.element(alpha), beta * h_alpha)
        return OmegaPoint(model, ext, beta, ext.element(h_alpha))

    # symbolic data ---------------------------------------------------------
    @property
    def model(self) -> CurveModel:
        self._need_symbolic()
        return CurveModel(self.kind, self.decomposition.ell, self.d)

    def _need_symbolic(self):
        if self.decomposition is None:
            raise CapacityError("symbolic parts were elided for this construction")

    def generic_point(self) -> OmegaPoint:
        self._need_symbolic()
        alpha, beta = self.alpha_beta_at(MultiPoly.variables(self.omega.n, self.variables))
        return self.point_from(alpha, beta, self.decomposition)

    def check_identities(self) -> dict:
        """Exact symbolic checks: m(alpha) = 0, m = h^2 - ell, the point identity,
        and charpoly(beta)(x) = m(x^2) for the quadratic kinds."""
        self._need_symbolic()
        dec = self.decomposition
        alpha, beta = self.alpha_beta_at(MultiPoly.variables(self.omega.n, self.variables))
        out = {
            "charpoly_vanishes": dec.m(alpha).is_zero(),
            "recompose": dec.h * dec.h - dec.ell == dec.m,
            "point_on_curve": self.point_from(alpha, beta, dec).check(),
        }
        if beta is not None:
            out["beta_charpoly"] = beta.charpoly() == dec.m.compose_square()
        return out

    # serialization ------------------------------------------------------
    def to_json(self) -> dict:
        rec = {
            "kind": self.kind,
            "omega": self.omega.to_json(),
            "user_factors": self.user_factors,
            "delta": self.delta.to_json() if self.delta is not None else None,
            "d": self.d,
            "n": self.n,
            "genus": self.genus,
            "divisor_degree": self.divisor_degree,
            "variables": list(self.variables),
            "symbolic": self.decomposition is not None,
            "point": _point_description(self.kind, self.quadratic),
            "notes": list(self.notes),
        }
        if self.decomposition is not None:
            dec = self.decomposition
            rec["m"] = [_coef_json(c) for c in dec.m.coeffs]
            rec["h"] = [_coef_json(c) for c in dec.h.coeffs]
            rec["ell"] = [_coef_json(c) for c in dec.ell.coeffs]
            rec["warnings"] = list(dec.warnings)
        return rec

    @classmethod
    def from_json(cls, rec: dict) -> "GenericConstruction":
        omega = EtaleAlgebra.from_json(rec["omega"])
        delta = None
        if rec.get("delta") is not None:
            delta = AlgebraElement.from_json(omega, rec["delta"])
        names = tuple(rec["variables"])
        gc = cls(rec["kind"], omega, rec["user_factors"], rec["d"], delta,
                 symbolic=bool(rec.get("symbolic")), variables=names,
                 notes=list(rec.get("notes", [])))
        if rec.get("m") is not None:
            nv = len(names)
            parse = lambda c: _coef_from_json(c, nv, names)  # noqa: E731
            m = UniPoly([parse(c) for c in rec["m"]])
            h = UniPoly([parse(c) for c in rec["h"]])
            ell = UniPoly([parse(c) for c in rec["ell"]])
            gc.decomposition = SqrtDecomposition(m, h, ell, rec["d"], tuple(rec.get("warnings", ())))
        if rec["n"] != gc.n or rec["genus"] != gc.genus:
            raise ValueError("construction record is internally inconsistent")
        return gc


def _point_description(kind, quadratic):
    alpha = "delta*gamma^2" if quadratic else "gamma"
    return {
        "X1": {"x": alpha, "y": "h(alpha)"},
        "X2": {"x": alpha, "y": "s*gamma*h(alpha)"},
        "X3": {"x": "s*gamma", "y": "h(alpha)"},
    }[kind] | {"gamma": "sum z_i * basis_i"}


def _coef_json(c):
    if isinstance(c, MultiPoly):
        return c.to_json()
    return MultiPoly.const(c, 0).to_json()


def _coef_from_json(data, nvars, names):
    terms = {}
    for t in data:
        exps = tuple(t["exps"]) if t["exps"] else (0,) * nvars
        terms[exps] = t["coef"]
    return MultiPoly.from_dict(nvars, terms, names)


def _resolve_symbolic(n: int, symbolic, cap: int) -> bool:
    if symbolic is None:
        return n <= cap
    if symbolic and n > cap:
        raise CapacityError(f"symbolic construction with n = {n} exceeds the cap {cap}")
    return bool(symbolic)


def _finish(gc: GenericConstruction, symbolic: bool) -> GenericConstruction:
    gc.variables = tuple(f"z{i + 1}" for i in range(gc.omega.n))
    gc.symbolic = symbolic
    if symbolic:
        alpha, _ = gc.alpha_beta_at(MultiPoly.variables(gc.omega.n, gc.variables))
        gc.decomposition = decompose(alpha.charpoly())
    else:
        gc.notes.append("symbolic m, h, ell elided; specializations use the numeric route")
    return gc


def construct_C1(omega: EtaleAlgebra, g: int, symbolic=None,
                 cap: int = DEFAULT_SYMBOLIC_CAP) -> GenericConstruction:
    """X1 family of genus g: pad to n = 4g+6 with split factors, d = 2g+2."""
    d = d_for_genus("X1", g)
    n = 2 * d + 2
    if omega.n > n:
        raise ValueError(f"algebra degree {omega.n} exceeds {n} = 4g+6")
    padded = omega.padded(n - omega.n)
    gc = GenericConstruction("X1", padded, len(omega.factors), d)
    return _finish(gc, _resolve_symbolic(n, symbolic, cap))


def _extend_delta(delta: AlgebraElement, padded: EtaleAlgebra) -> AlgebraElement:
    comps = list(delta.comps) + [(1,)] * (len(padded.factors) - len(delta.comps))
    return padded.element(comps)


def construct_quadratic(omega: EtaleAlgebra, delta: AlgebraElement, d: int, kind: str,
                        symbolic=None, cap: int = DEFAULT_SYMBOLIC_CAP) -> GenericConstruction:
    """Any of the three kinds with alpha = delta*gamma^2 at a given d (n = 2d+2).

    With kind X1 this is the partner of the X2/X3 families in the isogeny diagram.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if delta.algebra != omega:
        raise ValueError("delta must be an element of omega")
    if not delta.is_unit():
        raise ValueError("delta must be a unit")
    n = 2 * d + 2
    if omega.n > n:
        raise ValueError(f"algebra degree {omega.n} exceeds n = {n} for d = {d}")
    padded = omega.padded(n - omega.n)
    gc = GenericConstruction(kind, padded, len(omega.factors), d,
                             delta=_extend_delta(delta, padded))
    return _finish(gc, _resolve_symbolic(n, symbolic, cap))


def construct_C2C3(omega: EtaleAlgebra, delta: AlgebraElement, g: int, kind: str,
                   symbolic=None, cap: int = DEFAULT_SYMBOLIC_CAP) -> GenericConstruction:
    if kind not in ("X2", "X3"):
        raise ValueError("kind must be X2 or X3")
    return construct_quadratic(omega, delta, d_for_genus(kind, g), kind, symbolic, cap)


def construct_family(omega: EtaleAlgebra, delta: AlgebraElement, d: int, symbolic=None,
                     cap: int = DEFAULT_SYMBOLIC_CAP):
    """The (X1, X2, X3) triple sharing one (Omega, delta, d)."""
    first = construct_quadratic(omega, delta, d, "X1", symbolic, cap)
    out = [first]
    for kind in ("X2", "X3"):
        gc = GenericConstruction(kind, first.omega, first.user_factors, d, first.delta,
                                 first.symbolic, first.decomposition, first.variables,
                                 list(first.notes))
        out.append(gc)
    return tuple(out)
