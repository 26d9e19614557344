from .rational import ModInt, qdiv, qnorm, rational_to_str, to_rational, is_scalar
from .multipoly import MultiPoly
from .unipoly import (
    UniPoly,
    charpoly_berkowitz,
    determinant,
    discriminant,
    is_separable,
    poly_gcd,
    resultant,
    sylvester_matrix,
    xgcd,
)


def substitute(p, assignment):
    """Evaluate a multivariate polynomial at a rational point (arity checked)."""
    if isinstance(p, MultiPoly):
        return p.substitute(assignment)
    return p


__all__ = [
    "ModInt", "MultiPoly", "UniPoly", "charpoly_berkowitz", "determinant",
    "discriminant", "is_separable", "is_scalar", "poly_gcd", "qdiv", "qnorm",
    "rational_to_str", "resultant", "substitute", "sylvester_matrix",
    "to_rational", "xgcd",
]
