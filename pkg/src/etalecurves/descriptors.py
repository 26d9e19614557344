"""Text descriptors for algebras, algebra elements and subgroups."""
from __future__ import annotations

import ast
import re
from fractions import Fraction

from .etale_algebra import AlgebraElement, EtaleAlgebra
from .exact_arith import UniPoly, qnorm


class DescriptorError(ValueError):
    pass


_BINOPS = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b,
           ast.Mult: lambda a, b: a * b}


def _eval(node, var):
    if isinstance(node, ast.Expression):
        return _eval(node.body, var)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return UniPoly([node.value])
    if isinstance(node, ast.Name):
        if node.id != var:
            raise DescriptorError(f"unknown symbol {node.id!r}, expected {var!r}")
        return UniPoly.x()
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, var)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left, right = _eval(node.left, var), _eval(node.right, var)
        if type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](left, right)
        if isinstance(node.op, ast.Pow):
            if right.degree > 0 or right[0] != int(right[0]) or right[0] < 0:
                raise DescriptorError("exponents must be nonnegative integers")
            return left ** int(right[0])
        if isinstance(node.op, ast.Div):
            if right.degree > 0 or not right[0]:
                raise DescriptorError("division only by nonzero constants")
            return left.scale(Fraction(1) / Fraction(right[0]))
    raise DescriptorError("unsupported syntax in polynomial")


def parse_poly(text: str, var: str = "x") -> UniPoly:
    """Rational polynomial in one variable: '3/2*x^3 - x + 1', '(x-1)^2'."""
    src = text.strip().replace("^", "**")
    juxtaposed = re.compile(r"(\d|\)|" + re.escape(var) + r")\s*(" + re.escape(var) + r"|\()")
    while True:
        nxt = juxtaposed.sub(r"\1*\2", src)
        if nxt == src:
            break
        src = nxt
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise DescriptorError(f"cannot parse polynomial {text!r}") from exc
    p = _eval(tree, var)
    return p.map_coeffs(qnorm)


def parse_algebra(text: str) -> EtaleAlgebra:
    """'split:10', 'x^10-2', or factors separated by ';' such as 'x^2-3; x; x+1'."""
    text = text.strip()
    m = re.fullmatch(r"split\s*:\s*(\d+)", text)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise DescriptorError("split degree must be positive")
        return EtaleAlgebra.split(n)
    factors = []
    for part in text.split(";"):
        f = parse_poly(part)
        if f.degree < 1:
            raise DescriptorError(f"factor {part.strip()!r} is constant")
        factors.append(f.monic())
    try:
        return EtaleAlgebra(factors)
    except ValueError as exc:
        raise DescriptorError(str(exc)) from exc


def parse_element(text: str, algebra: EtaleAlgebra) -> AlgebraElement:
    """One polynomial in x for every factor (';'-separated), or one for all of them."""
    parts = text.split(";")
    if len(parts) == 1:
        parts = parts * len(algebra.factors)
    if len(parts) != len(algebra.factors):
        raise DescriptorError(f"expected 1 or {len(algebra.factors)} components, got {len(parts)}")
    return algebra.reduce([parse_poly(p) for p in parts])
