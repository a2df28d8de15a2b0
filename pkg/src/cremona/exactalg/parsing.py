"""Parsing of polynomial and rational-function expressions.

Accepted syntax: integers, rationals via '/', symbols x, y, z and t (the
field generator), operators + - * / ^ and parentheses, e.g. "y*z + x^2"
or "x/(y+1)".  Expressions are read with Python's ``ast`` module; nothing
is evaluated by ``eval``.
"""
import ast
from fractions import Fraction

from .fields import QQ, NumberField

SYMBOLS = {"x": 0, "y": 1, "z": 2}


class ParseError(ValueError):
    pass


# sparse polynomials in x, y, z as {(i, j, k): c}

def _padd(a, b):
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _pneg(a):
    return {m: -c for m, c in a.items()}


def _pmul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def _const(c):
    return {(0, 0, 0): c} if c else {}


class RatFunc:
    """num/den with num, den sparse polynomials in x, y, z (not reduced)."""

    def __init__(self, num, den=None):
        self.num = num
        self.den = den if den is not None else _const(1)
        if not self.den:
            raise ZeroDivisionError("zero denominator")

    def __add__(self, o):
        return RatFunc(_padd(_pmul(self.num, o.den), _pmul(o.num, self.den)), _pmul(self.den, o.den))

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        return RatFunc(_pmul(self.num, o.num), _pmul(self.den, o.den))

    def __truediv__(self, o):
        if not o.num:
            raise ZeroDivisionError("division by zero expression")
        return RatFunc(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __pow__(self, k):
        if k < 0:
            return RatFunc(self.den, self.num) ** (-k)
        out = RatFunc(_const(1))
        for _ in range(k):
            out = out * self
        return out

    def is_polynomial(self):
        return len(self.den) == 1 and (0, 0, 0) in self.den

    def as_polynomial(self):
        if not self.is_polynomial():
            raise ParseError("expected a polynomial, got a rational function")
        c = self.den[(0, 0, 0)]
        inv = Fraction(1) / c if not hasattr(c, "inverse") else c.inverse()
        return {m: v * inv for m, v in self.num.items()}


def _as_int(node):
    v = _eval(node, QQ)
    if not v.is_polynomial():
        raise ParseError("exponent must be an integer")
    p = v.as_polynomial()
    if not p:
        return 0
    if set(p) != {(0, 0, 0)}:
        raise ParseError("exponent must be a constant")
    c = Fraction(p[(0, 0, 0)])
    if c.denominator != 1:
        raise ParseError("exponent must be an integer")
    return int(c)


def _eval(node, field):
    if isinstance(node, ast.Expression):
        return _eval(node.body, field)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ParseError("unsupported constant %r" % (node.value,))
        return RatFunc(_const(field(node.value)))
    if isinstance(node, ast.Name):
        if node.id in SYMBOLS:
            m = [0, 0, 0]
            m[SYMBOLS[node.id]] = 1
            return RatFunc({tuple(m): field(1)})
        if node.id == "t":
            if field is QQ:
                raise ParseError("symbol t needs a 'field:' context")
            return RatFunc(_const(field.gen()))
        raise ParseError("unknown symbol %r" % node.id)
    if isinstance(node, ast.UnaryOp):
        v = _eval(node.operand, field)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            return _eval(node.left, field) ** _as_int(node.right)
        a, b = _eval(node.left, field), _eval(node.right, field)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            return a / b
    raise ParseError("unsupported syntax: %s" % ast.dump(node))


def parse_ratfunc(text, field=QQ):
    src = text.replace("^", "**").replace("−", "-")
    try:
        tree = ast.parse(src.strip(), mode="eval")
    except SyntaxError as e:
        raise ParseError("cannot parse %r: %s" % (text, e)) from None
    try:
        return _eval(tree, field)
    except ZeroDivisionError as e:
        raise ParseError(str(e)) from None


def parse_poly(text, field=QQ):
    """Sparse polynomial dict {(i, j, k): c} from text."""
    return parse_ratfunc(text, field).as_polynomial()


def parse_hompoly(text, field=QQ):
    from .hompoly import HomPoly
    d = parse_poly(text, field)
    degs = {sum(m) for m in d}
    if len(degs) > 1:
        raise ParseError("%r is not homogeneous" % text)
    return HomPoly(d, degree=degs.pop() if degs else 0, field=field)


def parse_field(text):
    """A field context from 'QQ', 't^4+1' or 'field: t^4+1'."""
    s = text.split(":", 1)[1] if ":" in text else text
    s = s.strip()
    if s.upper() in ("QQ", "Q", ""):
        return QQ
    src = s.replace("^", "**")
    try:
        tree = ast.parse(src.replace("t", "x"), mode="eval")
    except SyntaxError as e:
        raise ParseError("cannot parse field polynomial %r: %s" % (text, e)) from None
    p = _eval(tree, QQ).as_polynomial()
    if any(m[1] or m[2] for m in p):
        raise ParseError("field polynomial must be in t only")
    deg = max(m[0] for m in p)
    cs = [0] * (deg + 1)
    for m, c in p.items():
        c = Fraction(c)
        if c.denominator != 1:
            raise ParseError("field polynomial must have integer coefficients")
        cs[m[0]] = int(c)
    return NumberField(cs)


def split_top_level(text, sep=","):
    """Split on ``sep`` outside parentheses and brackets."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return [s.strip() for s in out]
