"""Exact scalars: the rationals and simple extensions Q[t]/(m(t)).

Rationals are plain ``int`` (when integral) or ``fractions.Fraction``.
Extension elements are :class:`NFElement` values tied to a
:class:`NumberField` context.  Everything is exact.
"""
from fractions import Fraction
from numbers import Rational


class FieldMismatchError(ValueError):
    pass


def _canon_q(c):
    """Canonical rational: int when integral, Fraction otherwise."""
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class RationalField:
    """The field Q.  Scalars are int or Fraction."""

    degree = 1
    name = "QQ"

    def __call__(self, c):
        if isinstance(c, NFElement):
            raise FieldMismatchError("extension element in rational context")
        return _canon_q(c)

    def is_rational(self):
        return True

    def zero(self):
        return 0

    def one(self):
        return 1

    def gen(self):
        raise ValueError("Q has no generator")

    def contains(self, c):
        return isinstance(c, (int, Fraction))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def _strip(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


class NumberField:
    """Q[t]/(m(t)) for a monic integer polynomial m.

    ``modulus`` lists coefficients low to high, e.g. t^4+1 is [1,0,0,0,1].
    Irreducibility is the caller's responsibility; it is not checked.
    """

    def __init__(self, modulus, name="t"):
        m = [int(c) for c in _strip(modulus)]
        if len(m) < 2:
            raise ValueError("modulus must have positive degree")
        if m[-1] != 1:
            raise ValueError("modulus must be monic")
        self.modulus = tuple(m)
        self.degree = len(m) - 1
        self.name = name

    def __call__(self, c):
        if isinstance(c, NFElement):
            if c.field != self:
                raise FieldMismatchError("element from a different field")
            return c
        return NFElement(self, (Fraction(c),))

    def is_rational(self):
        return False

    def zero(self):
        return NFElement(self, ())

    def one(self):
        return NFElement(self, (Fraction(1),))

    def gen(self):
        if self.degree == 1:
            return NFElement(self, (Fraction(-self.modulus[0]),))
        return NFElement(self, (Fraction(0), Fraction(1)))

    def contains(self, c):
        return isinstance(c, (int, Fraction)) or (isinstance(c, NFElement) and c.field == self)

    def _reduce(self, cs):
        cs = [Fraction(c) for c in cs]
        n = self.degree
        m = self.modulus
        for top in range(len(cs) - 1, n - 1, -1):
            c = cs[top]
            if c:
                # t^n = -(m_0 + ... + m_{n-1} t^{n-1})
                for i in range(n):
                    if m[i]:
                        cs[top - n + i] -= c * m[i]
                cs[top] = Fraction(0)
        return tuple(_strip(cs[:n]))

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return "NumberField(%s)" % poly_str(self.modulus, self.name)


def poly_str(cs, var="t"):
    parts = []
    for i in range(len(cs) - 1, -1, -1):
        c = cs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else "%s^%d" % (var, i))
        if mono and c == 1:
            s = mono
        elif mono and c == -1:
            s = "-" + mono
        else:
            s = str(c) + ("*" + mono if mono else "")
        parts.append(s)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class NFElement:
    """Element of a NumberField, stored as reduced coordinates low to high."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = field._reduce(coeffs)

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise FieldMismatchError("elements from different fields")
            return other
        if isinstance(other, (int, Rational)):
            return NFElement(self.field, (Fraction(other),))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        return NFElement(self.field, [
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return NFElement(self.field, ())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return NFElement(self.field, out)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in Q[t] against the modulus
        g, s = _xgcd_inverse(list(self.coeffs), [Fraction(c) for c in self.field.modulus])
        if len(g) != 1:
            raise ZeroDivisionError("element is a zero divisor; modulus not irreducible")
        return NFElement(self.field, [c / g[0] for c in s])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            if other == 0:
                return not self.coeffs
            return self.coeffs == (Fraction(other),)
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.field.modulus, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def is_rational(self):
        return len(self.coeffs) <= 1

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("not a rational element")
        return _canon_q(self.coeffs[0]) if self.coeffs else 0

    def __repr__(self):
        return "(" + poly_str(self.coeffs, self.field.name) + ")"

    __str__ = __repr__


def _upoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lb
        s = len(a) - len(b)
        q[s] = c
        for i, bc in enumerate(b):
            a[s + i] -= c * bc
        a = _strip(a)
    return _strip(q), a


def _xgcd_inverse(a, m):
    """Return (g, s) with s*a = g mod m."""
    r0, r1 = m, _strip(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _upoly_divmod(r0, r1)
        # s2 = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, x in enumerate(q):
            for j, y in enumerate(s1):
                prod[i + j] += x * y
        n = max(len(s0), len(prod))
        s2 = _strip([(s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0) for i in range(n)])
        r0, r1 = r1, r
        s0, s1 = s1, s2
    return r0, s0


def field_of(*scalars):
    """Smallest context holding all the given scalars."""
    f = QQ
    for c in scalars:
        if isinstance(c, NFElement):
            if f is QQ:
                f = c.field
            elif f != c.field:
                raise FieldMismatchError("scalars from different fields")
    return f


def scalar_arith(a, b, op, field=None):
    """Exact a op b for op in '+', '-', '*', '/'.

    Both operands must live in the same context.  Results are returned in
    canonical form (int/Fraction for Q, reduced NFElement otherwise).
    """
    f = field if field is not None else field_of(a, b)
    a, b = f(a), f(b)
    if op == "+":
        r = a + b
    elif op in ("-", "−"):
        r = a - b
    elif op in ("*", "×"):
        r = a * b
    elif op in ("/", "÷"):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        r = Fraction(a) / Fraction(b) if f is QQ else a / b
    else:
        raise ValueError("unknown operator %r" % (op,))
    return f(r)


def canon(c, field):
    """Canonical form of a scalar in ``field``."""
    return field(c)


def is_zero(c):
    return not c
