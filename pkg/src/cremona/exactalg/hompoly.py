"""Sparse homogeneous polynomials in x, y, z.

Terms are kept in a dict {(i, j, k): coeff} with i + j + k == degree and
no zero coefficients.  Printing and iteration use graded lex order with
x > y > z.
"""
from fractions import Fraction

from .fields import QQ, NFElement, field_of

VARS = ("x", "y", "z")


def _add_into(out, m, c):
    v = out.get(m)
    v = c if v is None else v + c
    if v:
        out[m] = v
    elif m in out:
        del out[m]


class HomPoly:
    __slots__ = ("_t", "degree", "field", "_hash")

    def __init__(self, terms=None, degree=None, field=None):
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        items = [(tuple(int(e) for e in m), c) for m, c in items]
        if field is None:
            field = field_of(*[c for _, c in items])
        t = {}
        for m, c in items:
            if len(m) != 3 or min(m) < 0:
                raise ValueError("bad exponent triple %r" % (m,))
            _add_into(t, m, field(c))
        t = {m: field(c) for m, c in t.items()}
        degs = {sum(m) for m in t}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous: degrees %s" % sorted(degs))
        if degs:
            d = degs.pop()
            if degree is not None and degree != d:
                raise ValueError("declared degree %d but terms have degree %d" % (degree, d))
        else:
            if degree is None:
                raise ValueError("zero polynomial needs an explicit degree")
            d = degree
        self._t = t
        self.degree = d
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, t, degree, field):
        p = cls.__new__(cls)
        p._t = t
        p.degree = degree
        p.field = field
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, degree, field=QQ):
        return cls._raw({}, degree, field)

    @classmethod
    def const(cls, c, field=QQ):
        c = field(c)
        return cls._raw({(0, 0, 0): c} if c else {}, 0, field)

    @classmethod
    def var(cls, name, field=QQ):
        i = VARS.index(name)
        m = [0, 0, 0]
        m[i] = 1
        return cls._raw({tuple(m): field(1)}, 1, field)

    @classmethod
    def gens(cls, field=QQ):
        return tuple(cls.var(v, field) for v in VARS)

    @classmethod
    def linear(cls, row, field=QQ):
        """a*x + b*y + c*z from a row [a, b, c]."""
        t = {}
        for i, c in enumerate(row):
            c = field(c)
            if c:
                m = [0, 0, 0]
                m[i] = 1
                t[tuple(m)] = c
        return cls._raw(t, 1, field)

    # basic queries
    def terms(self):
        """Terms as (monomial, coeff) sorted by grlex, x > y > z."""
        return sorted(self._t.items(), key=lambda mc: mc[0], reverse=True)

    def as_dict(self):
        return dict(self._t)

    def coeff(self, m):
        return self._t.get(tuple(m), self.field.zero())

    def is_zero(self):
        return not self._t

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def leading(self):
        m = max(self._t)
        return m, self._t[m]

    def leading_coeff(self):
        return self.leading()[1]

    def monomials(self):
        return sorted(self._t, reverse=True)

    def max_bits(self):
        """Largest coefficient size in bits (numerator or denominator)."""
        best = 0
        for c in self._t.values():
            for q in (c.coeffs if isinstance(c, NFElement) else (c,)):
                q = Fraction(q)
                best = max(best, abs(q.numerator).bit_length(), q.denominator.bit_length())
        return best

    def var_degree(self, i):
        return max((m[i] for m in self._t), default=0)

    def min_var_degree(self, i):
        return min((m[i] for m in self._t), default=0)

    # arithmetic
    def _same(self, other):
        if other.field != self.field:
            if other.field is QQ and all(self.field.contains(c) for c in other._t.values()):
                return other.with_field(self.field)
            if self.field is QQ:
                raise _Promote(other.field)
            from .fields import FieldMismatchError
            raise FieldMismatchError("polynomials over different fields")
        return other

    def with_field(self, field):
        if field == self.field:
            return self
        return HomPoly._raw({m: field(c) for m, c in self._t.items()}, self.degree, field)

    def __add__(self, other):
        if not isinstance(other, HomPoly):
            if other == 0:
                return self
            other = HomPoly.const(other, self.field)
        try:
            other = self._same(other)
        except _Promote as e:
            return self.with_field(e.field) + other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if other.degree != self.degree:
            raise ValueError("cannot add polynomials of degrees %d and %d" % (self.degree, other.degree))
        t = dict(self._t)
        for m, c in other._t.items():
            _add_into(t, m, c)
        return HomPoly._raw({m: self.field(c) for m, c in t.items()}, self.degree, self.field)

    __radd__ = __add__

    def __neg__(self):
        return HomPoly._raw({m: -c for m, c in self._t.items()}, self.degree, self.field)

    def __sub__(self, other):
        if not isinstance(other, HomPoly):
            return self + (-self.field(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.field(c) if not isinstance(c, NFElement) else c
        if isinstance(c, NFElement) and self.field is QQ:
            return self.with_field(c.field).scale(c)
        if not c:
            return HomPoly.zero(self.degree, self.field)
        f = self.field
        return HomPoly._raw({m: f(v * c) for m, v in self._t.items()}, self.degree, f)

    def __mul__(self, other):
        if not isinstance(other, HomPoly):
            return self.scale(other)
        try:
            other = self._same(other)
        except _Promote as e:
            return self.with_field(e.field) * other
        d = self.degree + other.degree
        a, b = self._t, other._t
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for (i, j, k), c in a.items():
            for (i2, j2, k2), c2 in b.items():
                m = (i + i2, j + j2, k + k2)
                v = out.get(m)
                out[m] = c * c2 if v is None else v + c * c2
        f = self.field
        return HomPoly._raw({m: f(c) for m, c in out.items() if c}, d, f)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = HomPoly.const(1, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, HomPoly):
            if self.is_zero() and other.is_zero():
                return True
            return self.degree == other.degree and self._t == other._t
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._t.items())))
        return self._hash

    def monic(self):
        """Scale so the grlex-leading coefficient is 1."""
        if self.is_zero():
            return self
        lc = self.leading_coeff()
        if lc == 1:
            return self
        inv = (Fraction(1) / lc) if self.field is QQ else lc.inverse()
        return self.scale(inv)

    def primitive(self):
        """Over Q: integer coefficients with gcd 1 and positive leading coefficient.

        Over an extension this is the same as :meth:`monic`.
        """
        if self.field is not QQ:
            return self.monic()
        if self.is_zero():
            return self
        import math
        den = 1
        for c in self._t.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
        ints = {m: int(c * den) for m, c in self._t.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, v)
        if self.leading_coeff() < 0:
            g = -g
        return HomPoly._raw({m: v // g for m, v in ints.items()}, self.degree, QQ)

    def divmod_exact(self, q):
        """Exact quotient self / q; raises ArithmeticError if q does not divide."""
        q = self._same(q) if isinstance(q, HomPoly) else q
        if q.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return HomPoly.zero(max(self.degree - q.degree, 0), self.field)
        f = self.field
        qm, qc = q.leading()
        inv = (Fraction(1) / qc) if f is QQ else qc.inverse()
        r = dict(self._t)
        out = {}
        qt = list(q._t.items())
        while r:
            m = max(r)
            c = r[m]
            e = (m[0] - qm[0], m[1] - qm[1], m[2] - qm[2])
            if min(e) < 0:
                raise ArithmeticError("polynomial does not divide")
            cq = f(c * inv)
            out[e] = cq
            for mm, cc in qt:
                _add_into(r, (mm[0] + e[0], mm[1] + e[1], mm[2] + e[2]), -cq * cc)
        return HomPoly._raw({m: f(c) for m, c in out.items()}, self.degree - q.degree, f)

    def __floordiv__(self, q):
        return self.divmod_exact(q)

    # substitution and evaluation
    def substitute(self, args):
        """p(a0, a1, a2) for homogeneous a_i of a common degree."""
        args = list(args)
        e = None
        for a in args:
            if not a.is_zero():
                e = a.degree if e is None else e
                if a.degree != e:
                    raise ValueError("substituted polynomials must share a degree")
        if e is None:
            e = args[0].degree
        field = self.field
        for a in args:
            if a.field != QQ:
                field = a.field
        args = [a.with_field(field) if a.field != field else a for a in args]
        out = HomPoly.zero(self.degree * e, field)
        if self.is_zero():
            return out
        pw = [[HomPoly.const(1, field)] for _ in range(3)]
        for v in range(3):
            top = self.var_degree(v)
            for _ in range(top):
                pw[v].append(pw[v][-1] * args[v])
        acc = {}
        for (i, j, k), c in self._t.items():
            term = pw[0][i] * pw[1][j] * pw[2][k]
            for m, v in term._t.items():
                _add_into(acc, m, c * v)
        return HomPoly._raw({m: field(v) for m, v in acc.items()}, self.degree * e, field)

    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point):
        total = 0
        for (i, j, k), c in self._t.items():
            total = total + c * point[0] ** i * point[1] ** j * point[2] ** k
        return total

    def linear_change(self, A):
        """Substitute (x, y, z) -> A * (x, y, z) for a 3x3 matrix A."""
        rows = [HomPoly.linear(row, self.field if self.field is not QQ else field_of(*row)) for row in A]
        return self.substitute(rows)

    def vanishing_order(self, point=None, chart=None):
        """Order of vanishing at a point of P^2.

        Either ``chart`` is an invertible 3x3 matrix A, and the order is taken
        at (0:0:1) after substituting (x, y, z) -> A (x, y, z); or ``point``
        is given and a chart sending (0:0:1) to it is built.
        """
        if self.is_zero():
            raise ValueError("vanishing order of the zero polynomial")
        if chart is None:
            chart = chart_at(point)
        q = self.linear_change(chart)
        return self.degree - max(m[2] for m in q._t)

    def dehomogenize(self, var=2):
        """Dict {(a, b): c} of the affine polynomial with variable ``var`` set to 1."""
        out = {}
        keep = [i for i in range(3) if i != var]
        for m, c in self._t.items():
            out[(m[keep[0]], m[keep[1]])] = c
        return out

    @classmethod
    def homogenize(cls, affine, degree, field=QQ, var=2):
        """Inverse of :meth:`dehomogenize` at the given degree."""
        t = {}
        for (a, b), c in affine.items():
            rest = degree - a - b
            if rest < 0:
                raise ValueError("affine term exceeds the target degree")
            m = [0, 0, 0]
            keep = [i for i in range(3) if i != var]
            m[keep[0]], m[keep[1]], m[var] = a, b, rest
            if c:
                t[tuple(m)] = field(c)
        return cls._raw(t, degree, field)

    def __repr__(self):
        return "HomPoly(%s)" % self

    def __str__(self):
        return hompoly_str(self)


class _Promote(Exception):
    def __init__(self, field):
        self.field = field


def chart_at(point):
    """A 3x3 matrix with last column ``point`` and determinant nonzero."""
    p = list(point)
    idx = next(i for i in range(3) if p[i] != 0)
    cols = []
    for i in range(3):
        if i != idx:
            e = [0, 0, 0]
            e[i] = 1
            cols.append(e)
    cols.append(p)
    return [[cols[c][r] for c in range(3)] for r in range(3)]


def _mono_str(m):
    parts = []
    for v, e in zip(VARS, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append("%s^%d" % (v, e))
    return "*".join(parts)


def _coeff_str(c):
    if isinstance(c, NFElement):
        return str(c)
    if isinstance(c, Fraction):
        return "%d/%d" % (c.numerator, c.denominator)
    return str(c)


def hompoly_str(p):
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in p.terms():
        mono = _mono_str(m)
        neg = False
        if not isinstance(c, NFElement) and c < 0:
            neg, c = True, -c
        cs = _coeff_str(c)
        if mono:
            s = mono if c == 1 else cs + "*" + mono
        else:
            s = cs
        pieces.append(("-" if neg else "+", s))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, s in pieces[1:]:
        out += " %s %s" % (sign, s)
    return out


def poly_arith(p, q, op):
    """p + q or p * q for homogeneous polynomials."""
    if op == "+":
        return p + q
    if op in ("*", "×"):
        return p * q
    if op in ("-", "−"):
        return p - q
    raise ValueError("unknown operator %r" % (op,))
