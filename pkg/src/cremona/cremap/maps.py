"""Rational maps of the projective plane and of the affine chart z = 1."""
import random
from dataclasses import dataclass
from fractions import Fraction

from ..exactalg import fastq
from ..exactalg.fields import QQ, NFElement, field_of
from ..exactalg.gcd import gcd3
from ..exactalg.hompoly import HomPoly, _coeff_str
from ..exactalg.parsing import RatFunc, parse_ratfunc, parse_hompoly, split_top_level, ParseError

DEFAULT_BIT_CAP = 10 ** 6


class CompositionError(ValueError):
    """The composite is identically (0:0:0)."""


class BitCapExceeded(RuntimeError):
    pass


class InverseError(ValueError):
    pass


def _inv(c):
    return c.inverse() if isinstance(c, NFElement) else Fraction(1) / c


class RationalMapP2:
    """(x:y:z) -> (p0:p1:p2) with the p_i homogeneous of one degree and coprime.

    Over Q the components are stored as a jointly primitive integer triple;
    over an extension the first nonzero component is made monic.
    """

    __slots__ = ("components", "degree", "field")

    def __init__(self, components, field=None, reduce=True):
        comps = list(components)
        if len(comps) != 3:
            raise ValueError("a map of P^2 needs three components")
        if field is None:
            field = QQ
            for f in comps:
                if f.field is not QQ:
                    field = f.field
        comps = [f.with_field(field) for f in comps]
        degs = {f.degree for f in comps if not f.is_zero()}
        if not degs:
            raise ValueError("all components are zero")
        if len(degs) > 1:
            raise ValueError("components have different degrees: %s" % sorted(degs))
        d = degs.pop()
        comps = [f if not f.is_zero() else HomPoly.zero(d, field) for f in comps]
        if reduce:
            g = gcd3(*comps)
            if g.degree > 0:
                comps = [f.divmod_exact(g) for f in comps]
                d -= g.degree
        self.components = tuple(_normalize(comps, field))
        self.degree = d
        self.field = field

    @classmethod
    def _trusted(cls, comps, degree, field):
        m = cls.__new__(cls)
        m.components = tuple(comps)
        m.degree = degree
        m.field = field
        return m

    @classmethod
    def identity(cls, field=QQ):
        return cls(HomPoly.gens(field), field)

    @classmethod
    def linear(cls, A, field=QQ):
        return cls([HomPoly.linear(row, field) for row in A], field)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __eq__(self, other):
        return isinstance(other, RationalMapP2) and equals(self, other)

    def __hash__(self):
        return hash(self.degree)

    def __matmul__(self, other):
        return compose(self, other)

    def is_identity(self):
        return self.degree == 1 and equals(self, RationalMapP2.identity(self.field))

    def max_bits(self):
        return max(f.max_bits() for f in self.components)

    def __call__(self, point):
        return tuple(f.evaluate(point) for f in self.components)

    def __repr__(self):
        return "RationalMapP2([%s])" % ", ".join(str(f) for f in self.components)

    __str__ = __repr__


def _normalize(comps, field):
    if field is QQ:
        return fastq.normalize_triple(comps)
    first = next(f for f in comps if not f.is_zero())
    inv = _inv(first.leading_coeff())
    return [f.scale(inv) for f in comps]


def make_map(components, field=None):
    """Build a RationalMapP2 from components or an affine pair.

    ``components`` may be a list of three HomPolys or strings (projective form),
    a list of two strings or an AffineBirMap (affine form).
    """
    if isinstance(components, AffineBirMap):
        return components.to_p2()
    components = list(components)
    if len(components) == 2:
        return AffineBirMap.from_strings(components, field or QQ).to_p2()
    if len(components) != 3:
        raise ValueError("expected 3 projective or 2 affine components")
    f = field or QQ
    comps = [parse_hompoly(s, f) if isinstance(s, str) else s for s in components]
    degs = {c.degree for c in comps if not c.is_zero()}
    if len(degs) > 1:
        raise ValueError("components have different degrees: %s" % sorted(degs))
    return RationalMapP2(comps, field)


def compose(phi, psi, rng=None):
    """phi o psi with the common factor removed."""
    field = phi.field if phi.field is not QQ else psi.field
    if field is QQ:
        try:
            comps, d = fastq.compose_components(phi.components, psi.components, rng=rng)
        except ValueError as e:
            raise CompositionError(str(e)) from None
        return RationalMapP2._trusted(comps, d, QQ)
    return compose_python(phi, psi)


def compose_python(phi, psi):
    """Composition by plain substitution and subresultant gcd (any field)."""
    field = phi.field if phi.field is not QQ else psi.field
    sub = [f.with_field(field).substitute(psi.components) for f in phi.components]
    if all(s.is_zero() for s in sub):
        raise CompositionError("composition is identically zero")
    g = gcd3(*sub, method="python")
    if g.degree:
        sub = [s.divmod_exact(g) for s in sub]
    d = next(s.degree for s in sub if not s.is_zero())
    sub = [s if not s.is_zero() else HomPoly.zero(d, field) for s in sub]
    return RationalMapP2._trusted(_normalize(sub, field), d, field)


def _cross_zero(a, b, field):
    if field is QQ:
        A = [fastq.to_fmpq_mpoly(f) for f in a]
        B = [fastq.to_fmpq_mpoly(f) for f in b]
        return all((A[i] * B[j] - A[j] * B[i]).is_zero() for i in range(3) for j in range(i + 1, 3))
    return all((a[i] * b[j] - a[j] * b[i]).is_zero() for i in range(3) for j in range(i + 1, 3))


def equals(phi, psi):
    """Projective equality: all 2x2 cross products vanish."""
    if phi.degree != psi.degree:
        return False
    field = phi.field if phi.field is not QQ else psi.field
    a = [f.with_field(field) for f in phi.components]
    b = [f.with_field(field) for f in psi.components]
    # zero patterns must agree
    if [f.is_zero() for f in a] != [f.is_zero() for f in b]:
        return False
    return _cross_zero(a, b, field)


def iterate(phi, k):
    """phi^k for k >= 1, computed incrementally."""
    cur = phi
    for _ in range(k - 1):
        cur = compose(phi, cur)
    return cur


def power(phi, n, phi_inv=None):
    if n == 0:
        return RationalMapP2.identity(phi.field)
    if n < 0:
        if phi_inv is None:
            raise InverseError("negative power needs an inverse")
        return iterate(phi_inv, -n)
    return iterate(phi, n)


def iterate_maps(phi, K, bit_cap=DEFAULT_BIT_CAP):
    """Yield phi^1 .. phi^K, each as phi o phi^(k-1)."""
    cur = phi
    for k in range(1, K + 1):
        if k > 1:
            cur = compose(phi, cur)
        if bit_cap is not None and cur.max_bits() > bit_cap:
            raise BitCapExceeded("coefficients of iterate %d exceed %d bits" % (k, bit_cap))
        yield cur


def iterate_degrees(phi, K, bit_cap=DEFAULT_BIT_CAP):
    """[deg phi, deg phi^2, ..., deg phi^K]."""
    if K < 1:
        raise ValueError("horizon must be at least 1")
    return [m.degree for m in iterate_maps(phi, K, bit_cap)]


def conjugated_iterate_degrees(psi, psi_inv, phi, K, bit_cap=DEFAULT_BIT_CAP):
    """Degrees of psi o phi^k o psi_inv for k = 1..K.

    The iterates of phi are built incrementally and conjugated one at a
    time, which is far cheaper than iterating the conjugate directly when
    psi has large degree.  The result is the same sequence.
    """
    if not verify_inverse(psi, psi_inv):
        raise InverseError("psi_inv is not an inverse of psi")
    out = []
    for fk in iterate_maps(phi, K, bit_cap):
        out.append(compose(psi, compose(fk, psi_inv)).degree)
    return out


def verify_inverse(phi, psi):
    try:
        return compose(phi, psi).is_identity() and compose(psi, phi).is_identity()
    except CompositionError:
        return False


def conjugate(psi, psi_inv, phi):
    """psi o phi o psi_inv, after checking psi_inv."""
    if not verify_inverse(psi, psi_inv):
        raise InverseError("psi_inv is not an inverse of psi")
    return compose(psi, compose(phi, psi_inv))


def commutes(phi, psi):
    return equals(compose(phi, psi), compose(psi, phi))


# inverses of low degree maps

def _nullspace(rows, ncols, field):
    """Basis of the right kernel of a matrix over a field (Gaussian elimination)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = _inv(rows[r][c])
        rows[r] = [field(v * inv) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field(a - f * b) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field(0)] * ncols
        v[fc] = field(1)
        for i, pc in enumerate(pivots):
            v[pc] = field(-rows[i][fc])
        basis.append(v)
    return basis


def _monomials(d):
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def inverse_low_degree(phi, seed=0, npoints=None):
    """Inverse of a birational map of degree at most 2, verified.

    Unknown inverse components of degree deg(phi) are found from the
    linear conditions psi(phi(p)) ~ p at random points p.
    """
    d = phi.degree
    if d > 2:
        raise InverseError("inverse helper only handles degree <= 2")
    field = phi.field
    mons = _monomials(d)
    n = len(mons)
    rng = random.Random(seed)
    rows = []
    npoints = npoints or 4 * n
    tries = 0
    while len(rows) < 3 * npoints and tries < 20 * npoints:
        tries += 1
        p = [Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(3)]
        q = phi(p)
        if all(not v for v in q):
            continue
        vals = [q[0] ** i * q[1] ** j * q[2] ** k for i, j, k in mons]
        for a in range(3):
            for b in range(a + 1, 3):
                # psi_a(q) p_b - psi_b(q) p_a = 0
                row = [field(0)] * (3 * n)
                for t, v in enumerate(vals):
                    row[a * n + t] = field(v * p[b])
                    row[b * n + t] = field(-v * p[a])
                rows.append(row)
    basis = _nullspace(rows, 3 * n, field)
    if len(basis) != 1:
        raise InverseError("no unique inverse of degree %d (kernel dimension %d)" % (d, len(basis)))
    v = basis[0]
    comps = [HomPoly({m: v[a * n + t] for t, m in enumerate(mons)}, degree=d, field=field) for a in range(3)]
    inv = RationalMapP2(comps, field)
    if not verify_inverse(phi, inv):
        raise InverseError("candidate inverse failed verification")
    return inv


# affine maps

def _aff_mul(a, b):
    out = {}
    for (i, j), c in a.items():
        for (i2, j2), c2 in b.items():
            m = (i + i2, j + j2)
            out[m] = out.get(m, 0) + c * c2
    return {m: c for m, c in out.items() if c}


def _aff_deg(a):
    return max((i + j for i, j in a), default=0)


def _from_ratfunc(rf):
    for part in (rf.num, rf.den):
        if any(m[2] for m in part):
            raise ParseError("affine maps use x and y only")
    return ({(m[0], m[1]): c for m, c in rf.num.items()},
            {(m[0], m[1]): c for m, c in rf.den.items()})


@dataclass(frozen=True)
class AffineBirMap:
    """(x, y) -> (n1/d1, n2/d2) with n_i, d_i polynomials {(i, j): c}."""

    n1: dict
    d1: dict
    n2: dict
    d2: dict
    field: object = QQ

    @classmethod
    def from_strings(cls, pair, field=QQ):
        a = _from_ratfunc(parse_ratfunc(pair[0], field))
        b = _from_ratfunc(parse_ratfunc(pair[1], field))
        return cls(a[0], a[1], b[0], b[1], field)

    @classmethod
    def from_ratfuncs(cls, f1, f2, field=QQ):
        a, b = _from_ratfunc(f1), _from_ratfunc(f2)
        return cls(a[0], a[1], b[0], b[1], field)

    @classmethod
    def from_p2(cls, phi):
        p0, p1, p2 = [f.dehomogenize(2) for f in phi.components]
        if not p2:
            raise ValueError("map sends the affine chart into the line at infinity")
        return cls(p0, p2, p1, p2, phi.field)

    def to_p2(self):
        a = _aff_mul(self.n1, self.d2)
        b = _aff_mul(self.n2, self.d1)
        c = _aff_mul(self.d1, self.d2)
        D = max(_aff_deg(a), _aff_deg(b), _aff_deg(c))
        comps = [HomPoly.homogenize(p, D, self.field) for p in (a, b, c)]
        return RationalMapP2(comps, self.field)

    def __call__(self, point):
        x, y = point

        def ev(p):
            return sum((c * x ** i * y ** j for (i, j), c in p.items()), 0)

        return ev(self.n1) / ev(self.d1), ev(self.n2) / ev(self.d2)

    def compose(self, other):
        return AffineBirMap.from_p2(compose(self.to_p2(), other.to_p2()))

    def __matmul__(self, other):
        return self.compose(other)

    def equals(self, other):
        return equals(self.to_p2(), other.to_p2())

    def __str__(self):
        return "(%s, %s)" % (_aff_str(self.n1, self.d1), _aff_str(self.n2, self.d2))


def _aff_str(n, d):
    num = _plain(n)
    if d == {(0, 0): 1}:
        return num
    return "(%s)/(%s)" % (num, _plain(d))


def _plain(p):
    if not p:
        return "0"
    hp = HomPoly({(i, j, _aff_deg(p) - i - j): c for (i, j), c in p.items()}, field=field_of(*p.values()))
    out = []
    for m, c in hp.terms():
        out.append((m[0], m[1], c))
    parts = []
    for i, j, c in sorted(out, key=lambda t: (t[0] + t[1], t[0]), reverse=True):
        mono = "*".join(v if e == 1 else "%s^%d" % (v, e) for v, e in (("x", i), ("y", j)) if e)
        neg = not isinstance(c, NFElement) and c < 0
        cc = -c if neg else c
        body = mono if (mono and cc == 1) else (_coeff_str(cc) + ("*" + mono if mono else ""))
        parts.append(("-" if neg else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, b in parts[1:]:
        s += " %s %s" % (sign, b)
    return s


def affine(f1, f2, field=QQ):
    """AffineBirMap from two expressions in x, y."""
    if isinstance(f1, RatFunc):
        return AffineBirMap.from_ratfuncs(f1, f2, field)
    return AffineBirMap.from_strings([f1, f2], field)


def parse_map_text(text):
    """Parse a map file: optional 'field:' header then 'map P2 [...]' or 'map A2 [...]'."""
    from ..exactalg.parsing import parse_field
    field = QQ
    body = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("field:"):
            field = parse_field(line)
        elif line.startswith("map"):
            body = line
        elif body is not None:
            body += " " + line
        else:
            raise ParseError("unexpected line %r" % line)
    if body is None:
        raise ParseError("no 'map' line found")
    head, _, rest = body.partition("[")
    kind = head.split()[1] if len(head.split()) > 1 else ""
    entries = split_top_level(rest.rsplit("]", 1)[0])
    if kind not in ("P2", "A2"):
        raise ParseError("map kind must be P2 or A2")
    want = 3 if kind == "P2" else 2
    if len(entries) != want:
        raise ParseError("%s maps need %d components" % (kind, want))
    try:
        if kind == "P2":
            return make_map(entries, field)
        return AffineBirMap.from_strings(entries, field).to_p2()
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from None
