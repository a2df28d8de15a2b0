"""Proper base-points of plane Cremona maps over Q.

Points on the line z = 0 come from the gcd of the three binary forms
obtained by setting z = 0.  Affine points are located by the resultant in
y of two random combinations of the components; each irreducible factor of
that resultant gives a candidate x-coordinate (possibly in a number field),
and the gcd of the components restricted to that x gives the y's.
Irrational points are kept together as clusters of conjugates.
"""
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from ..exactalg import fastq
from ..exactalg.fields import QQ, NumberField, NFElement
from ..exactalg.gcd import up_gcd, up_trim
from ..exactalg.hompoly import HomPoly


@dataclass(frozen=True)
class BasePoint:
    """A proper base-point, or a cluster of ``degree`` conjugate points.

    ``coords`` holds one representative scaled so its last nonzero
    coordinate is 1.  For clusters the coordinates live in ``field``.
    ``multiplicity`` is None when it could not be computed.
    """

    coords: tuple
    multiplicity: object
    degree: int = 1
    field: object = QQ
    split: bool = True

    def is_rational(self):
        return self.degree == 1

    def key(self):
        return tuple(Fraction(c) for c in self.coords) if self.is_rational() else (self.field, self.coords)

    def to_json(self):
        from ..report import scalar
        out = {"coords": [scalar(c) for c in self.coords] if self.split else None,
               "multiplicity": self.multiplicity, "degree": self.degree}
        if self.field is not QQ:
            out["field_modulus"] = list(self.field.modulus)
        return out

    def __str__(self):
        if not self.split:
            return "<cluster of %d points>" % self.degree
        body = "(%s)" % ":".join(str(c) for c in self.coords)
        if self.degree > 1:
            body += " and %d conjugates" % (self.degree - 1)
        return body


class BaseLocusError(ValueError):
    pass


def normalize_point(p):
    p = list(p)
    i = max(k for k in range(3) if p[k] != 0)
    c = p[i]
    if isinstance(c, NFElement):
        inv = c.inverse()
        return tuple(v * inv for v in p)
    return tuple(_q(Fraction(v) / Fraction(c)) for v in p)


def _q(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def field_for_root(cs):
    """(K, theta) with theta a root of the integer polynomial cs (low to high)."""
    n = len(cs) - 1
    a = cs[-1]
    if a < 0:
        cs = [-c for c in cs]
        a = -a
    monic = [cs[i] * a ** (n - 1 - i) for i in range(n)] + [1]
    K = NumberField(monic)
    return K, K.gen() * Fraction(1, a)


def _int_coeffs(poly_dict, var):
    """Univariate integer coefficient list of a HomPoly that only involves ``var``."""
    deg = max(m[var] for m in poly_dict)
    cs = [0] * (deg + 1)
    for m, c in poly_dict.items():
        cs[m[var]] = c
    den = 1
    for c in cs:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    return [int(Fraction(c) * den) for c in cs]


def multiplicity_at(phi, point):
    """min over the components of the vanishing order at ``point``."""
    return min(f.vanishing_order(point) for f in phi.components if not f.is_zero())


def is_base_point(phi, point):
    return all(not f.evaluate(point) for f in phi.components)


def proper_base_points(phi, seed=0):
    """Proper base-points of ``phi`` with multiplicities (maps over Q)."""
    if phi.field is not QQ:
        raise NotImplementedError("base-point search is implemented for maps over Q")
    if phi.degree == 1:
        return []
    rng = random.Random(seed)
    comps = [f for f in phi.components if not f.is_zero()]
    points = []
    points.extend(_points_at_infinity(phi, comps))
    points.extend(_affine_points(phi, comps, rng))
    points.sort(key=_sort_key)
    return points


def _sort_key(bp):
    if bp.is_rational():
        return (0, tuple(Fraction(c) for c in bp.coords))
    return (bp.degree, str(bp))


def _points_at_infinity(phi, comps):
    binary = []
    for f in comps:
        t = {m: c for m, c in f.as_dict().items() if m[2] == 0}
        if t:
            binary.append(HomPoly._raw(t, f.degree, QQ))
    if not binary:
        raise BaseLocusError("all components vanish on z = 0: common factor z")
    g = fastq.to_fmpq_mpoly(binary[0])
    for b in binary[1:]:
        g = g.gcd(fastq.to_fmpq_mpoly(b))
    gp = fastq.from_fmpq_mpoly(g)
    if gp.degree == 0:
        return []
    out = []
    for fac, _ in fastq.factor_q(gp):
        if fac.degree == 1:
            a, b = fac.coeff((1, 0, 0)), fac.coeff((0, 1, 0))
            pt = normalize_point((b, -a, 0))
            out.append(BasePoint(pt, multiplicity_at(phi, pt)))
        else:
            # y does not divide an irreducible form of degree > 1
            cs = [0] * (fac.degree + 1)
            for m, c in fac.as_dict().items():
                cs[m[0]] = c
            cs = _int_coeffs({(i, 0, 0): c for i, c in enumerate(cs) if c}, 0)
            K, theta = field_for_root(cs)
            pt = normalize_point((theta, K.one(), K.zero()))
            out.append(BasePoint(pt, multiplicity_at(phi, pt), fac.degree, K))
    return out


def _affine_points(phi, comps, rng):
    aff = [HomPoly._raw(f.as_dict(), f.degree, QQ) for f in comps]
    for _ in range(20):
        r = [rng.randint(-9, 9) for _ in aff]
        s = [rng.randint(-9, 9) for _ in aff]
        A = sum((f.scale(c) for f, c in zip(aff[1:], r[1:])), aff[0].scale(r[0] or 1))
        B = sum((f.scale(c) for f, c in zip(aff[1:], s[1:])), aff[0].scale(s[0]))
        if A.is_zero() or B.is_zero():
            continue
        # resultant in y of the dehomogenized combinations
        fa = fastq.to_fmpq_mpoly(A).subs({"z": 1})
        fb = fastq.to_fmpq_mpoly(B).subs({"z": 1})
        if fa.degrees()[1] == 0 and fb.degrees()[1] == 0:
            continue
        R = fa.resultant(fb, "y")
        if not R.is_zero():
            break
    else:
        raise BaseLocusError("could not separate the components (positive dimensional base locus?)")
    if R.is_constant():
        return []
    out = []
    _, facs = R.factor()
    for fac, _ in facs:
        d = fastq.from_fmpq_mpoly(fac).as_dict()
        cs = _int_coeffs(d, 0)
        if len(cs) == 2:
            K, theta = QQ, Fraction(-cs[0], cs[1])
        else:
            K, theta = field_for_root(cs)
        out.extend(_points_over_x(phi, comps, K, theta, len(cs) - 1))
    return out


def _restrict_y(f, theta, K):
    """f(theta, y, 1) as a coefficient list in y over K."""
    deg = f.var_degree(1)
    cs = [K.zero() if K is not QQ else 0] * (deg + 1)
    for (i, j, _), c in f.as_dict().items():
        cs[j] = cs[j] + c * theta ** i
    return up_trim(cs)


def _points_over_x(phi, comps, K, theta, e):
    G = []
    for f in comps:
        G = up_gcd(G, _restrict_y(f, theta, K))
        if len(G) == 1:
            return []
    if not G:
        raise BaseLocusError("a vertical line is in the base locus")
    if len(G) == 2:
        y0 = -G[0] / G[1]
        pt = normalize_point((theta, y0, 1))
        if K is QQ:
            return [BasePoint(pt, multiplicity_at(phi, pt))]
        return [BasePoint(pt, multiplicity_at(phi, pt), e, K)]
    if K is QQ:
        out = []
        cs = [Fraction(c) for c in G]
        yd = {(0, j, 0): c for j, c in enumerate(cs) if c}
        poly = HomPoly._raw({(0, j, len(cs) - 1 - j): c for (_, j, _), c in yd.items()}, len(cs) - 1, QQ)
        for fac, _ in fastq.factor_q(poly):
            fcs = _int_coeffs({m: c for m, c in fac.as_dict().items()}, 1)
            if len(fcs) == 2:
                pt = normalize_point((theta, Fraction(-fcs[0], fcs[1]), 1))
                out.append(BasePoint(pt, multiplicity_at(phi, pt)))
            else:
                L, eta = field_for_root(fcs)
                pt = normalize_point((L(theta), eta, L.one()))
                out.append(BasePoint(pt, multiplicity_at(phi, pt), len(fcs) - 1, L))
        return out
    # several points share an irrational x: keep them as one unsplit cluster
    return [BasePoint((), None, e * (len(G) - 1), K, split=False)]


def count_proper(points):
    return sum(p.degree for p in points)
