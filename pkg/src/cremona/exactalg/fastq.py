"""Fast exact arithmetic over Q backed by FLINT.

Composition of integer maps packs the dehomogenized polynomials into one
univariate integer polynomial (x^i y^j -> T^(i*S + j)) so products run in
FLINT's univariate multiplication.  Removing the common factor of the
three resulting components first tries a coprimality certificate:
restrict to a random line modulo a prime, and if the restricted gcd is
constant while some component keeps its full degree, the integer gcd is
provably 1.  Otherwise an exact multivariate gcd is computed.
"""
import math
import random
from fractions import Fraction

import flint

from .fields import QQ
from .hompoly import HomPoly

PRIME = (1 << 61) - 1
_NAMES = ("x", "y", "z")


def _qctx():
    return flint.fmpq_mpoly_ctx.get(_NAMES, "deglex")


def _zctx():
    return flint.fmpz_mpoly_ctx.get(_NAMES, "deglex")


def _to_fraction(c):
    n, d = int(c.numer()), int(c.denom())
    return n if d == 1 else Fraction(n, d)


def to_fmpq_mpoly(p):
    if p.field is not QQ:
        raise ValueError("FLINT route needs rational coefficients")
    ctx = _qctx()
    return ctx.from_dict({m: flint.fmpq(int(getattr(c, "numerator", c)), int(getattr(c, "denominator", 1)))
                          for m, c in p.as_dict().items()})


def from_fmpq_mpoly(f, degree=None):
    t = {tuple(int(e) for e in m): _to_fraction(c) for m, c in f.to_dict().items()}
    if degree is None:
        degree = max((sum(m) for m in t), default=0)
    return HomPoly._raw(t, degree, QQ)


def to_fmpz_mpoly(p):
    return _zctx().from_dict({m: int(c) for m, c in p.as_dict().items()})


def from_fmpz_mpoly(f, degree):
    return HomPoly._raw({tuple(int(e) for e in m): int(c) for m, c in f.to_dict().items()}, degree, QQ)


def pack(p, S):
    """Kronecker image of p(x, y, 1) with stride S."""
    coeffs = {}
    for (i, j, _), c in p.as_dict().items():
        coeffs[i * S + j] = int(c)
    if not coeffs:
        return flint.fmpz_poly([])
    arr = [0] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        arr[k] = v
    return flint.fmpz_poly(arr)


def unpack(P, S, degree):
    t = {}
    for idx, c in enumerate(P.coeffs()):
        if c:
            i, j = divmod(idx, S)
            t[(i, j, degree - i - j)] = int(c)
    return t


def _restrict_mod_p(P, S, c, d):
    """Univariate image of g(s, c*s + d) mod PRIME from a packed g."""
    Pm = flint.nmod_poly(P, PRIME)
    cs = Pm.coeffs()
    if not cs:
        return flint.nmod_poly([], PRIME)
    ylin = flint.nmod_poly([d, c], PRIME)
    s = flint.nmod_poly([0, 1], PRIME)
    top = (len(cs) - 1) // S
    acc = flint.nmod_poly([], PRIME)
    for i in range(top, -1, -1):
        col = cs[i * S:(i + 1) * S]
        acc = acc * s
        if any(col):
            acc = acc + flint.nmod_poly([int(v) for v in col], PRIME)(ylin)
    return acc


def _affine_degree(P, S):
    best = -1
    for idx, c in enumerate(P.coeffs()):
        if c:
            i, j = divmod(idx, S)
            best = max(best, i + j)
    return best


def coprime_certificate(packed, S, rng, tries=2):
    """True only if the packed affine polynomials are proven coprime.

    False means no certificate was found (a common factor may or may not
    exist).
    """
    nonzero = [P for P in packed if not P.is_zero()]
    if len(nonzero) < 2:
        return False
    degs = [_affine_degree(P, S) for P in nonzero]
    if min(degs) == 0:
        return True
    for _ in range(tries):
        c = rng.randrange(1, PRIME)
        d = rng.randrange(0, PRIME)
        res = [_restrict_mod_p(P, S, c, d) for P in nonzero]
        if not any(r.degree() == dg for r, dg in zip(res, degs)):
            continue
        g = res[0]
        for r in res[1:]:
            g = g.gcd(r)
            if g.degree() == 0:
                return True
        if g.degree() <= 0:
            return True
    return False


def compose_components(phi, psi, rng=None, stats=None):
    """Reduced components of phi o psi for integer polynomial triples.

    Returns (components, degree) with components integer HomPolys whose
    gcd is 1 and which are jointly primitive.  Raises ValueError if the
    composition is identically zero.
    """
    rng = rng or random.Random(0)
    d = phi[0].degree
    e = psi[0].degree
    D = d * e
    S = D + 1
    P = [pack(q, S) for q in psi]
    cache = {(0, 0, 0): flint.fmpz_poly([1])}

    def mono(m):
        # products shared across the three components
        if m not in cache:
            v = max(range(3), key=lambda i: m[i])
            sub = list(m)
            sub[v] -= 1
            cache[m] = mono(tuple(sub)) * P[v]
        return cache[m]

    R = []
    for f in phi:
        acc = flint.fmpz_poly([])
        for m, c in f.as_dict().items():
            acc += int(c) * mono(m)
        R.append(acc)
    if all(r.is_zero() for r in R):
        raise ValueError("composition is identically zero")
    # common power of z: no term reaching affine degree D
    adeg = max(_affine_degree(r, S) for r in R if not r.is_zero())
    zpow = D - adeg
    Dred = D - zpow
    if stats is not None:
        stats["zpow"] = zpow
    if coprime_certificate(R, S, rng):
        if stats is not None:
            stats["route"] = "certificate"
        comps = [HomPoly._raw(unpack(r, S, Dred), Dred, QQ) for r in R]
    else:
        if stats is not None:
            stats["route"] = "mpoly-gcd"
        polys = [to_fmpz_mpoly(HomPoly._raw(unpack(r, S, Dred), Dred, QQ)) for r in R]
        g = None
        for f in polys:
            if not f.is_zero():
                g = f if g is None else g.gcd(f)
        gd = int(g.total_degree())
        Dred -= gd
        comps = [from_fmpz_mpoly(f / g if not f.is_zero() else f, Dred) for f in polys]
    return normalize_triple(comps), Dred


def normalize_triple(comps):
    """Jointly primitive integer triple with positive leading coefficient."""
    den = 1
    for f in comps:
        for c in f.as_dict().values():
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
    g = 0
    ints = []
    for f in comps:
        t = {m: int(c * den) for m, c in f.as_dict().items()}
        ints.append(t)
        for v in t.values():
            g = math.gcd(g, v)
    first = next(f for f in comps if not f.is_zero())
    if first.leading_coeff() < 0:
        g = -g
    return [HomPoly._raw({m: v // g for m, v in t.items()}, f.degree, QQ) for t, f in zip(ints, comps)]


def height_bits(comps):
    return max((f.max_bits() for f in comps), default=0)


def factor_q(f):
    """Irreducible factors over Q of a HomPoly, as (HomPoly, multiplicity)."""
    c, facs = to_fmpq_mpoly(f).factor()
    return [(from_fmpq_mpoly(g), int(e)) for g, e in facs]


def resultant_q(f, g, var):
    """Resultant of f, g with respect to variable index ``var``."""
    r = to_fmpq_mpoly(f).resultant(to_fmpq_mpoly(g), _NAMES[var])
    return from_fmpq_mpoly(r)
