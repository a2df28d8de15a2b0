"""Constructive conjugation of triangular maps (a(x), beta y + Q(x)) to normal form.

Here a(x) is alpha x or x + 1.  Conjugating by (x, y + P(x)) replaces Q
with Q - beta P + P(a(x)); conjugating by (x, y / S(x)) when
S(alpha x) = beta S(x) turns beta y + S into y + 1/beta.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from ..cremap.maps import AffineBirMap
from ..exactalg.fields import QQ, NFElement
from ..exactalg.gcd import up_trim, up_add, up_sub, up_scale, _inv
from .univariate import scale_arg, _q


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class Conjugator:
    """One elementary conjugator h together with its inverse."""

    kind: str
    data: tuple
    h: AffineBirMap
    h_inv: AffineBirMap

    def __str__(self):
        return str(self.h)


@dataclass
class TriangularReduction:
    original: AffineBirMap
    chain: list
    canonical: AffineBirMap
    hypotheses: dict
    verified: bool
    notes: list = field(default_factory=list)

    def to_json(self):
        return {"original": str(self.original), "chain": [str(c) for c in self.chain],
                "canonical": str(self.canonical), "hypotheses": dict(self.hypotheses),
                "verified": self.verified, "notes": list(self.notes)}


def _const_of(p):
    if set(p) - {(0, 0)}:
        raise ShapeError("denominator is not constant")
    c = p.get((0, 0), 0)
    if not c:
        raise ShapeError("zero denominator")
    return c


def _div(a, b):
    if isinstance(a, NFElement) or isinstance(b, NFElement):
        return a * _inv(b)
    return _q(Fraction(a) / Fraction(b))


def parse_triangular(g):
    """(kind, alpha, beta, Q) for g = (alpha x, beta y + Q(x)) or (x + 1, beta y + Q(x))."""
    c1, c2 = _const_of(g.d1), _const_of(g.d2)
    n1 = {m: _div(c, c1) for m, c in g.n1.items()}
    n2 = {m: _div(c, c2) for m, c in g.n2.items()}
    if set(n1) == {(1, 0)}:
        kind, alpha = "diagonal", n1[(1, 0)]
    elif n1 == {(1, 0): 1, (0, 0): 1}:
        kind, alpha = "translation", 1
    else:
        raise ShapeError("first coordinate must be alpha*x or x + 1")
    beta = n2.get((0, 1), 0)
    if not beta:
        raise ShapeError("second coordinate must involve beta*y with beta != 0")
    Q = {}
    for (i, j), c in n2.items():
        if j == 0:
            Q[i] = c
        elif (i, j) != (0, 1):
            raise ShapeError("second coordinate must be beta*y + Q(x)")
    deg = max(Q, default=-1)
    return kind, alpha, beta, up_trim([Q.get(i, 0) for i in range(deg + 1)])


def _poly_dict(P, var=0):
    return {((i, 0) if var == 0 else (0, i)): c for i, c in enumerate(P) if c}


def _make_map(kind, alpha, beta, Q, F):
    n1 = {(1, 0): alpha} if kind == "diagonal" else {(1, 0): 1, (0, 0): 1}
    n2 = _poly_dict(Q)
    n2[(0, 1)] = beta
    return AffineBirMap(n1, {(0, 0): 1}, n2, {(0, 0): 1}, F)


def _shift(P, F):
    """h = (x, y + P(x)) and its inverse."""
    h = AffineBirMap({(1, 0): 1}, {(0, 0): 1}, {**_poly_dict(P), (0, 1): 1}, {(0, 0): 1}, F)
    hi = AffineBirMap({(1, 0): 1}, {(0, 0): 1}, {**_poly_dict(up_scale(P, -1)), (0, 1): 1}, {(0, 0): 1}, F)
    return Conjugator("shift", tuple(P), h, hi)


def _divide(S, F):
    """h = (x, y / S(x)) and its inverse (x, y S(x))."""
    h = AffineBirMap({(1, 0): 1}, {(0, 0): 1}, {(0, 1): 1}, _poly_dict(S), F)
    hi = AffineBirMap({(1, 0): 1}, {(0, 0): 1}, {(i, 1): c for i, c in enumerate(S) if c}, {(0, 0): 1}, F)
    return Conjugator("divide", tuple(S), h, hi)


def _scale(b, F):
    h = AffineBirMap({(1, 0): 1}, {(0, 0): 1}, {(0, 1): b}, {(0, 0): 1}, F)
    hi = AffineBirMap({(1, 0): 1}, {(0, 0): 1}, {(0, 1): _div(1, b)}, {(0, 0): 1}, F)
    return Conjugator("scale", (b,), h, hi)


def _translate_arg(P):
    """P(x + 1) by Horner's rule."""
    out = []
    for c in reversed(P):
        # out = out * (x + 1) + c
        out = up_add(up_add([0] + out, out), [c])
    return out


def _after_shift(kind, alpha, beta, Q, P):
    moved = scale_arg(P, alpha) if kind == "diagonal" else _translate_arg(P)
    return up_add(up_sub(Q, up_scale(P, beta)), moved)


def root_of_unity_order(a, field):
    """Smallest k >= 1 with a^k = 1, or None.

    A root of unity of order k in a field of degree n has phi(k) <= n, which
    forces k <= 2 n^2 (and k <= 2 over Q).
    """
    n = 1 if field is QQ else field.degree
    p = a
    for k in range(1, 2 * n * n + 1):
        if p == 1:
            return k
        p = p * a
    return None


def reduce_triangular(g, verify=True):
    """Conjugate g to (alpha x, y + 1), (alpha x, beta y), (x + 1, y) or (x + 1, beta y)."""
    F = g.field
    kind, alpha, beta, Q = parse_triangular(g)
    chain = []
    notes = []
    hyp = {}
    if kind == "diagonal":
        order = root_of_unity_order(alpha, F)
        hyp = {"beta_is_one": beta == 1, "alpha_root_of_unity": order is not None,
               "alpha_order": order, "Q0_nonzero": bool(Q and Q[0])}
        # kill every coefficient with alpha^d != beta, from the top down
        for d in range(len(Q) - 1, -1, -1):
            if d >= len(Q) or not Q[d]:
                continue
            ad = alpha ** d
            if ad == beta:
                continue
            gamma = _div(-Q[d], ad - beta)
            P = [0] * d + [gamma]
            chain.append(_shift(P, F))
            Q = _after_shift(kind, alpha, beta, Q, P)
            assert d >= len(Q) or not Q[d]
        if not Q:
            canonical = _make_map(kind, alpha, beta, [], F)
        else:
            resonant = [d for d, c in enumerate(Q) if c]
            notes.append("resonant degrees %s (alpha^d = beta) removed by dividing y" % resonant)
            chain.append(_divide(Q, F))
            if beta != 1:
                chain.append(_scale(beta, F))
            canonical = _make_map(kind, alpha, 1, [1], F)
    else:
        hyp = {"beta_is_one": beta == 1}
        while Q:
            d = len(Q) - 1
            if beta == 1:
                # (x+1)^(d+1) - x^(d+1) has leading term (d+1) x^d
                gamma = _div(-Q[d], d + 1)
                P = [0] * (d + 1) + [gamma]
            else:
                gamma = _div(-Q[d], 1 - beta)
                P = [0] * d + [gamma]
            chain.append(_shift(P, F))
            newQ = _after_shift(kind, alpha, beta, Q, P)
            assert len(newQ) < len(Q)
            Q = newQ
        canonical = _make_map(kind, alpha, beta, [], F)
    verified = _verify(g, chain, canonical) if verify else None
    if verify and not verified:
        raise AssertionError("conjugator chain does not reproduce the canonical form")
    return TriangularReduction(g, chain, canonical, hyp, verified, notes)


def _verify(g, chain, canonical):
    """Each step and the whole chain: H g H^-1 = canonical by exact composition."""
    cur = g
    for c in chain:
        cur = c.h.compose(cur).compose(c.h_inv)
    if not cur.equals(canonical):
        return False
    H, Hi = None, None
    for c in chain:
        H = c.h if H is None else c.h.compose(H)
        Hi = c.h_inv if Hi is None else Hi.compose(c.h_inv)
    if H is None:
        return g.equals(canonical)
    return H.compose(g).compose(Hi).equals(canonical)
