"""Baumslag-Solitar groups BS(m, n) = <r, s | r s^m r^-1 = s^n> in the plane Cremona group."""
from dataclasses import dataclass
from fractions import Fraction

from ..cremap.maps import AffineBirMap


def _q(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def _translation(c):
    return AffineBirMap({(1, 0): 1}, {(0, 0): 1}, {(0, 1): 1, (0, 0): _q(c)} if c else {(0, 1): 1}, {(0, 0): 1})


def _scaling(a, b):
    return AffineBirMap({(1, 0): _q(a)}, {(0, 0): 1}, {(0, 1): _q(b)}, {(0, 0): 1})


@dataclass(frozen=True)
class BSVerdict:
    m: int
    n: int
    verdict: str
    r: object = None
    s: object = None
    relation_verified: object = None
    citation: str = ""

    def to_json(self):
        out = {"m": self.m, "n": self.n, "verdict": self.verdict, "citation": self.citation}
        if self.r is not None:
            out["r"] = str(self.r)
            out["s"] = str(self.s)
            out["relation_verified"] = self.relation_verified
        return out


def verify_bs_relation(r, r_inv, s_power_m, s_power_n):
    return r.compose(s_power_m).compose(r_inv).equals(s_power_n)


def bs_witness(m, n):
    """(r, r^-1, s) with s = (x, y + 1) and r scaling y by n/m.

    When |m| = |n| = 1 the x-coordinate is also scaled by 2 so that r has
    infinite order, as it must in BS(1, +-1).
    """
    c = 2 if abs(m) == abs(n) == 1 else 1
    ratio = Fraction(n, m)
    return _scaling(c, ratio), _scaling(Fraction(1, c), 1 / ratio), _translation(1)


def bs_check(m, n):
    if m * n == 0:
        raise ValueError("BS(m, n) needs mn != 0")
    am, an = abs(m), abs(n)
    if len({am, an, 1}) == 3:
        return BSVerdict(m, n, "NoEmbedding", citation="no embedding when |m|, |n| and 1 are distinct")
    if am == 1 or an == 1:
        r, r_inv, s = bs_witness(m, n)
        ok = verify_bs_relation(r, r_inv, _translation(m), _translation(n))
        return BSVerdict(m, n, "KnownEmbedding", r, s, ok,
                         citation="explicit construction in the affine group of the y-line")
    return BSVerdict(m, n, "Unresolved", citation="|m| = |n| != 1 is not covered")
