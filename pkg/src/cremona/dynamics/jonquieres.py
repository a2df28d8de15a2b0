"""Maps preserving a pencil of lines: base-point counts and the integer mu."""
from dataclasses import dataclass
from fractions import Fraction

from ..cremap.maps import iterate_degrees, RationalMapP2, DEFAULT_BIT_CAP
from ..exactalg.gcd import gcd3
from ..exactalg.hompoly import HomPoly
from .growth import theil_sen_slope, tail_indices

MU_TOLERANCE = Fraction(1, 10)


class NonIntegralMu(ValueError):
    pass


@dataclass(frozen=True)
class MultiplicityProfile:
    degree: int
    multiplicities: tuple


def validate_profile(p):
    """Homaloidal conditions: sum m = 3(d-1) and sum m^2 = d^2 - 1."""
    ms = list(p.multiplicities)
    return sum(ms) == 3 * (p.degree - 1) and sum(m * m for m in ms) == p.degree ** 2 - 1


def jonquieres_bp_count(d):
    """b(phi) for a degree-d map preserving a pencil of lines: 2d - 1 (0 if d = 1)."""
    if d < 1:
        raise ValueError("degree must be positive")
    return 0 if d == 1 else 2 * d - 1


def jonquieres_profile(d):
    """One point of multiplicity d-1 and 2(d-1) simple points."""
    if d == 1:
        return MultiplicityProfile(1, ())
    return MultiplicityProfile(d, (d - 1,) + (1,) * (2 * (d - 1)))


def pencil_forms(point):
    """Two independent linear forms vanishing at ``point``."""
    p = list(point)
    rows = []
    for i in range(3):
        for j in range(i + 1, 3):
            row = [0, 0, 0]
            row[i], row[j] = p[j], -p[i]
            if any(row):
                rows.append(row)
    a = rows[0]
    for b in rows[1:]:
        # keep a form not proportional to a
        if any(a[i] * b[j] - a[j] * b[i] for i in range(3) for j in range(3)):
            return HomPoly.linear(a), HomPoly.linear(b)
    raise ValueError("degenerate point")


def preserves_pencil(phi, point):
    """True if lines through ``point`` pull back under phi to lines through it."""
    l1, l2 = pencil_forms(point)
    a = l1.substitute(phi.components)
    b = l2.substitute(phi.components)
    zero = HomPoly.zero(a.degree, a.field)
    g = gcd3(a, b, zero)
    a, b = a.divmod_exact(g), b.divmod_exact(g)
    if a.degree != 1:
        return False
    return not a.evaluate(point) and not b.evaluate(point)


@dataclass(frozen=True)
class MuReport:
    mu: int
    raw: Fraction
    degrees: list
    pencil_verified: object

    def to_json(self):
        from ..report import rat
        return {"mu": self.mu, "raw": rat(self.raw), "degrees": list(self.degrees),
                "pencil_verified": self.pencil_verified}


def mu_from_degrees(degrees, tolerance=MU_TOLERANCE):
    """2 x (robust tail slope), rounded; raises if not within tolerance of an integer."""
    ks, tail = tail_indices(degrees)
    raw = 2 * theil_sen_slope(ks, tail)
    mu = round(raw)
    if abs(raw - mu) > tolerance:
        raise NonIntegralMu("2 x slope = %s is not within %s of an integer" % (raw, tolerance))
    return mu, raw


def mu_estimate(phi, pencil_point=None, K=20, bit_cap=DEFAULT_BIT_CAP, degrees=None):
    """The dynamical number of base-points from the slope of deg phi^k.

    With ``pencil_point`` the pencil of lines through it is checked to be
    preserved; a failed check raises ValueError.  Without it the result is
    slope-only and ``pencil_verified`` is None.
    """
    verified = None
    if pencil_point is not None:
        verified = preserves_pencil(phi, pencil_point)
        if not verified:
            raise ValueError("map does not preserve the pencil of lines through %s" % (pencil_point,))
    d = degrees if degrees is not None else iterate_degrees(phi, K, bit_cap)
    mu, raw = mu_from_degrees(d)
    return MuReport(mu, raw, d, verified)


def is_linear_map(phi):
    return isinstance(phi, RationalMapP2) and phi.degree == 1
