"""JSON helpers shared by the reports and the command line."""
from fractions import Fraction

from .exactalg.fields import NFElement

SCHEMA_VERSION = "1.0.0"


def report_schema_version():
    return SCHEMA_VERSION


def rat(q):
    """A rational as {"num": n, "den": d}."""
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def unrat(obj):
    return Fraction(obj["num"], obj["den"])


def scalar(c):
    """JSON form of a field element: a rational or a list of rational coordinates."""
    if isinstance(c, NFElement):
        return {"coords": [rat(v) for v in c.coeffs]}
    return rat(c)
