"""Small helpers for rational functions in x extracted from affine maps."""
from fractions import Fraction

from ..exactalg.gcd import up_trim, up_mul, up_gcd, up_divexact, up_sub, up_scale, _inv


def bv_mul(a, b):
    out = {}
    for (i, j), c in a.items():
        for (k, l), d in b.items():
            m = (i + k, j + l)
            out[m] = out.get(m, 0) + c * d
    return {m: c for m, c in out.items() if c}


def bv_sub(a, b):
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) - c
    return {m: c for m, c in out.items() if c}


def bv_dy(a):
    return {(i, j - 1): c * j for (i, j), c in a.items() if j}


def is_y_free(num, den):
    """num/den does not depend on y: num_y den - num den_y = 0."""
    return not bv_sub(bv_mul(bv_dy(num), den), bv_mul(num, bv_dy(den)))


def restrict_y(p, c):
    """p(x, c) as a coefficient list in x."""
    deg = max((i for i, _ in p), default=0)
    out = [0] * (deg + 1)
    for (i, j), v in p.items():
        out[i] = out[i] + v * Fraction(c) ** j
    return up_trim([_q(v) for v in out])


def _q(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def reduced_x_function(num, den):
    """(N, D) in lowest terms with D monic, for a y-free num/den; None if it depends on y."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not is_y_free(num, den):
        return None
    for c in range(0, 50):
        D = restrict_y(den, c)
        if D:
            return reduce_fraction(restrict_y(num, c), D)
    raise ValueError("could not find a regular value of y")


def reduce_fraction(N, D):
    N, D = up_trim(N), up_trim(D)
    if not N:
        return [], [1]
    g = up_gcd(N, D)
    N, D = up_divexact(N, g), up_divexact(D, g)
    lc = _inv(D[-1])
    return up_scale(N, lc), up_scale(D, lc)


def scale_arg(P, a):
    """P(a x)."""
    out = []
    p = 1
    for c in P:
        out.append(_q(c * p))
        p = p * a
    return up_trim(out)


def same_fraction(N1, D1, N2, D2):
    return not up_sub(up_mul(N1, D2), up_mul(N2, D1))
