"""Embed nonzero rationals into a torus context: the sign gives Z/2, each prime a free generator."""
from fractions import Fraction

import flint

from ..exactalg.torus import TorusGroup


def prime_exponents(q):
    """{p: v_p(q)} for a nonzero rational q."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no prime factorization")
    out = {}
    for part, sign in ((q.numerator, 1), (q.denominator, -1)):
        facs = flint.fmpz(abs(part)).factor()
        for p, e in facs:
            out[int(p)] = out.get(int(p), 0) + sign * int(e)
    return out


def rational_torus(values):
    """(group, constants, primes) modelling the given rationals exactly.

    Distinct primes are multiplicatively independent, so kernels and
    conjugacy questions computed in this context are exact.
    """
    facs = [prime_exponents(v) for v in values]
    primes = sorted({p for f in facs for p in f})
    G = TorusGroup(2, len(primes))
    consts = [G(0 if Fraction(v) > 0 else 1, [f.get(p, 0) for p in primes]) for v, f in zip(values, facs)]
    return G, consts, primes
