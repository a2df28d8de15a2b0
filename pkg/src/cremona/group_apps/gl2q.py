"""Embeddings rho of GL(2, Q) into the Cremona group.

rho([[a, b], [c, d]]) = (x chi(ad - bc) / (cy + d)^k, (ay + b) / (cy + d))
with k odd and chi: Q* -> Q* given on -1 and finitely many primes
(chi is 1 on the primes not listed).
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..cremap.maps import AffineBirMap
from ..torus_normal.qtorus import prime_exponents
from ..torus_normal.snf import integer_kernel


class EmbeddingError(ValueError):
    pass


def _q(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def _poly_pow(p, k):
    out = {(0, 0): 1}
    for _ in range(k):
        nxt = {}
        for (i, j), c in out.items():
            for (i2, j2), c2 in p.items():
                m = (i + i2, j + j2)
                nxt[m] = nxt.get(m, 0) + c * c2
        out = {m: c for m, c in nxt.items() if c}
    return out


def _linear_y(a, b):
    return {m: _q(c) for m, c in (((0, 1), a), ((0, 0), b)) if c}


def chi_value(chi, q):
    """chi(q) for a nonzero rational q from the values on -1 and primes."""
    q = Fraction(q)
    v = Fraction(chi.get(-1, 1)) if q < 0 else Fraction(1)
    for p, e in prime_exponents(q).items():
        v *= Fraction(chi.get(p, 1)) ** e
    return _q(v)


def rho_map(k, chi, A):
    """The map attached to the matrix A for exponent k (any sign) and chi."""
    (a, b), (c, d) = [[Fraction(v) for v in row] for row in A]
    det = a * d - b * c
    if det == 0:
        raise EmbeddingError("singular matrix")
    lin = _linear_y(c, d)
    x_coeff = chi_value(chi, det)
    if k >= 0:
        n1, d1 = {(1, 0): x_coeff}, _poly_pow(lin, k)
    else:
        n1 = {(i + 1, j): c2 * x_coeff for (i, j), c2 in _poly_pow(lin, -k).items()}
        d1 = {(0, 0): 1}
    return AffineBirMap(n1, d1, _linear_y(a, b), lin)


def parse_chi(text):
    """'2->4,3->9,-1->1' as {2: 4, 3: 9, -1: 1}."""
    out = {}
    if not text or not text.strip():
        return out
    for part in text.split(","):
        key, sep, val = part.partition("->")
        if not sep:
            raise ValueError("expected 'p->value' in %r" % part)
        p = int(key)
        if p != -1 and (p < 2 or prime_exponents(p) != {p: 1}):
            raise ValueError("%d is neither -1 nor a prime" % p)
        v = Fraction(val.strip())
        if v == 0:
            raise ValueError("chi takes nonzero values")
        if p == -1 and v * v != 1:
            raise ValueError("chi(-1) must be 1 or -1")
        out[p] = _q(v)
    return out


M_ROT = ((0, 1), (-1, 0))
T1 = ((1, 1), (0, 1))


def _matmul(A, B):
    return tuple(tuple(sum(Fraction(A[i][l]) * Fraction(B[l][j]) for l in range(2)) for j in range(2))
                 for i in range(2))


def _matinv(A):
    (a, b), (c, d) = [[Fraction(v) for v in row] for row in A]
    det = a * d - b * c
    return ((d / det, -b / det), (-c / det, a / det))


def _is_identity(phi):
    return phi.equals(AffineBirMap({(1, 0): 1}, {(0, 0): 1}, {(0, 1): 1}, {(0, 0): 1}))


@dataclass(frozen=True)
class GL2QEmbedding:
    k: int
    chi: dict = field(default_factory=dict)
    validate: bool = True

    def __post_init__(self):
        if self.k < 1:
            raise EmbeddingError("k must be a positive odd integer")
        if self.validate:
            # rho(M)^2 must not be the identity since M^2 = -I
            rM = self.build(M_ROT)
            if _is_identity(rM.compose(rM)):
                raise EmbeddingError("rho(M)^2 = id although M^2 = -I: k = %d is even" % self.k)
        if self.k % 2 == 0:
            raise EmbeddingError("k must be odd")

    def build(self, A):
        return rho_map(self.k, self.chi, A)


def gl2q_build(e, A):
    return e.build(A)


@dataclass
class GL2QReport:
    pairs_checked: int
    failures: list
    relations: dict

    @property
    def ok(self):
        return not self.failures and all(self.relations.values())

    def to_json(self):
        return {"pairs_checked": self.pairs_checked, "failures": self.failures,
                "relations": dict(self.relations), "ok": self.ok}


def random_matrix(rng, lo=-3, hi=3):
    while True:
        A = tuple(tuple(rng.randint(lo, hi) for _ in range(2)) for _ in range(2))
        if A[0][0] * A[1][1] - A[0][1] * A[1][0]:
            return A


def sample_pairs(count, seed=0, lo=-3, hi=3, primes=None):
    """Random nonsingular pairs; with ``primes`` only determinants supported on them."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        A, B = random_matrix(rng, lo, hi), random_matrix(rng, lo, hi)
        if primes is not None:
            dets = [X[0][0] * X[1][1] - X[0][1] * X[1][0] for X in (A, B)]
            if any(set(prime_exponents(d)) - set(primes) for d in dets):
                continue
        out.append((A, B))
    return out


def gl2q_verify(e, pairs, diag_values=(2, 3, -1, Fraction(1, 2))):
    """Check the homomorphism property on pairs and the defining relations."""
    failures = []
    for A, B in pairs:
        lhs = e.build(_matmul(A, B))
        rhs = e.build(A).compose(e.build(B))
        if not lhs.equals(rhs):
            failures.append({"A": [list(map(str, r)) for r in A], "B": [list(map(str, r)) for r in B]})
    rM, rT = e.build(M_ROT), e.build(T1)
    mt = rM.compose(rT)
    rM2 = rM.compose(rM)
    rel = {
        "(rho(M) rho(t1))^3 = id": _is_identity(mt.compose(mt).compose(mt)),
        "rho(M)^4 = id": _is_identity(rM2.compose(rM2)),
        "rho(M)^2 != id": not _is_identity(rM2),
    }
    ok = True
    for a in diag_values:
        D = ((a, 0), (0, 1))
        conj = e.build(D).compose(rT).compose(e.build(_matinv(D)))
        ok = ok and conj.equals(e.build(((1, a), (0, 1))))
    rel["rho(d_a) rho(t1) rho(d_a)^-1 = rho(t_a)"] = ok
    return GL2QReport(len(pairs), failures, rel)


@dataclass(frozen=True)
class InjectivityCertificate:
    injective: bool
    primes: tuple
    matrix: tuple
    kernel: tuple
    reason: str

    def to_json(self):
        return {"injective": self.injective, "primes": list(self.primes),
                "matrix": [list(r) for r in self.matrix], "kernel": [list(v) for v in self.kernel],
                "reason": self.reason}


def gl2q_injectivity(e):
    """Is a -> chi(a^2) / a^k injective on Q*?

    Write a = (-1)^s prod p^v_p.  Then chi(a^2) is positive, so a must be
    positive (k is odd) and the exponents satisfy
    sum_p v_p (2 e(chi(p)) - k e(p)) = 0 over prime coordinates e(.).
    Injective iff this integer system has only the zero solution.
    """
    if e.k % 2 == 0:
        return InjectivityCertificate(False, (), (), (), "k even: -1 maps to 1")
    variables = sorted({p for p in e.chi if p > 0}
                       | {q for p, v in e.chi.items() if p > 0 for q in prime_exponents(v)})
    if not variables:
        return InjectivityCertificate(True, (), (), (), "chi trivial: a -> a^-k is injective for k odd")
    coords = sorted(set(variables) | {q for v in e.chi.values() for q in prime_exponents(v)})
    cols = []
    for p in variables:
        ev = prime_exponents(e.chi.get(p, 1))
        cols.append([2 * ev.get(q, 0) - (e.k if q == p else 0) for q in coords])
    A = [[cols[j][i] for j in range(len(variables))] for i in range(len(coords))]
    ker = integer_kernel(A)
    inj = not ker
    reason = "only a = 1 solves chi(a^2) = a^k" if inj else "nontrivial a with chi(a^2) = a^k"
    return InjectivityCertificate(inj, tuple(variables), tuple(tuple(r) for r in A),
                                  tuple(tuple(v) for v in ker), reason)
