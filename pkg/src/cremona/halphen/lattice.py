"""Picard lattice of the plane blown up in r points, and Halphen translations.

Sign convention: a class is stored as (d; a_1, ..., a_r) and means
d L - a_1 E_1 - ... - a_r E_r.  The intersection form is then
d d' - sum a_i a_i', the canonical class K = -3L + E_1 + ... + E_r is
(-3; -1, ..., -1), K.K = 9 - r and K.L = -3.
"""
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class PicClass:
    d: int
    a: tuple

    @property
    def r(self):
        return len(self.a)

    @classmethod
    def L(cls, r):
        return cls(1, (0,) * r)

    @classmethod
    def E(cls, i, r):
        """The exceptional class E_i (1-based): stored with a_i = -1."""
        a = [0] * r
        a[i - 1] = -1
        return cls(0, tuple(a))

    @classmethod
    def K(cls, r):
        return cls(-3, (-1,) * r)

    @classmethod
    def zero(cls, r):
        return cls(0, (0,) * r)

    @classmethod
    def from_vector(cls, v):
        v = [int(x) for x in v]
        return cls(v[0], tuple(v[1:]))

    def vector(self):
        return [self.d] + list(self.a)

    def _check(self, other):
        if self.r != other.r:
            raise LatticeError("classes from lattices of different rank")

    def __add__(self, other):
        self._check(other)
        return PicClass(self.d + other.d, tuple(x + y for x, y in zip(self.a, other.a)))

    def __neg__(self):
        return PicClass(-self.d, tuple(-x for x in self.a))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return PicClass(self.d * k, tuple(x * k for x in self.a))

    __rmul__ = __mul__

    def is_zero(self):
        return self.d == 0 and not any(self.a)

    def __str__(self):
        parts = []
        if self.d:
            parts.append((self.d < 0, "%dL" % abs(self.d) if abs(self.d) != 1 else "L"))
        for i, x in enumerate(self.a, 1):
            if x:
                c = -x
                parts.append((c < 0, "E%d" % i if abs(c) == 1 else "%dE%d" % (abs(c), i)))
        if not parts:
            return "0"
        s = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, term in parts[1:]:
            s += (" - " if neg else " + ") + term
        return s


def inner(D, E):
    """Intersection number d d' - sum a_i a_i'."""
    D._check(E)
    return D.d * E.d - sum(x * y for x, y in zip(D.a, E.a))


def parse_class(text, r=9):
    """Parse strings like '3L -E1 -E2' or 'E2+E3-2E6'."""
    s = text.replace(" ", "").replace("−", "-")
    if not s:
        raise LatticeError("empty class")
    d = 0
    a = [0] * r
    pos = 0
    pattern = re.compile(r"([+-]?)(\d*)(L|E(\d+))")
    for m in pattern.finditer(s):
        if m.start() != pos:
            raise LatticeError("cannot parse class %r" % text)
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        c = sign * (int(m.group(2)) if m.group(2) else 1)
        if m.group(3) == "L":
            d += c
        else:
            i = int(m.group(4))
            if not 1 <= i <= r:
                raise LatticeError("E%d outside a lattice with r=%d" % (i, r))
            a[i - 1] -= c
    if pos != len(s):
        raise LatticeError("cannot parse class %r" % text)
    return PicClass(d, tuple(a))


def gram(r):
    return np.diag([1] + [-1] * r).astype(object)


@dataclass(frozen=True)
class HalphenData:
    m: int
    delta: PicClass

    def __post_init__(self):
        if self.m < 1:
            raise LatticeError("m must be a positive integer")

    @property
    def kappa(self):
        return kappa(self)


class LatticeMap:
    """Integer matrix acting on column vectors (d, a_1, ..., a_r)."""

    def __init__(self, M):
        self.M = np.array(M, dtype=object)

    @property
    def r(self):
        return self.M.shape[0] - 1

    def __call__(self, D):
        return PicClass.from_vector(self.M.dot(np.array(D.vector(), dtype=object)))

    def __matmul__(self, other):
        return LatticeMap(self.M.dot(other.M))

    def __pow__(self, n):
        out = LatticeMap(np.identity(self.M.shape[0], dtype=object))
        base = self
        if n < 0:
            raise LatticeError("negative powers not supported")
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, LatticeMap) and self.M.shape == other.M.shape and bool((self.M == other.M).all())

    def __hash__(self):
        return hash(tuple(self.M.flatten().tolist()))

    def preserves_form(self):
        G = gram(self.r)
        return bool((self.M.T.dot(G).dot(self.M) == G).all())

    def fixes(self, D):
        return self(D) == D

    def tolist(self):
        return [[int(v) for v in row] for row in self.M]

    def __repr__(self):
        return "LatticeMap(%s)" % self.tolist()


def _require_admissible(h):
    r = h.delta.r
    if r != 9:
        raise LatticeError("Halphen translations need r = 9 (got r = %d)" % r)
    if inner(h.delta, PicClass.K(r)) != 0:
        raise LatticeError("Delta.K must be 0")


def translate(h, D):
    """D - m (D.K) Delta + gamma K with gamma = -(m^2/2)(D.K) Delta^2 + m (D.Delta)."""
    _require_admissible(h)
    K = PicClass.K(D.r)
    m, Delta = h.m, h.delta
    dk = inner(D, K)
    gamma = -Fraction(m * m, 2) * dk * inner(Delta, Delta) + m * inner(D, Delta)
    if gamma.denominator != 1:
        raise LatticeError("gamma = %s is not an integer" % gamma)
    return D - Delta * (m * dk) + K * int(gamma)


def halphen_translation(h):
    """Matrix of the translation D -> D - m(D.K)Delta + gamma(D) K."""
    _require_admissible(h)
    r = h.delta.r
    basis = [PicClass.from_vector([1 if i == j else 0 for i in range(r + 1)]) for j in range(r + 1)]
    cols = [translate(h, e).vector() for e in basis]
    return LatticeMap(np.array(cols, dtype=object).T)


def kappa(h):
    """9 m^2 (-Delta^2) / 2."""
    r = h.delta.r
    K = PicClass.K(r)
    if inner(h.delta, K) != 0:
        raise LatticeError("Delta.K must be 0")
    sq = inner(h.delta, h.delta)
    if sq >= 0 and parity_check(h.delta) != "zero_multiple_of_K":
        raise LatticeError("Delta^2 >= 0 but Delta is not a multiple of K")
    return Fraction(9 * h.m * h.m * -sq, 2)


def degree_growth_closed_form(Lam, h, n):
    """Lam^2 - (m^2/2)(Lam.K)^2 Delta^2 n^2, as an integer."""
    K = PicClass.K(Lam.r)
    v = Fraction(inner(Lam, Lam)) - Fraction(h.m ** 2, 2) * inner(Lam, K) ** 2 * inner(h.delta, h.delta) * n * n
    if v.denominator != 1:
        raise LatticeError("closed form is not integral")
    return int(v)


def degree_growth_matrix(Lam, h, n):
    """inner(Lam, T^n Lam) computed with the translation matrix."""
    T = halphen_translation(h)
    return inner(Lam, (T ** n)(Lam))


def parity_check(Delta):
    """'even_negative', 'zero_multiple_of_K' or 'violation' for Delta with Delta.K = 0."""
    r = Delta.r
    if r != 9:
        raise LatticeError("parity check needs r = 9")
    K = PicClass.K(r)
    if inner(Delta, K) != 0:
        raise LatticeError("Delta.K must be 0")
    sq = inner(Delta, Delta)
    if sq % 2:
        return "violation"
    if sq < 0:
        return "even_negative"
    # equality case: Delta proportional to K, i.e. all a_i equal and d = 3 a_i
    if sq == 0 and len(set(Delta.a)) == 1 and Delta.d == 3 * Delta.a[0]:
        return "zero_multiple_of_K"
    return "violation"


def is_multiple_of_K(Delta):
    return len(set(Delta.a)) == 1 and Delta.d == 3 * Delta.a[0]


def permutation_map(perm, r):
    """Lattice map sending E_i to E_perm(i) (perm a dict, 1-based) and fixing L."""
    M = np.zeros((r + 1, r + 1), dtype=object)
    M[0, 0] = 1
    for i in range(1, r + 1):
        M[perm.get(i, i), i] = 1
    return LatticeMap(M)


def permute_class(perm, D):
    a = [0] * D.r
    for i, x in enumerate(D.a, 1):
        a[perm.get(i, i) - 1] = x
    return PicClass(D.d, tuple(a))


@dataclass(frozen=True)
class Example94Result:
    kappa: Fraction
    kappa_power: Fraction
    delta_sum: PicClass
    delta_sum_square: int
    matrix_identity: bool
    power: int

    def to_json(self):
        from ..report import rat
        return {"kappa": rat(self.kappa), "kappa_power": rat(self.kappa_power),
                "delta_sum": str(self.delta_sum), "delta_sum_square": self.delta_sum_square,
                "matrix_identity": self.matrix_identity, "power": self.power}


ALPHA_HAT = {2: 3, 3: 4, 4: 5, 5: 2, 6: 7, 7: 6}


def example_9_4_pipeline():
    """kappa for the order-4 rotation composed with the translation by E2 - E6.

    Builds the permutation matrix A of the rotation on E2..E7, the translation
    T for Delta = E2 - E6, forms the sum of the four rotated Deltas, checks
    (A T)^4 = T_sum as matrices, and returns kappa(T_sum) / 16.
    """
    r = 9
    A = permutation_map(ALPHA_HAT, r)
    Delta = PicClass.E(2, r) - PicClass.E(6, r)
    total = PicClass.zero(r)
    cur = Delta
    for _ in range(4):
        total = total + cur
        cur = permute_class(ALPHA_HAT, cur)
    T = halphen_translation(HalphenData(1, Delta))
    Tsum = halphen_translation(HalphenData(1, total))
    identity = (A @ T) ** 4 == Tsum
    kp = kappa(HalphenData(1, total))
    return Example94Result(kp / 16, kp, total, inner(total, total), identity, 4)
