"""Multiplicative constants modeled in a finitely generated abelian group.

A context Gamma = Z/N + Z^r stands for the subgroup of C* generated by a
primitive N-th root of unity zeta_N and r multiplicatively independent
numbers g_1..g_r.  An element zeta_N^e0 * g_1^e1 * ... * g_r^er is stored
by its exponents.
"""
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class TorusGroup:
    N: int = 1
    r: int = 0

    def __post_init__(self):
        if self.N < 1 or self.r < 0:
            raise ValueError("need N >= 1 and r >= 0")

    def __call__(self, e0=0, *free):
        if len(free) == 1 and isinstance(free[0], (list, tuple)):
            free = tuple(free[0])
        if len(free) != self.r:
            raise ValueError("expected %d free exponents, got %d" % (self.r, len(free)))
        return TorusConstant(self, int(e0) % self.N, tuple(int(e) for e in free))

    def one(self):
        return TorusConstant(self, 0, (0,) * self.r)

    def zeta(self):
        return self(1, (0,) * self.r)

    def gen(self, i):
        """The i-th free generator g_i, 1-based."""
        e = [0] * self.r
        e[i - 1] = 1
        return self(0, e)

    def __str__(self):
        return "torus: N=%d, free=%d" % (self.N, self.r)


@dataclass(frozen=True)
class TorusConstant:
    group: TorusGroup
    e0: int
    free: tuple

    def _check(self, other):
        if not isinstance(other, TorusConstant) or other.group != self.group:
            raise ValueError("torus constants from different contexts")

    def __mul__(self, other):
        self._check(other)
        return TorusConstant(self.group, (self.e0 + other.e0) % self.group.N,
                             tuple(a + b for a, b in zip(self.free, other.free)))

    def __pow__(self, k):
        k = int(k)
        return TorusConstant(self.group, (self.e0 * k) % self.group.N,
                             tuple(a * k for a in self.free))

    def inverse(self):
        return self ** -1

    def __truediv__(self, other):
        return self * other.inverse()

    def is_one(self):
        return self.e0 == 0 and not any(self.free)

    def is_root_of_unity(self):
        return not any(self.free)

    def order(self):
        """Exact order, or math.inf."""
        if any(self.free):
            return math.inf
        return self.group.N // math.gcd(self.e0, self.group.N)

    def exponents(self):
        return (self.e0,) + self.free

    def __str__(self):
        return "(%d; %s)" % (self.e0, ",".join(str(e) for e in self.free))


def torus_op(u, v, op):
    """Group operation on torus constants: '*', ('pow', k) or 'order'."""
    if op in ("*", "×", "mul"):
        return u * v
    if isinstance(op, tuple) and op[0] == "pow":
        return u ** op[1]
    if op == "pow":
        return u ** v
    if op == "order":
        return u.order()
    raise ValueError("unknown torus operation %r" % (op,))


def parse_torus_header(text):
    """Parse 'torus: N=5, free=2'."""
    body = text.split(":", 1)[1] if ":" in text else text
    vals = {}
    for part in body.split(","):
        k, _, v = part.partition("=")
        vals[k.strip()] = int(v)
    return TorusGroup(vals.get("N", 1), vals.get("free", 0))


def parse_torus_constant(group, text):
    """Parse '(e0; e1,e2)'."""
    s = text.strip().strip("()")
    head, _, tail = s.partition(";")
    free = [int(e) for e in tail.split(",") if e.strip()]
    return group(int(head), free)
