"""Diagonal and almost-diagonal automorphisms with constants in a torus context.

A diagonal automorphism (x, y) -> (alpha x, beta y) determines the
homomorphism Z^2 -> Gamma, (i, j) -> alpha^i beta^j, whose kernel is a
sublattice of Z^2.  Since Gamma = Z/N + Z^r, every question about kernels
and monomial conjugation becomes integer linear algebra.
"""
import math
from dataclasses import dataclass

from ..exactalg.torus import TorusConstant
from .snf import smith_normal_form, integer_kernel, solve_integer, xgcd, det


class ContextMismatch(ValueError):
    pass


class FiniteOrderError(ValueError):
    pass


@dataclass(frozen=True)
class DiagonalAuto:
    alpha: TorusConstant
    beta: TorusConstant

    def __post_init__(self):
        if self.alpha.group != self.beta.group:
            raise ContextMismatch("alpha and beta live in different contexts")

    @property
    def group(self):
        return self.alpha.group

    def __pow__(self, k):
        return DiagonalAuto(self.alpha ** k, self.beta ** k)

    def has_finite_order(self):
        return self.alpha.is_root_of_unity() and self.beta.is_root_of_unity()

    def __str__(self):
        return "(%s x, %s y)" % (self.alpha, self.beta)


@dataclass(frozen=True)
class AlmostDiagonalAuto:
    """(x, y) -> (alpha x, y + beta); beta is a nonzero scalar kept for presentation."""

    alpha: TorusConstant
    beta: object = 1

    def __pow__(self, k):
        return AlmostDiagonalAuto(self.alpha ** k, self.beta * k)


def lattice_basis_2d(gens):
    """Canonical row basis (Hermite form) of the subgroup of Z^2 spanned by ``gens``."""
    rows = [list(map(int, g)) for g in gens if any(g)]
    if not rows:
        return ()
    # gcd of first coordinates, carried along
    a, b = 0, 0
    rest = []
    for x, y in rows:
        if x == 0:
            rest.append(y)
            continue
        g, s, t = xgcd(a, x)
        # new pivot row s*(a,b) + t*(x,y); the other combination has zero first entry
        nb = s * b + t * y
        if a:
            rest.append((x // g) * b - (a // g) * y)
        a, b = g, nb
    c = 0
    for y in rest:
        c = math.gcd(c, y)
    if a == 0:
        return ((0, c),) if c else ()
    if c:
        b %= c
        return ((a, b), (0, c))
    return ((a, b),)


@dataclass(frozen=True)
class KernelLattice:
    generators: tuple
    profile: tuple

    @classmethod
    def from_generators(cls, gens):
        basis = lattice_basis_2d(gens)
        prof = (0, 0)
        if basis:
            D = smith_normal_form([list(r) for r in basis])[1]
            ds = [D[i][i] for i in range(len(basis))] + [0] * (2 - len(basis))
            prof = tuple(ds)
        return cls(basis, prof)

    @property
    def rank(self):
        return len(self.generators)

    def contains(self, v):
        return lattice_basis_2d(list(self.generators) + [tuple(v)]) == self.generators

    def transform(self, A):
        """Image of the lattice under the integer matrix A (acting on columns)."""
        return KernelLattice.from_generators(
            [(A[0][0] * x + A[0][1] * y, A[1][0] * x + A[1][1] * y) for x, y in self.generators])

    def __str__(self):
        return "<%s>" % ", ".join("(%d,%d)" % g for g in self.generators)


def _exponent_system(consts):
    """Rows of the map (i, j, ...) -> exponents of prod c^(i,j,...), plus the torsion row."""
    G = consts[0].group
    for c in consts[1:]:
        if c.group != G:
            raise ContextMismatch("constants from different contexts")
    free_rows = [[c.free[l] for c in consts] for l in range(G.r)]
    tors_row = [c.e0 for c in consts]
    return G, free_rows, tors_row


def kernel_lattice(psi):
    """Kernel of (i, j) -> alpha^i beta^j as a KernelLattice."""
    G, free_rows, tors = _exponent_system([psi.alpha, psi.beta])
    # unknowns (i, j, t): free parts vanish and i e0 + j f0 + t N = 0
    A = [row + [0] for row in free_rows] + [tors + [G.N]]
    ker = integer_kernel(A)
    return KernelLattice.from_generators([(v[0], v[1]) for v in ker])


def _unimodular(M):
    return len(M) == 2 and abs(det(M)) == 1


def monomial_conjugate(M, psi, check=True):
    """(alpha^a beta^b, alpha^c beta^d) for M = [[a, b], [c, d]] in GL(2, Z)."""
    M = [[int(v) for v in row] for row in M]
    if not _unimodular(M):
        raise ValueError("M must have determinant +1 or -1")
    (a, b), (c, d) = M
    out = DiagonalAuto(psi.alpha ** a * psi.beta ** b, psi.alpha ** c * psi.beta ** d)
    if check:
        # the kernel of the conjugate is (M^t)^-1 applied to the old kernel
        dt = det(M)
        tinv = [[d * dt, -c * dt], [-b * dt, a * dt]]
        assert kernel_lattice(out) == kernel_lattice(psi).transform(tinv)
    return out


def complete_row(u):
    """A matrix in SL(2, Z) whose first row is the primitive vector u."""
    p, q = u
    g, s, t = xgcd(p, q)
    if g != 1:
        raise ValueError("row %s is not primitive" % (u,))
    # p*s + q*t = 1, so [[p, q], [-t, s]] has determinant 1
    return [[p, q], [-t, s]]


def normalize_diagonal(psi):
    """(M, psi', k) with psi' = M(psi) whose kernel is generated by (k, 0)."""
    if psi.has_finite_order():
        raise FiniteOrderError("map has finite order; its kernel has rank 2")
    lat = kernel_lattice(psi)
    if lat.rank == 0:
        return [[1, 0], [0, 1]], psi, 0
    (x, y), = lat.generators
    k = math.gcd(x, y)
    M = complete_row((x // k, y // k))
    psi2 = monomial_conjugate(M, psi)
    assert kernel_lattice(psi2).generators == ((k, 0),)
    return M, psi2, k


@dataclass(frozen=True)
class Conjugate:
    """Witness M in GL(2, Z), or None with a textual certificate."""

    M: tuple = None
    certificate: str = ""

    verdict = "Conjugate"

    def to_json(self):
        out = {"verdict": self.verdict, "M": [list(r) for r in self.M] if self.M else None}
        if self.certificate:
            out["certificate"] = self.certificate
        return out


@dataclass(frozen=True)
class NotConjugate:
    reason: str

    verdict = "NotConjugate"

    def to_json(self):
        return {"verdict": self.verdict, "reason": self.reason}


@dataclass(frozen=True)
class Undecided:
    bound: int

    verdict = "Undecided"

    def to_json(self):
        return {"verdict": self.verdict, "bound": self.bound}


def _solve_row(psi, target):
    """Particular (a, b) with alpha^a beta^b = target, or None."""
    G, free_rows, tors = _exponent_system([psi.alpha, psi.beta, target])
    A = [row[:2] + [0] for row in free_rows] + [tors[:2] + [G.N]]
    rhs = [row[2] for row in free_rows] + [tors[2]]
    x, _ = solve_integer(A, rhs)
    if x is None:
        return None
    return (x[0], x[1])


def _det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _solve_linear_unit(D0, A, B):
    """Integers (t, s) with D0 + t A + s B in {1, -1}, or None."""
    g, p, q = xgcd(A, B)
    for e in (1, -1):
        rhs = e - D0
        if g == 0:
            if rhs == 0:
                return 0, 0
            continue
        if rhs % g == 0:
            f = rhs // g
            return p * f, q * f
    return None


def diag_conjugacy(psi, psi2, bound=50):
    """Decide whether psi2 = M(psi) for some M in GL(2, Z)."""
    if psi.group != psi2.group:
        raise ContextMismatch("maps live in different contexts")
    x0 = _solve_row(psi, psi2.alpha)
    if x0 is None:
        return NotConjugate("no exponents (a, b) with alpha^a beta^b = alpha'")
    y0 = _solve_row(psi, psi2.beta)
    if y0 is None:
        return NotConjugate("no exponents (c, d) with alpha^c beta^d = beta'")
    lat = kernel_lattice(psi)
    W = lat.generators

    def result(x, y):
        M = ((x[0], x[1]), (y[0], y[1]))
        assert monomial_conjugate(M, psi, check=False) == psi2
        return Conjugate(M)

    if lat.rank == 0:
        if abs(_det2(x0, y0)) == 1:
            return result(x0, y0)
        return NotConjugate("unique exponent matrix has determinant %d" % _det2(x0, y0))
    if lat.rank == 1:
        w = W[0]
        # det(x0 + s w, y0 + t w) = det(x0, y0) + t det(x0, w) + s det(w, y0)
        sol = _solve_linear_unit(_det2(x0, y0), _det2(x0, w), _det2(w, y0))
        if sol is None:
            return NotConjugate("determinant +-1 is not reachable on the solution coset")
        t, s = sol
        return result((x0[0] + s * w[0], x0[1] + s * w[1]), (y0[0] + t * w[0], y0[1] + t * w[1]))
    # finite index kernel: search the first row, then solve for the second exactly
    w1, w2 = W
    for radius in range(bound + 1):
        for s1 in range(-radius, radius + 1):
            for s2 in range(-radius, radius + 1):
                if max(abs(s1), abs(s2)) != radius:
                    continue
                x = (x0[0] + s1 * w1[0] + s2 * w2[0], x0[1] + s1 * w1[1] + s2 * w2[1])
                sol = _solve_linear_unit(_det2(x, y0), _det2(x, w1), _det2(x, w2))
                if sol is not None:
                    t1, t2 = sol
                    y = (y0[0] + t1 * w1[0] + t2 * w2[0], y0[1] + t1 * w1[1] + t2 * w2[1])
                    return result(x, y)
    return Undecided(bound)


def almost_diag_conjugacy(alpha, gamma):
    """(alpha x, y + 1) ~ (gamma x, y + 1) iff alpha = gamma^(+-1)."""
    return alpha == gamma or alpha == gamma.inverse()


def iterate_conjugacy_constraints(data, m, n, bound=50):
    """Can the m-th and n-th iterates of an elliptic map be conjugate?

    ``data`` is a DiagonalAuto or an AlmostDiagonalAuto.
    """
    if m * n == 0 or abs(m) == abs(n):
        raise ValueError("need mn != 0 and |m| != |n|")
    if isinstance(data, DiagonalAuto):
        return diag_conjugacy(data ** m, data ** n, bound)
    if isinstance(data, AlmostDiagonalAuto):
        a = data.alpha
        if (a ** (m - n)).is_one():
            return Conjugate(None, "alpha^(m-n) = 1")
        if (a ** (m + n)).is_one():
            return Conjugate(None, "alpha^(m+n) = 1")
        return NotConjugate("alpha^(m+n) != 1 and alpha^(m-n) != 1")
    raise TypeError("expected a DiagonalAuto or AlmostDiagonalAuto")
