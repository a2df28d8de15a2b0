"""Named maps used throughout the tests and the CLI fixtures."""
import random

from ..exactalg.fields import QQ
from .maps import make_map, RationalMapP2, compose


def sigma(field=QQ):
    """The standard quadratic involution (yz : xz : xy)."""
    return make_map(["y*z", "x*z", "x*y"], field)


def f_alpha_beta(alpha=2, beta=3, field=QQ):
    """((alpha x + y) z : beta y (x + z) : z (x + z)), a map preserving the lines through (1:0:0)."""
    a, b = field(alpha), field(beta)
    x, y, z = _gens(field)
    return RationalMapP2([(x.scale(a) + y) * z, (y * (x + z)).scale(b), z * (x + z)], field)


def delpezzo_h(alpha=2, beta=3, field=QQ):
    """(alpha xz : beta xy : yz)."""
    x, y, z = _gens(field)
    return RationalMapP2([(x * z).scale(alpha), (x * y).scale(beta), y * z], field)


def jordan_psi():
    """(xz - y(y - z)/2 : yz : z^2)."""
    return make_map(["x*z - (1/2)*y*(y - z)", "y*z", "z^2"])


def jordan_psi_inverse():
    """Affine inverse of (x - y(y-1)/2, y) is (x + y(y-1)/2, y)."""
    return make_map(["x*z + (1/2)*y*(y - z)", "y*z", "z^2"])


def jordan_map():
    return make_map(["x + y", "y + z", "z"])


def jordan_target():
    return make_map(["x", "y + z", "z"])


def generic_linear(seed=0, bound=5):
    """A random invertible integer 3x3 matrix (as a list of rows)."""
    rng = random.Random(seed)
    while True:
        A = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        if _det3(A) != 0:
            return A


# fixed data for the quadratic conjugate of f_{2,3}
QUAD_A = [[1, 2, -1], [0, 1, 3], [2, -1, 1]]
QUAD_B = [[1, 1, 0], [-1, 2, 1], [3, 0, 1]]


def quadratic_conjugator():
    """(psi, psi_inv) with psi = A o sigma o B a generic quadratic map."""
    A = RationalMapP2.linear(QUAD_A)
    B = RationalMapP2.linear(QUAD_B)
    Ai = RationalMapP2.linear(_inv3(QUAD_A))
    Bi = RationalMapP2.linear(_inv3(QUAD_B))
    s = sigma()
    psi = compose(A, compose(s, B))
    psi_inv = compose(Bi, compose(s, Ai))
    return psi, psi_inv


HYPERBOLIC_A = [[2, -1, 3], [1, 4, -2], [-3, 1, 5]]


def sigma_linear(A=None):
    """sigma o A for an invertible integer matrix A."""
    A = A or HYPERBOLIC_A
    return compose(sigma(), RationalMapP2.linear(A))


def _gens(field):
    from ..exactalg.hompoly import HomPoly
    return HomPoly.gens(field)


def _det3(A):
    return (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
            - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
            + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))


def _inv3(A):
    from fractions import Fraction
    d = Fraction(_det3(A))
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            m = [[A[r][c] for c in range(3) if c != j] for r in range(3) if r != i]
            cof[i][j] = (-1) ** (i + j) * (m[0][0] * m[1][1] - m[0][1] * m[1][0])
    return [[cof[j][i] / d for j in range(3)] for i in range(3)]
