"""Shape of maps commuting with a diagonal or almost-diagonal automorphism."""
from dataclasses import dataclass

from ..cremap.maps import AffineBirMap, commutes
from ..exactalg.fields import QQ
from .diagonal import DiagonalAuto, kernel_lattice
from .qtorus import rational_torus
from .univariate import reduced_x_function, scale_arg, same_fraction, bv_sub, bv_mul


@dataclass(frozen=True)
class EllipticMap:
    """(alpha x, beta y) when kind == 'diagonal', (alpha x, y + beta) when kind == 'translation'.

    ``k`` is the generator (k, 0) of the kernel of (i, j) -> alpha^i beta^j
    in the diagonal case.  Over Q it is computed; over a number field it
    must be supplied.
    """

    kind: str
    alpha: object
    beta: object = 1
    field: object = QQ
    k: object = None

    def __post_init__(self):
        if self.kind not in ("diagonal", "translation"):
            raise ValueError("kind must be 'diagonal' or 'translation'")
        if not self.alpha or not self.beta:
            raise ValueError("alpha and beta must be nonzero")

    def to_affine(self):
        a, b = self.alpha, self.beta
        if self.kind == "diagonal":
            return AffineBirMap({(1, 0): a}, {(0, 0): 1}, {(0, 1): b}, {(0, 0): 1}, self.field)
        return AffineBirMap({(1, 0): a}, {(0, 0): 1}, {(0, 1): 1, (0, 0): b}, {(0, 0): 1}, self.field)

    def kernel_k(self):
        if self.kind != "diagonal":
            raise ValueError("kernel exponent only for diagonal maps")
        if self.k is not None:
            return self.k
        if self.field is not QQ:
            raise ValueError("supply k for constants outside Q")
        _, (ga, gb), _ = rational_torus([self.alpha, self.beta])
        lat = kernel_lattice(DiagonalAuto(ga, gb))
        if lat.rank == 0:
            return 0
        if lat.rank == 1 and lat.generators[0][1] == 0:
            return lat.generators[0][0]
        raise ValueError("kernel %s is not generated by some (k, 0); normalize first" % lat)


@dataclass(frozen=True)
class InForm:
    eta: tuple
    R: tuple
    commutes: bool = True

    verdict = "InForm"

    def to_json(self):
        from ..report import scalar
        return {"verdict": self.verdict,
                "eta": {"num": [scalar(c) for c in self.eta[0]], "den": [scalar(c) for c in self.eta[1]]},
                "R": {"num": [scalar(c) for c in self.R[0]], "den": [scalar(c) for c in self.R[1]]}}


@dataclass(frozen=True)
class NotInForm:
    reason: str
    commutes: bool = False

    verdict = "NotInForm"

    def to_json(self):
        return {"verdict": self.verdict, "reason": self.reason}


def _mobius(N, D):
    """True if N/D (lowest terms) is a Moebius transformation of x."""
    if len(N) > 2 or len(D) > 2:
        return False
    a = N[1] if len(N) > 1 else 0
    b = N[0] if N else 0
    c = D[1] if len(D) > 1 else 0
    d = D[0] if D else 0
    return bool(a * d - b * c)


def _exponents_divisible(P, k):
    return all(not c or i % k == 0 for i, c in enumerate(P)) if k else len(P) <= 1


def _shape(phi, psi):
    alpha = phi.alpha
    eta = reduced_x_function(psi.n1, psi.d1)
    if eta is None:
        return NotInForm("first coordinate depends on y")
    N, D = eta
    if not _mobius(N, D):
        return NotInForm("first coordinate is not a Moebius map of x")
    # eta(alpha x) = alpha eta(x)
    if not same_fraction(scale_arg(N, alpha), scale_arg(D, alpha), [alpha * c for c in N], D):
        return NotInForm("eta(alpha x) != alpha eta(x)")
    if phi.kind == "diagonal":
        R = reduced_x_function(psi.n2, bv_mul(psi.d2, {(0, 1): 1}))
        if R is None:
            return NotInForm("second coordinate divided by y depends on y")
        if not R[0]:
            return NotInForm("second coordinate vanishes")
        k = phi.kernel_k()
        if not (_exponents_divisible(R[0], k) and _exponents_divisible(R[1], k)):
            return NotInForm("second coordinate divided by y is not a function of x^%d" % k)
        return InForm(eta, R)
    R = reduced_x_function(bv_sub(psi.n2, bv_mul(psi.d2, {(0, 1): 1})), psi.d2)
    if R is None:
        return NotInForm("second coordinate minus y depends on y")
    if not same_fraction(scale_arg(R[0], alpha), scale_arg(R[1], alpha), R[0], R[1]):
        return NotInForm("R(alpha x) != R(x)")
    return InForm(eta, R)


def centralizer_shape_check(phi, psi):
    """Match psi against the centralizer shape of phi and cross-check by commutation."""
    if psi.field != phi.field and not (psi.field is QQ):
        raise ValueError("phi and psi over different fields")
    res = _shape(phi, psi)
    brute = commutes(phi.to_affine().to_p2(), psi.to_p2())
    assert brute == (res.verdict == "InForm"), \
        "shape test and commutation disagree (%s vs %s)" % (res.verdict, brute)
    return res
