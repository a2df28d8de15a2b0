"""Degree sequences: growth class, dynamical degree bracket, robust slopes."""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from statistics import median

import flint

CLASSES = ("Elliptic", "Jonquieres", "Halphen", "Hyperbolic", "Undetermined")
EXP_THRESHOLD = math.log(1.05)
LAMBDA_BITS = 32


@dataclass(frozen=True)
class LambdaEstimate:
    """Bracket for the dynamical degree.

    ``upper`` is rigorous for submultiplicative sequences (inf of d_k^(1/k)).
    ``lower`` comes from the growth between the middle and the end of the
    sequence and is a heuristic, not a proof.
    """

    lower: Fraction
    upper: Fraction
    root_K: tuple
    exact: bool = False

    def contains(self, x):
        return self.lower <= x <= self.upper

    def relative_width(self):
        mid = (self.lower + self.upper) / 2
        return (self.upper - self.lower) / mid

    def to_json(self):
        from ..report import rat
        return {"lower": rat(self.lower), "upper": rat(self.upper),
                "root_K": [rat(self.root_K[0]), rat(self.root_K[1])], "exact": self.exact}


@dataclass(frozen=True)
class GrowthReport:
    degrees: list
    growth_class: str
    lambda_estimate: LambdaEstimate
    linear_slope: Fraction
    quadratic_coeff: Fraction
    max_deviation: int
    robust_slope: Fraction
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.growth_class == "Hyperbolic":
            assert self.lambda_estimate.upper > 1
        if self.growth_class == "Jonquieres":
            assert self.linear_slope > 0

    def to_json(self):
        from ..report import rat
        return {
            "degrees": list(self.degrees),
            "class": self.growth_class,
            "lambda_estimate": self.lambda_estimate.to_json(),
            "linear_slope": rat(self.linear_slope),
            "quadratic_coeff": rat(self.quadratic_coeff),
            "max_deviation": self.max_deviation,
            "robust_slope": rat(self.robust_slope),
            "notes": list(self.notes),
        }


def root_bracket(n, k, bits=LAMBDA_BITS):
    """(lo, hi) with lo <= n^(1/k) <= hi, hi - lo <= 2^-bits; equal if exact."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    scaled = n << (bits * k)
    r = int(flint.fmpz(scaled).root(k))
    lo = Fraction(r, 1 << bits)
    if r ** k == scaled:
        return lo, lo
    return lo, Fraction(r + 1, 1 << bits)


def lambda_estimate(degrees, bits=LAMBDA_BITS):
    """Bracket for lim d_k^(1/k).

    The upper end is min_k d_k^(1/k) (Fekete).  The lower end is
    (d_K / d_M)^(1/(K-M)) with M = ceil(K/2), clipped to [1, upper].
    """
    d = list(degrees)
    if len(d) < 4:
        raise ValueError("need at least 4 degrees")
    if min(d) < 1:
        raise ValueError("degrees must be positive")
    K = len(d)
    ups = [root_bracket(v, k + 1, bits)[1] for k, v in enumerate(d)]
    upper = min(ups)
    M = (K + 1) // 2
    num, den = d[-1], d[M - 1]
    # floor of (num/den)^(1/(K-M)) at the given precision
    e = K - M
    scaled = (num << (bits * e)) // den
    r = int(flint.fmpz(scaled).root(e))
    lower = max(Fraction(1), min(Fraction(r, 1 << bits), upper))
    root_K = root_bracket(d[-1], K, bits)
    exact = lower == upper
    return LambdaEstimate(lower, upper, root_K, exact)


def theil_sen_slope(ks, ds):
    """Median of pairwise slopes (ds[j]-ds[i])/(ks[j]-ks[i]), exact."""
    slopes = []
    for i in range(len(ks)):
        for j in range(i + 1, len(ks)):
            slopes.append(Fraction(ds[j] - ds[i], ks[j] - ks[i]))
    slopes.sort()
    n = len(slopes)
    if n == 0:
        return Fraction(0)
    return slopes[n // 2] if n % 2 else (slopes[n // 2 - 1] + slopes[n // 2]) / 2


def least_squares(ks, ds, degree):
    """Exact least-squares polynomial fit; coefficients low to high."""
    n = degree + 1
    A = [[Fraction(sum(k ** (i + j) for k in ks)) for j in range(n)] for i in range(n)]
    b = [Fraction(sum(dv * k ** i for k, dv in zip(ks, ds))) for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c])
        A[c], A[p] = A[p], A[c]
        b[c], b[p] = b[p], b[c]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c] / A[c][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
                b[r] -= f * b[c]
    return [b[i] / A[i][i] for i in range(n)]


def tail_indices(degrees):
    n = len(degrees)
    start = n // 2
    ks = list(range(start + 1, n + 1))
    return ks, list(degrees[start:])


def classify_growth(degrees):
    d = list(degrees)
    if len(d) < 8:
        raise ValueError("classification needs at least 8 degrees")
    if min(d) < 1:
        raise ValueError("degrees must be positive")
    n = len(d)
    notes = []
    ks, tail = tail_indices(d)
    lam = lambda_estimate(d)
    lin = least_squares(ks, tail, 1)
    quad = least_squares(list(range(1, n + 1)), d, 2)
    slope = lin[1]
    ts = theil_sen_slope(ks, tail)
    intercept = median([Fraction(v) - ts * k for k, v in zip(ks, tail)])
    max_dev = max(abs(v - ts * k - intercept) for k, v in zip(ks, tail))
    max_dev_int = math.ceil(max_dev)

    # exponential: tail log-ratios above threshold and not decaying like 1/k
    ratios = [math.log(d[k + 1] / d[k]) for k in range(n // 2 - 1, n - 1)]
    h = len(ratios) // 2
    first, last = sum(ratios[:h]) / h, sum(ratios[-h:]) / h
    mean_ratio = sum(ratios) / len(ratios)
    sd = [d[k + 2] - 2 * d[k + 1] + d[k] for k in range(n // 2 - 1, n - 2)]
    fd = [d[k + 1] - d[k] for k in range(n // 2 - 1, n - 1)]
    # the Fekete bound rules out exponential growth when some d_k^(1/k) = 1
    if mean_ratio > EXP_THRESHOLD and last >= 0.8 * first and lam.upper > 1:
        cls = "Hyperbolic"
        notes.append("mean tail log-ratio %.4f > ln(1.05) with no decay" % mean_ratio)
    elif len(sd) >= 3 and max(sd) - min(sd) <= 2 and sum(sd) / len(sd) >= Fraction(1, 2):
        cls = "Halphen"
        notes.append("tail second differences in [%d, %d]" % (min(sd), max(sd)))
    elif ts > 0 and sum(fd) > 0 and max_dev <= 2 + ts:
        cls = "Jonquieres"
        notes.append("tail within %s of a line of slope %s" % (max_dev, ts))
    elif max(tail) == max(d) and d.index(max(d)) < n // 2 and ts == 0:
        cls = "Elliptic"
        notes.append("bounded: maximum %d attained at k=%d" % (max(d), d.index(max(d)) + 1))
    else:
        cls = "Undetermined"
        notes.append("no growth pattern recognised at this horizon")
    if cls == "Elliptic":
        one = Fraction(1)
        lam = LambdaEstimate(one, lam.upper, lam.root_K, lam.upper == one)
    return GrowthReport(d, cls, lam, slope, quad[2], max_dev_int, ts, notes)
