"""Polynomial gcd over Q or a number field.

Univariate polynomials are coefficient lists (low to high).  Bivariate
polynomials are lists indexed by the degree in y whose entries are
univariate polynomials in x, i.e. elements of K[x][y].  The gcd of two
bivariate polynomials uses content/primitive-part splitting over K[x] and
the subresultant remainder sequence in y.  Homogeneous polynomials are
handled by splitting off powers of z and dehomogenizing at z = 1.
"""
from fractions import Fraction

from .fields import QQ, NFElement
from .hompoly import HomPoly


def _inv(c):
    if isinstance(c, NFElement):
        return c.inverse()
    return Fraction(1) / c


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# univariate K[x]

def up_trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def up_add(a, b):
    n = max(len(a), len(b))
    return up_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def up_neg(a):
    return [-c for c in a]


def up_sub(a, b):
    return up_add(a, up_neg(b))


def up_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return up_trim([_norm(c) for c in out])


def up_scale(a, c):
    return up_trim([_norm(x * c) for x in a])


def up_divmod(a, b):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    inv = _inv(b[-1])
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = _norm(a[-1] * inv)
        s = len(a) - len(b)
        q[s] = c
        for i, bc in enumerate(b):
            a[s + i] = _norm(a[s + i] - c * bc)
        a = up_trim(a)
    return up_trim(q), a


def up_divexact(a, b):
    q, r = up_divmod(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def up_monic(a):
    if not a:
        return a
    return up_scale(a, _inv(a[-1]))


def up_gcd(a, b):
    a, b = up_trim(a), up_trim(b)
    while b:
        a, b = b, up_divmod(a, b)[1]
    return up_monic(a)


def up_pow(a, k):
    r = [1]
    for _ in range(k):
        r = up_mul(r, a)
    return r


# bivariate K[x][y]

def bv_trim(A):
    A = list(A)
    while A and not A[-1]:
        A.pop()
    return A


def bv_from_dict(d):
    """{(i, j): c} meaning c x^i y^j  ->  K[x][y] list."""
    if not d:
        return []
    ny = max(j for _, j in d) + 1
    out = [[] for _ in range(ny)]
    for (i, j), c in d.items():
        col = out[j]
        if len(col) <= i:
            col.extend([0] * (i + 1 - len(col)))
        col[i] = col[i] + c
    return bv_trim([up_trim(c) for c in out])


def bv_to_dict(A):
    out = {}
    for j, col in enumerate(A):
        for i, c in enumerate(col):
            if c:
                out[(i, j)] = c
    return out


def bv_content(A):
    g = []
    for c in A:
        g = up_gcd(g, c)
        if len(g) == 1:
            break
    return g


def bv_divexact_up(A, c):
    return bv_trim([up_divexact(col, c) for col in A])


def bv_mul_up(A, c):
    return bv_trim([up_mul(col, c) for col in A])


def bv_sub(A, B):
    n = max(len(A), len(B))
    return bv_trim([up_sub(A[i] if i < len(A) else [], B[i] if i < len(B) else []) for i in range(n)])


def bv_prem(A, B):
    """Pseudo-remainder of A by B in D[y], D = K[x]."""
    db = len(B) - 1
    lb = B[-1]
    R = list(A)
    e = len(A) - len(B) + 1
    while R and len(R) - 1 >= db:
        s = len(R) - 1 - db
        lr = R[-1]
        R = bv_mul_up(R, lb)
        shifted = [[] for _ in range(s)] + [up_mul(col, lr) for col in B]
        R = bv_sub(R, shifted)
        e -= 1
    if e > 0:
        R = bv_mul_up(R, up_pow(lb, e))
    return R


def bv_subresultant_gcd(A, B):
    """gcd of A and B in K[x][y] up to a unit of K."""
    A, B = bv_trim(A), bv_trim(B)
    if not A:
        return B
    if not B:
        return A
    if len(A) < len(B):
        A, B = B, A
    ca, cb = bv_content(A), bv_content(B)
    c = up_gcd(ca, cb)
    A = bv_divexact_up(A, ca)
    B = bv_divexact_up(B, cb)
    g, h = [1], [1]
    while True:
        delta = len(A) - len(B)
        R = bv_prem(A, B)
        if not R:
            break
        if len(R) == 1:
            # nonzero constant in y: primitive gcd is 1
            return [c]
        A = B
        B = bv_divexact_up(R, up_mul(g, up_pow(h, delta)))
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = up_divexact(up_pow(g, delta), up_pow(h, delta - 1))
    G = bv_divexact_up(B, bv_content(B))
    return bv_mul_up(G, c)


def bivariate_gcd(a, b):
    """gcd of two affine polynomials given as {(i, j): c} dicts."""
    return bv_to_dict(bv_subresultant_gcd(bv_from_dict(a), bv_from_dict(b)))


# homogeneous

def _z_split(p):
    a = p.min_var_degree(2)
    t = {(m[0], m[1], m[2] - a): c for m, c in p.as_dict().items()}
    return a, HomPoly._raw(t, p.degree - a, p.field)


def gcd2_python(p, q):
    """Monic gcd of two homogeneous polynomials via subresultants."""
    field = p.field if p.field is not QQ else q.field
    p, q = p.with_field(field), q.with_field(field)
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    a, p1 = _z_split(p)
    b, q1 = _z_split(q)
    G = bivariate_gcd(p1.dehomogenize(2), q1.dehomogenize(2))
    g = max(i + j for i, j in G) if G else 0
    e = min(a, b)
    H = HomPoly.homogenize(G, g, field)
    if e:
        H = HomPoly._raw({(m[0], m[1], m[2] + e): c for m, c in H.as_dict().items()}, g + e, field)
    return H.monic()


def gcd2_flint(p, q):
    from .fastq import to_fmpq_mpoly, from_fmpq_mpoly
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    g = to_fmpq_mpoly(p).gcd(to_fmpq_mpoly(q))
    return from_fmpq_mpoly(g).monic()


def gcd3(p, q, r, method="auto"):
    """Monic gcd of three homogeneous polynomials, not all zero.

    ``method`` is 'python' (subresultants), 'flint' (rationals only) or
    'auto' (flint when every input is over Q).
    """
    polys = [f for f in (p, q, r) if not f.is_zero()]
    if not polys:
        raise ValueError("gcd of three zero polynomials")
    if method == "auto":
        method = "flint" if all(f.field is QQ for f in polys) else "python"
    g2 = gcd2_flint if method == "flint" else gcd2_python
    g = polys[0].monic()
    for f in polys[1:]:
        if g.degree == 0:
            break
        g = g2(g, f)
    return g
