"""Smith normal form with unimodular transforms, integer kernels and solving."""


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def transpose(A):
    return [list(r) for r in zip(*A)] if A else []


def det(A):
    """Exact determinant by fraction-free elimination (Bareiss)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((i for i in range(k + 1, n) if M[i][k]), None)
            if p is None:
                return 0
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(M):
    """(U, D, V) with U M V = D, U and V unimodular, D diagonal with d1 | d2 | ...

    Diagonal entries are non-negative.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(map(int, r)) for r in M]
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for r in R:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):
        # row dst += c * row src
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for R in (A, V):
            for r in R:
                r[dst] += c * r[src]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nz:
                break
            _, pi, pj = min(nz)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    add_row(i, t, -q)
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    add_col(j, t, -q)
                if A[t][j]:
                    done = False
            if not done:
                continue
            # divisibility: pull a non-multiple into the pivot row
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return U, A, V


def snf_diagonal(M):
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def check_snf(M, U, D, V):
    """Certificate: U M V = D, |det U| = |det V| = 1, diagonal with a divisibility chain."""
    if matmul(matmul(U, M), V) != D:
        return False
    if abs(det(U)) != 1 or abs(det(V)) != 1:
        return False
    for i, row in enumerate(D):
        for j, v in enumerate(row):
            if i != j and v:
                return False
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    if any(v < 0 for v in diag):
        return False
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            return False
        if a and b % a:
            return False
    return True


def integer_kernel(A):
    """Basis (list of column vectors) of {x in Z^n : A x = 0}."""
    if not A:
        return []
    n = len(A[0])
    U, D, V = smith_normal_form(A)
    rank = sum(1 for i in range(min(len(D), n)) if D[i][i])
    return [[V[r][c] for r in range(n)] for c in range(rank, n)]


def solve_integer(A, b):
    """A particular integer solution x of A x = b, or None; plus the kernel basis."""
    m = len(A)
    n = len(A[0])
    U, D, V = smith_normal_form(A)
    c = [sum(U[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d:
            if c[i] % d:
                return None, None
            y[i] = c[i] // d
        elif c[i]:
            return None, None
    x = [sum(V[r][k] * y[k] for k in range(n)) for r in range(n)]
    rank = sum(1 for i in range(min(m, n)) if D[i][i])
    kernel = [[V[r][c2] for r in range(n)] for c2 in range(rank, n)]
    return x, kernel


def xgcd(a, b):
    """(g, s, t) with s a + t b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0
