"""Small exact linear algebra over field rings.

Matrices are lists of rows of payloads.  Everything here is plain
Gaussian elimination; the systems in this package are tiny (3x3 blocks,
stacked hyperflex conditions, Sylvester matrices handled elsewhere).
"""


def identity_matrix(R, n):
    return [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]


def mat_mul(R, A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = [[R.zero] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            a = A[i][t]
            if R.is_zero(a):
                continue
            for j in range(m):
                out[i][j] = R.add(out[i][j], R.mul(a, B[t][j]))
    return out


def mat_vec(R, A, v):
    return [R.sum(R.mul(A[i][j], v[j]) for j in range(len(v))) for i in range(len(A))]


def mat_det(R, A):
    n = len(A)
    M = [row[:] for row in A]
    det = R.one
    sign = False
    for col in range(n):
        pivot = next((r for r in range(col, n) if not R.is_zero(M[r][col])), None)
        if pivot is None:
            return R.zero
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            sign = not sign
        pv = M[col][col]
        det = R.mul(det, pv)
        inv = R.inv(pv)
        for r in range(col + 1, n):
            c = M[r][col]
            if R.is_zero(c):
                continue
            f = R.mul(c, inv)
            for j in range(col, n):
                M[r][j] = R.sub(M[r][j], R.mul(f, M[col][j]))
    return R.neg(det) if sign else det


def mat_inv(R, A):
    n = len(A)
    M = [row[:] + ident_row for row, ident_row in zip(A, identity_matrix(R, n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not R.is_zero(M[r][col])), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        M[col], M[pivot] = M[pivot], M[col]
        inv = R.inv(M[col][col])
        M[col] = [R.mul(inv, c) for c in M[col]]
        for r in range(n):
            if r == col:
                continue
            c = M[r][col]
            if R.is_zero(c):
                continue
            M[r] = [R.sub(a, R.mul(c, b)) for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def transpose(A):
    return [list(col) for col in zip(*A)]


def solve_linear(R, A, b):
    """Solve A x = b exactly; returns (solution or None, rank, consistent)."""
    n, m = len(A), len(A[0])
    M = [A[i][:] + [b[i]] for i in range(n)]
    rank = 0
    pivots = []
    for col in range(m):
        pivot = next((r for r in range(rank, n) if not R.is_zero(M[r][col])), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        inv = R.inv(M[rank][col])
        M[rank] = [R.mul(inv, c) for c in M[rank]]
        for r in range(n):
            if r == rank:
                continue
            c = M[r][col]
            if R.is_zero(c):
                continue
            M[r] = [R.sub(a, R.mul(c, p)) for a, p in zip(M[r], M[rank])]
        pivots.append(col)
        rank += 1
        if rank == n:
            break
    consistent = all(R.is_zero(M[r][m]) for r in range(rank, n))
    if not consistent:
        return None, rank, False
    x = [R.zero] * m
    for r, col in enumerate(pivots):
        x[col] = M[r][m]
    return x, rank, True


def random_invertible(R, n, rng):
    while True:
        A = [[R.random(rng) for _ in range(n)] for _ in range(n)]
        if not R.is_zero(mat_det(R, A)):
            return A


def random_special_linear(R, n, rng):
    A = random_invertible(R, n, rng)
    d = mat_det(R, A)
    inv = R.inv(d)
    A[0] = [R.mul(inv, c) for c in A[0]]
    return A
