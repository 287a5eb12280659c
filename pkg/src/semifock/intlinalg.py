"""Exact integer matrix utilities: Smith normal form, kernels, solves.

Matrices are lists of lists of Python ints (arbitrary precision).  All
routines are deterministic: the Smith reduction always pivots on the
smallest-absolute-value nonzero entry, ties broken in row-major order.
"""

from __future__ import annotations

from fractions import Fraction as QQ

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def copy(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), len(a[0]) if a else 0


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    m, k = shape(a)
    k2, n = shape(b)
    if k != k2:
        raise ValueError(f"shape mismatch {m}x{k} @ {k2}x{n}")
    out = zeros(m, n)
    for i in range(m):
        arow = a[i]
        orow = out[i]
        for t in range(k):
            v = arow[t]
            if v:
                brow = b[t]
                for j in range(n):
                    orow[j] += v * brow[j]
    return out


def mat_vec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def transpose(a: Matrix) -> Matrix:
    m, n = shape(a)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def det(a: Matrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = copy(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _find_pivot(d: Matrix, t: int) -> tuple[int, int] | None:
    m, n = shape(d)
    best: tuple[int, int] | None = None
    best_val = 0
    for i in range(t, m):
        for j in range(t, n):
            v = abs(d[i][j])
            if v != 0 and (best is None or v < best_val):
                best = (i, j)
                best_val = v
    return best


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U @ a @ V == D, U and V unimodular, and the
    diagonal of D nonnegative with d1 | d2 | ... .

    Empty matrices are allowed and yield identity transforms.
    """
    m, n = shape(a)
    d = copy(a)
    u = identity(m)
    v = identity(n)
    t = 0
    while t < min(m, n):
        piv = _find_pivot(d, t)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            d[t], d[pi] = d[pi], d[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in d:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        restart = False
        # Reduce column t; a nonzero remainder becomes the new, smaller pivot.
        for i in range(t + 1, m):
            if d[i][t] == 0:
                continue
            q = d[i][t] // d[t][t]
            for j in range(n):
                d[i][j] -= q * d[t][j]
            for j in range(m):
                u[i][j] -= q * u[t][j]
            if d[i][t] != 0:
                d[t], d[i] = d[i], d[t]
                u[t], u[i] = u[i], u[t]
                restart = True
                break
        if restart:
            continue
        for j in range(t + 1, n):
            if d[t][j] == 0:
                continue
            q = d[t][j] // d[t][t]
            for i in range(m):
                d[i][j] -= q * d[i][t]
            for i in range(n):
                v[i][j] -= q * v[i][t]
            if d[t][j] != 0:
                for row in d:
                    row[t], row[j] = row[j], row[t]
                for row in v:
                    row[t], row[j] = row[j], row[t]
                restart = True
                break
        if restart:
            continue
        # Pivot must divide the whole remaining block for the chain property.
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t] != 0:
                    for jj in range(n):
                        d[t][jj] += d[i][jj]
                    for jj in range(m):
                        u[t][jj] += u[i][jj]
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if d[t][t] < 0:
            for j in range(n):
                d[t][j] = -d[t][j]
            for j in range(m):
                u[t][j] = -u[t][j]
        t += 1
    return u, d, v


def diagonal(d: Matrix) -> list[int]:
    m, n = shape(d)
    return [d[i][i] for i in range(min(m, n))]


def kernel_basis(a: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Basis of the integer null space {x : a @ x == 0}, as a list of
    column vectors.  Pass ncols explicitly for zero-row matrices."""
    m, n = shape(a)
    if m == 0:
        n = ncols if ncols is not None else 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    if n == 0:
        return []
    _, d, v = smith_normal_form(a)
    diag = diagonal(d)
    basis = []
    for j in range(n):
        if j >= len(diag) or diag[j] == 0:
            basis.append([v[i][j] for i in range(n)])
    return basis


def solve(a: Matrix, b: list[int], ncols: int | None = None) -> list[int] | None:
    """One integer solution of a @ x == b, or None when none exists."""
    m, n = shape(a)
    if m == 0:
        return [0] * (ncols if ncols is not None else 0)
    if m != len(b):
        raise ValueError("right-hand side length mismatch")
    if n == 0:
        return [] if all(x == 0 for x in b) else None
    u, d, v = smith_normal_form(a)
    ub = mat_vec(u, b)
    diag = diagonal(d)
    y = [0] * n
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        if di != 0:
            if ub[i] % di != 0:
                return None
            y[i] = ub[i] // di
        elif ub[i] != 0:
            return None
    return mat_vec(v, y)


def unimodular_inverse(u: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    n = len(u)
    aug = [[QQ(u[i][j]) for j in range(n)] + [QQ(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    inv = [[aug[i][n + j] for j in range(n)] for i in range(n)]
    out = []
    for row in inv:
        irow = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            irow.append(int(x))
        out.append(irow)
    return out
