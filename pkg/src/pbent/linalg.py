"""Small dense linear algebra modulo a prime.

Matrices are lists of row lists with entries in [0, p).  Sizes here are
tiny (n x n for extension degrees n <= 12), so plain Gaussian elimination
is the right tool.
"""

from __future__ import annotations


def mat_inverse(mat: list[list[int]], p: int) -> list[list[int]]:
    """Invert a square matrix over F_p.  Raises ValueError if singular."""
    n = len(mat)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] % p != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular mod %d" % p)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(v * inv) % p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] % p:
                factor = aug[r][col] % p
                aug[r] = [(a - factor * b) % p for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_kernel(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right kernel {v : mat v = 0} over F_p.

    `mat` may be rectangular (rows x cols); returns a list of length-cols
    basis vectors (possibly empty).
    """
    rows = [list(r) for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] % p != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p:
                f = rows[i][c] % p
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-rows[ri][fc]) % p
        basis.append(v)
    return basis


def mat_vec(mat: list[list[int]], vec: list[int], p: int) -> list[int]:
    """Matrix-vector product over F_p."""
    return [sum(m * v for m, v in zip(row, vec)) % p for row in mat]
