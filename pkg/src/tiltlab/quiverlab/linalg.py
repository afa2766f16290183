"""Dense exact linear algebra over a field object (see fields.py).

Matrices are lists of rows; vectors are lists.  Everything is small and
exact, so plain Gaussian elimination is used throughout.
"""

from __future__ import annotations

from typing import List, Optional, Tuple


def zeros(field, m: int, n: int):
    z = field.zero()
    return [[z for _ in range(n)] for _ in range(m)]


def identity(field, n: int):
    out = zeros(field, n, n)
    one = field.one()
    for i in range(n):
        out[i][i] = one
    return out


def mat_mul(field, a, b):
    if not a or not b:
        return zeros(field, len(a), len(b[0]) if b else 0)
    m, k, n = len(a), len(b), len(b[0])
    out = zeros(field, m, n)
    for i in range(m):
        ai = a[i]
        for t in range(k):
            c = ai[t]
            if not c:
                continue
            bt = b[t]
            oi = out[i]
            for j in range(n):
                if bt[j]:
                    oi[j] = oi[j] + c * bt[j]
    return out


def mat_vec(field, a, v):
    return [sum_list(field, [a[i][j] * v[j] for j in range(len(v)) if v[j]])
            for i in range(len(a))]


def sum_list(field, items):
    total = field.zero()
    for x in items:
        total = total + x
    return total


def transpose(a, rows: int, cols: int):
    return [[a[i][j] for i in range(rows)] for j in range(cols)]


def rref(field, mat) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form and pivot column indices (copy, in place-free)."""
    a = [row[:] for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.one() / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a[:r], pivots


def echelon_insert(field, rows: List[List], pivots: List[int], vec: List) -> bool:
    """Reduce vec against a reduced echelon family and insert it if new.

    rows/pivots are maintained sorted by pivot column and fully reduced.
    Returns True if the vector enlarged the space.
    """
    v = vec[:]
    for row, pc in zip(rows, pivots):
        if v[pc]:
            f = v[pc]
            v = [x - f * y for x, y in zip(v, row)]
    lead = None
    for j, x in enumerate(v):
        if x:
            lead = j
            break
    if lead is None:
        return False
    inv = field.one() / v[lead]
    v = [x * inv for x in v]
    pos = 0
    while pos < len(pivots) and pivots[pos] < lead:
        pos += 1
    rows.insert(pos, v)
    pivots.insert(pos, lead)
    for i in range(len(rows)):
        if i != pos and rows[i][lead]:
            f = rows[i][lead]
            rows[i] = [x - f * y for x, y in zip(rows[i], v)]
    return True


def rank(field, mat) -> int:
    if not mat or not mat[0]:
        return 0
    return len(rref(field, mat)[0])


def nullspace(field, mat, cols: Optional[int] = None) -> List[List]:
    """Basis of the right kernel {v : mat v = 0}, as a list of vectors."""
    if cols is None:
        cols = len(mat[0]) if mat else 0
    if not mat:
        return [unit_vector(field, cols, j) for j in range(cols)]
    ech, pivots = rref(field, mat)
    pivset = set(pivots)
    free = [j for j in range(cols) if j not in pivset]
    basis = []
    for j in free:
        v = [field.zero() for _ in range(cols)]
        v[j] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = -ech[r][j]
        basis.append(v)
    return basis


def unit_vector(field, n: int, j: int):
    v = [field.zero() for _ in range(n)]
    v[j] = field.one()
    return v


def solve(field, a, b) -> Optional[List]:
    """One solution of a x = b, or None if inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [a[i][:] + [b[i]] for i in range(rows)]
    ech, pivots = rref(field, aug)
    x = [field.zero() for _ in range(cols)]
    for r, pc in enumerate(pivots):
        if pc == cols:
            return None
        x[pc] = ech[r][cols]
    return x


def solve_matrix(field, a, bmat) -> Optional[List[List]]:
    """X with a X = bmat (columnwise), or None."""
    if not bmat:
        return []
    ncols = len(bmat[0])
    cols_out = []
    for j in range(ncols):
        col = solve(field, a, [bmat[i][j] for i in range(len(bmat))])
        if col is None:
            return None
        cols_out.append(col)
    n = len(a[0]) if a else 0
    return [[cols_out[j][i] for j in range(ncols)] for i in range(n)]


def row_space_contains(field, rows, vec) -> bool:
    if not any(vec):
        return True
    if not rows:
        return False
    ech, pivots = rref(field, rows)
    v = vec[:]
    for r, pc in enumerate(pivots):
        if v[pc]:
            f = v[pc]
            v = [x - f * y for x, y in zip(v, ech[r])]
    return not any(v)


def intersect_rowspaces(field, rows_a, rows_b, dim: int) -> List[List]:
    """Basis of the intersection of two row spaces inside k^dim.

    v lies in both spaces iff v = x A = y B; the coefficient pairs (x, y)
    form the kernel of the stacked matrix [A^T | -B^T].
    """
    if not rows_a or not rows_b:
        return []
    at = transpose(rows_a, len(rows_a), dim)
    bt = transpose(rows_b, len(rows_b), dim)
    stacked = [at[i] + [-x for x in bt[i]] for i in range(dim)]
    out = []
    for v in nullspace(field, stacked, len(rows_a) + len(rows_b)):
        coeffs = v[:len(rows_a)]
        vec = [field.zero()] * dim
        for c, row in zip(coeffs, rows_a):
            if c:
                vec = [x + c * y for x, y in zip(vec, row)]
        if any(vec):
            out.append(vec)
    ech, _ = rref(field, out) if out else ([], [])
    return ech
