"""Gaussian elimination over any exact field (Fraction, NFElement, ...).

Matrices are lists of rows.  Entries only need ``+ - * /`` and truthiness
for zero tests.
"""

from __future__ import annotations


def _copy(rows):
    return [list(r) for r in rows]


def det(rows, one):
    a = _copy(rows)
    n = len(a)
    acc = one
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return one - one
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            acc = -acc
        p = a[col][col]
        acc = acc * p
        inv = one / p
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                row_r, row_c = a[r], a[col]
                for c in range(col, n):
                    if row_c[c]:
                        row_r[c] = row_r[c] - f * row_c[c]
    return acc


def rref(rows, one):
    """Reduced row echelon form; returns ``(matrix, pivot_columns)``."""
    a = _copy(rows)
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = one / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return a, pivots


def nullspace(rows, ncols, one):
    """Basis of ``{v : A v = 0}``, one vector per free column."""
    zero = one - one
    if not rows:
        return [[one if i == k else zero for i in range(ncols)] for k in range(ncols)]
    red, pivots = rref(rows, one)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(v)
    return basis


def solve(rows, rhs, one):
    """One solution of ``A v = rhs`` or ``None`` if inconsistent."""
    zero = one - one
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, one)
    if ncols in pivots:
        return None
    v = [zero] * ncols
    for i, pc in enumerate(pivots):
        v[pc] = red[i][ncols]
    return v


def rank(rows, one) -> int:
    return len(rref(rows, one)[1])
