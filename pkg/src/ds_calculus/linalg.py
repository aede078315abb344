"""Exact rational linear algebra: elimination, rank, kernels.

No floating point anywhere.  Pivots are chosen to minimise the bit size
of numerator and denominator, which keeps coefficient growth tame on the
module sizes that occur here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[Fraction]]


def _pivot_size(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def copy_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def row_reduce(mat: Matrix) -> Tuple[int, List[int]]:
    """Reduce ``mat`` in place to row echelon form.

    Returns (rank, pivot column indices).  Pivot rows are rescaled to a
    leading 1 and the pivot columns are cleared above and below.
    """
    if not mat:
        return 0, []
    n_rows, n_cols = len(mat), len(mat[0])
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        best = None
        for i in range(r, n_rows):
            if mat[i][c] != 0 and (best is None or _pivot_size(mat[i][c]) < _pivot_size(mat[best][c])):
                best = i
        if best is None:
            continue
        mat[r], mat[best] = mat[best], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(n_rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return r, pivots


def matrix_rank(rows: Sequence[Sequence]) -> int:
    mat = copy_matrix(rows)
    rank, _ = row_reduce(mat)
    return rank


def nullspace(rows: Sequence[Sequence], n_cols: int | None = None) -> List[List[Fraction]]:
    """Basis of the right kernel of the matrix given by ``rows``."""
    if not rows:
        if n_cols is None:
            raise ValueError("empty matrix needs explicit n_cols")
        return [[Fraction(int(i == j)) for j in range(n_cols)] for i in range(n_cols)]
    mat = copy_matrix(rows)
    n_cols = len(mat[0])
    _, pivots = row_reduce(mat)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -mat[r][fc]
        basis.append(v)
    return basis


def in_row_span(rows: Sequence[Sequence], vec: Sequence) -> bool:
    if not rows:
        return all(Fraction(x) == 0 for x in vec)
    base = copy_matrix(rows)
    rank, _ = row_reduce(base)
    ext = base[:rank] + [[Fraction(x) for x in vec]]
    return matrix_rank(ext) == rank


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                row = out[i]
                for j in range(m):
                    if bt[j]:
                        row[j] += x * bt[j]
    return out


def mat_det(rows: Sequence[Sequence]) -> Fraction:
    mat = copy_matrix(rows)
    n = len(mat)
    det = Fraction(1)
    for c in range(n):
        piv = None
        for i in range(c, n):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c] != 0:
                f = mat[i][c] * inv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return det
