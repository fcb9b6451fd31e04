"""Small exact linear algebra helpers over Fraction and over the integers.

Everything here works on plain lists of lists; matrices are modest
(at most a few dozen rows), so clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[Q]]
IntMatrix = List[List[int]]


def _to_q(rows: Sequence[Sequence]) -> Matrix:
    return [[Q(x) for x in row] for row in rows]


def solve_linear(a: Sequence[Sequence], b: Sequence) -> Optional[List[Q]]:
    """One solution of A x = b over the rationals, or None if inconsistent.

    If the system is underdetermined the free variables are set to 0.
    """
    m = _to_q(a)
    rhs = [Q(x) for x in b]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    if len(rhs) != nrows:
        raise ValueError("dimension mismatch")
    pivots: List[Tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        rhs[row], rhs[piv] = rhs[piv], rhs[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        rhs[row] *= inv
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
                rhs[r] -= f * rhs[row]
        pivots.append((row, col))
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if rhs[r] != 0:
            return None
    x = [Q(0)] * ncols
    for r, c in pivots:
        x[c] = rhs[r]
    return x


def rank(a: Sequence[Sequence]) -> int:
    m = _to_q(a)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(rk + 1, nrows):
            if m[r][col] != 0:
                f = m[r][col] / m[rk][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
    return rk


def determinant(a: Sequence[Sequence]) -> Q:
    m = _to_q(a)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("dimension mismatch")
    det = Q(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Q(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def hnf_columns(a: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite form H = A U with U unimodular.

    Columns of H are echelonized left to right: each pivot is positive,
    entries to the right of a pivot in its row vanish, entries to the
    left are reduced into [0, pivot), and zero columns are pushed to
    the right.  This form is unique per column lattice, so equality of
    forms decides equality of lattices.  (H, U) is returned.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    h = [[int(x) for x in row] for row in a]
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def swap(c1: int, c2: int) -> None:
        for r in range(nrows):
            h[r][c1], h[r][c2] = h[r][c2], h[r][c1]
        for r in range(ncols):
            u[r][c1], u[r][c2] = u[r][c2], u[r][c1]

    def addmul(dst: int, src: int, f: int) -> None:
        for r in range(nrows):
            h[r][dst] += f * h[r][src]
        for r in range(ncols):
            u[r][dst] += f * u[r][src]

    def negate(c: int) -> None:
        for r in range(nrows):
            h[r][c] = -h[r][c]
        for r in range(ncols):
            u[r][c] = -u[r][c]

    pivots = []
    col = 0
    for row in range(nrows):
        if col == ncols:
            break
        # gcd sweep on h[row][col:]
        while True:
            nz = [c for c in range(col, ncols) if h[row][c] != 0]
            if not nz:
                break
            cmin = min(nz, key=lambda c: abs(h[row][c]))
            swap(col, cmin)
            done = True
            for c in range(col + 1, ncols):
                if h[row][c] != 0:
                    addmul(c, col, -(h[row][c] // h[row][col]))
                    if h[row][c] != 0:
                        done = False
            if done:
                break
        if h[row][col] == 0:
            continue
        if h[row][col] < 0:
            negate(col)
        pivots.append((row, col))
        col += 1
    # Reduce entries left of each pivot into [0, pivot).  Top-down order
    # keeps already reduced pivot rows untouched (pivot columns vanish
    # above their own pivot row).
    for row, col in pivots:
        for c in range(col):
            q = h[row][c] // h[row][col]
            if q:
                addmul(c, col, -q)
    return h, u


def integer_kernel_basis(a: Sequence[Sequence[int]]) -> List[List[int]]:
    """A basis of the lattice {x integral : A x = 0}."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if nrows == 0:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    h, u = hnf_columns(a)
    basis = []
    for c in range(ncols):
        if all(h[r][c] == 0 for r in range(nrows)):
            basis.append([u[r][c] for r in range(ncols)])
    return basis


def lattice_canonical_form(vectors: Sequence[Sequence[int]]) -> IntMatrix:
    """Canonical form of the lattice spanned by the given vectors.

    Two generating sets span the same lattice iff their canonical
    forms coincide (Hermite form of the matrix with the vectors as
    columns, zero columns dropped).
    """
    if not vectors:
        return []
    ncols = len(vectors[0])
    mat = [[vec[r] for vec in vectors] for r in range(ncols)]
    h, _ = hnf_columns(mat)
    keep = [c for c in range(len(vectors)) if any(h[r][c] != 0 for r in range(ncols))]
    return [[h[r][c] for c in keep] for r in range(ncols)]
