"""Independent ground truth for semistability and stabilizer checks.

Everything here recomputes its answers from first principles: explicit
integer matrices for generic cell points, exact minor expansion for
Pluecker supports, a phase-1 simplex over rationals for the barycenter
feasibility test, and direct subset bumping for cell-closure stability.
No code is shared with the modules under test beyond the Permutation
type, so agreement between the two sides is evidence, not tautology.

Verdicts are exact.  Genericity of a sampled point is the only
probabilistic ingredient; the sampling protocol demands identical
supports from three consecutive draws and reports "inconclusive"
rather than guessing when the draws keep disagreeing.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .weyl import Permutation

Subset = Tuple[int, ...]

SAMPLE_BOUND = 50  # coordinates are nonzero integers in [-50, 50]


# ---------------------------------------------------------------------------
# exact determinants


def int_det(rows: List[List[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [row[:] for row in rows]
    m = len(a)
    if m == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(m - 1):
        if a[k][k] == 0:
            for i in range(k + 1, m):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


# ---------------------------------------------------------------------------
# generic points of Grassmannian cells


def inversion_positions(w: Permutation) -> List[Tuple[int, int]]:
    """Matrix positions (i, j), i < j, of the roots inverted by w^{-1}."""
    winv = w.inverse()
    n = w.n
    return [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if winv(i) > winv(j)
    ]

def cell_permutation_from_subset(subset: Sequence[int], n: int) -> Permutation:
    """Minimal coset representative sending {1..r} to the given column set."""
    s = tuple(sorted(subset))
    rest = tuple(sorted(set(range(1, n + 1)) - set(s)))
    return Permutation(s + rest)


def sample_cell_matrix(
    w: Permutation, r: int, rng: random.Random
) -> List[List[int]]:
    """n x r integer matrix spanning a random point of the cell of w.

    The point is u . w . P with u unipotent upper triangular supported on
    the inversion positions of w^{-1}; its column span is the span of
    columns w(1), ..., w(r) of u.
    """
    n = w.n
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in inversion_positions(w):
        x = 0
        while x == 0:
            x = rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND)
        u[i - 1][j - 1] = x
    return [[u[i][w(k) - 1] for k in range(1, r + 1)] for i in range(n)]


def minor_support(mat: List[List[int]], n: int, r: int) -> FrozenSet[Subset]:
    """Row subsets with nonvanishing r x r minor."""
    out = []
    for rows in itertools.combinations(range(n), r):
        if int_det([mat[i] for i in rows]) != 0:
            out.append(tuple(i + 1 for i in rows))
    return frozenset(out)


@dataclass(frozen=True)
class SupportReport:
    """Outcome of the resampling protocol for one cell."""

    support: Optional[FrozenSet[Subset]]
    draws: Tuple[FrozenSet[Subset], ...]
    conclusive: bool

    @property
    def resampled(self) -> bool:
        return len(self.draws) > 3


def cell_support(
    w: Permutation, r: int, seed: int = 0, extra_draws: int = 5
) -> SupportReport:
    """Pluecker support of a generic cell point, by repeated sampling.

    Three consecutive identical draws are accepted; a disagreement (a
    random value landing on a minor's vanishing locus) triggers up to
    `extra_draws` further attempts before giving up.
    """
    draws: List[FrozenSet[Subset]] = []
    for k in range(3 + extra_draws):
        rng = random.Random(1_000_003 * seed + k)
        draws.append(minor_support(sample_cell_matrix(w, r, rng), w.n, r))
        if len(draws) >= 3 and draws[-1] == draws[-2] == draws[-3]:
            return SupportReport(draws[-1], tuple(draws), True)
    return SupportReport(None, tuple(draws), False)


# ---------------------------------------------------------------------------
# exact phase-1 simplex for barycenter membership


def feasible_combination(
    columns: List[List[Fraction]], b: List[Fraction]
) -> Tuple[bool, List[Fraction]]:
    """Solve sum_j x_j col_j = b, x >= 0 by phase-1 simplex, Bland's rule.

    Returns (True, x) with the feasible point, or (False, y) with a
    separating vector satisfying y . col_j <= 0 for all j and y . b > 0.
    """
    m = len(b)
    k = len(columns)
    rows = [[columns[j][i] for j in range(k)] for i in range(m)]
    for i in range(m):
        if b[i] < 0:
            rows[i] = [-v for v in rows[i]]
            b = b[:i] + [-b[i]] + b[i + 1 :]
    # tableau: original columns, artificial identity, rhs
    t = [rows[i] + [Fraction(int(i == p)) for p in range(m)] + [b[i]] for i in range(m)]
    basis = [k + i for i in range(m)]
    # reduced costs for phase-1 objective (sum of artificials, basis cost 1)
    z = [Fraction(0)] * (k + m)
    for j in range(k + m):
        z[j] = Fraction(int(j >= k)) - sum(t[i][j] for i in range(m))
    while True:
        enter = next((j for j in range(k + m) if z[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            if t[i][enter] > 0:
                ratio = t[i][-1] / t[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    leave, best = i, ratio
        if leave is None:
            raise ArithmeticError("phase-1 objective unbounded")  # impossible
        piv = t[leave][enter]
        t[leave] = [v / piv for v in t[leave]]
        for i in range(m):
            if i != leave and t[i][enter] != 0:
                f = t[i][enter]
                t[i] = [v - f * w for v, w in zip(t[i], t[leave])]
        f = z[enter]
        z = [v - f * w for v, w in zip(z, t[leave][: k + m])]
        basis[leave] = enter
    objective = sum(t[i][-1] for i in range(m) if basis[i] >= k)
    if objective == 0:
        x = [Fraction(0)] * k
        for i in range(m):
            if basis[i] < k:
                x[basis[i]] = t[i][-1]
        return True, x
    # infeasible: read the separating vector off the artificial columns
    y = [Fraction(1) - z[k + i] for i in range(m)]
    return False, y


@dataclass(frozen=True)
class HMCertificate:
    """Re-verified witness for a semistability verdict."""

    semistable: bool
    combination: Optional[Dict[Subset, Fraction]]
    separator: Optional[Tuple[Fraction, ...]]


def hm_semistable(
    support: FrozenSet[Subset], n: int, r: int
) -> HMCertificate:
    """Barycenter membership test for a Pluecker support.

    A point with this support is semistable for the torus action iff
    (r/n, ..., r/n) is a convex combination of the indicator vectors of
    the support.  The returned certificate is checked by direct inner
    products before being trusted.
    """
    subs = sorted(support)
    cols = [
        [Fraction(int(i in sub)) for i in range(1, n + 1)] + [Fraction(1)]
        for sub in subs
    ]
    b = [Fraction(r, n)] * n + [Fraction(1)]
    ok, vec = feasible_combination(cols, b)
    if ok:
        comb = {sub: coef for sub, coef in zip(subs, vec) if coef != 0}
        for i in range(n + 1):
            total = sum(coef * cols[subs.index(sub)][i] for sub, coef in comb.items())
            assert total == b[i], "feasibility certificate failed re-verification"
        assert all(c >= 0 for c in comb.values())
        return HMCertificate(True, comb, None)
    for col in cols:
        assert sum(y * v for y, v in zip(vec, col)) <= 0, (
            "separating vector failed re-verification"
        )
    assert sum(y * v for y, v in zip(vec, b)) > 0
    return HMCertificate(False, None, tuple(vec))


def cell_semistable(
    w: Permutation, r: int, seed: int = 0
) -> Tuple[str, SupportReport, Optional[HMCertificate]]:
    """Verdict for one cell: 'semistable', 'unstable', or 'inconclusive'."""
    rep = cell_support(w, r, seed=seed)
    if not rep.conclusive:
        return "inconclusive", rep, None
    cert = hm_semistable(rep.support, w.n, r)
    return ("semistable" if cert.semistable else "unstable"), rep, cert


# ---------------------------------------------------------------------------
# stabilizer of a cell closure, by subset bumping


def subset_leq(s: Subset, t: Subset) -> bool:
    """Componentwise comparison of sorted column sets (cell-closure order)."""
    return all(a <= b for a, b in zip(sorted(s), sorted(t)))


def reflection_preserves_closure(top: Subset, k: int, n: int) -> bool:
    """Does swapping k and k+1 map the cell closure of `top` into itself?

    The closure consists of the spans whose support subsets are
    dominated by `top`; the swap sends a dominated subset containing k
    but not k+1 to its bump, which must stay dominated.
    """
    r = len(top)
    for sub in itertools.combinations(range(1, n + 1), r):
        if subset_leq(sub, top) and k in sub and k + 1 not in sub:
            bumped = tuple(sorted(set(sub) - {k} | {k + 1}))
            if not subset_leq(bumped, top):
                return False
    return True


# ---------------------------------------------------------------------------
# weight images in coordinate form (independent of the weights module)


def weight_image(w: Permutation, coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Simple-root coefficients of w(chi) for chi given by coefficients.

    Works in the coordinate basis: the coefficient vector is converted
    to successive differences, permuted by w, and re-accumulated.
    """
    n = w.n
    m = [Fraction(c) for c in coeffs]
    if len(m) != n - 1:
        raise ValueError("coefficient count must be rank = n - 1")
    diffs = [m[0]] + [m[i] - m[i - 1] for i in range(1, n - 1)] + [-m[-1]]
    out = [Fraction(0)] * n
    for i in range(1, n + 1):
        out[w(i) - 1] = diffs[i - 1]
    acc = Fraction(0)
    result = []
    for i in range(n - 1):
        acc += out[i]
        result.append(acc)
    return tuple(result)


# ---------------------------------------------------------------------------
# full flag variety: pivot cells and the Hilbert-Mumford test


def flag_cell_of(mat: List[List[Fraction]]) -> Permutation:
    """Pivot permutation of the cell U_w w B containing a column flag.

    Columns are reduced left to right; each column's lowest nonzero row,
    after clearing rows already claimed by earlier columns from below,
    is its pivot.
    """
    n = len(mat)
    cols = [[Fraction(mat[i][j]) for i in range(n)] for j in range(n)]
    pivots: List[int] = []
    for j in range(n):
        col = cols[j]
        while True:
            low = max((i for i in range(n) if col[i] != 0), default=None)
            if low is None:
                raise ValueError("singular matrix has no flag cell")
            if low not in pivots:
                break
            j0 = pivots.index(low)
            f = col[low] / cols[j0][low]
            col = [c - f * p for c, p in zip(col, cols[j0])]
        cols[j] = col
        pivots.append(low)
    return Permutation(tuple(p + 1 for p in pivots))


def flag_point_semistable(
    mat: List[List[Fraction]], coeffs: Sequence[Fraction]
) -> bool:
    """Hilbert-Mumford verdict for a full flag and a dominant character.

    The flag spanned by the columns is semistable iff for every
    permutation sigma of the rows, the pivot cell w of the permuted
    flag satisfies w(chi) <= 0 coefficientwise.
    """
    n = len(mat)
    for images in itertools.permutations(range(1, n + 1)):
        sigma = Permutation(images)
        permuted = [mat[sigma.inverse()(i + 1) - 1] for i in range(n)]
        w = flag_cell_of(permuted)
        if not all(c <= 0 for c in weight_image(w, coeffs)):
            return False
    return True
