"""Weyl-group actions on cell coordinates and their torus invariants.

The open cell of a Grassmannian Schubert variety carries coordinates
X_{i,j}, one per inversion-array position.  A simple reflection that
stabilizes the closure acts on them by an explicit substitution,
dispatched over the index cases below; on the weight-zero cross-ratios
Y_{i,j} the induced action is computed by pushing through the X's and
re-expressing, with independently stated closed forms used as checks.

The cell (m, n-1) with r = 2 and the reflection representation of the
symmetric group get dedicated closed-form actions so the equivariance
between the two models can be certified symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .invariants import (
    ExponentVector,
    array_shape,
    torus_weight,
    y_generators,
    y_labels,
)
from .ratfunc import Names, RationalFunction, Substitution, variables
from .schubert import GrassmannElement, InversionArray, inversion_array, row_starts


# ---------------------------------------------------------------------------
# variable naming


@lru_cache(maxsize=None)
def x_names(g: GrassmannElement) -> Names:
    arr = inversion_array(g)
    return tuple(f"X_{i}_{j}" for i, j in arr.positions())


@lru_cache(maxsize=None)
def y_names(g: GrassmannElement) -> Names:
    return tuple(f"Y_{i}_{j}" for i, j in y_labels(inversion_array(g)))


def x_variable(g: GrassmannElement, i: int, j: int) -> RationalFunction:
    return RationalFunction.variable(f"X_{i}_{j}", x_names(g))


def y_variable(g: GrassmannElement, i: int, j: int) -> RationalFunction:
    return RationalFunction.variable(f"Y_{i}_{j}", y_names(g))


def _row_len(g: GrassmannElement, i: int) -> int:
    return max(g.a_seq[i - 1] - i + 1, 0)


# ---------------------------------------------------------------------------
# stabilizer of the cell closure


def stabilizer_generators(g: GrassmannElement) -> frozenset:
    """Simple indices whose reflection maps the cell closure into itself.

    A reflection s_k fails exactly when k sits one past a block end
    whose successor block is two or more steps away (bumping the column
    set {a_j + 1} out of the closure); every other index stabilizes.
    """
    a = g.a_seq
    excluded = set()
    for j in range(1, g.r + 1):
        k = a[j - 1] + 1
        if k > g.n - 1:
            continue
        if j == g.r or a[j] >= a[j - 1] + 2:
            excluded.add(k)
    return frozenset(k for k in range(1, g.n) if k not in excluded)


def stabilizer_families(g: GrassmannElement) -> Dict[str, Tuple[int, ...]]:
    """The stabilizer split into its four index families.

    ``head``: indices below the first block; ``gaps``: indices strictly
    between consecutive blocks (or past the last); ``block_end_less_one``
    and ``block_end``: the two indices attached to each block.  The
    family of block ends less one admits an exception: when the previous
    block ends exactly two steps below, s_{a_p - 1} bumps the column set
    out of the closure and is excluded (see family3_exclusions).
    """
    a = g.a_seq
    r = g.r
    head = tuple(k for k in range(1, a[0] - 1))
    gaps: List[int] = []
    for p in range(1, r):
        gaps.extend(range(a[p - 1] + 2, a[p] - 1))
    gaps.extend(range(a[r - 1] + 2, g.n))
    less_one = []
    for p in range(1, r + 1):
        k = a[p - 1] - 1
        if k < 1 or k in a:
            continue
        if p == 1 or a[p - 2] != a[p - 1] - 2:
            less_one.append(k)
    ends = tuple(k for k in a if 1 <= k <= g.n - 1)
    return {
        "head": head,
        "gaps": tuple(gaps),
        "block_end_less_one": tuple(less_one),
        "block_end": ends,
    }


def family3_exclusions(g: GrassmannElement) -> Tuple[int, ...]:
    """Indices of the form a_p - 1 that do NOT stabilize the closure.

    These are exactly the a_p - 1 with a_{p-1} = a_p - 2; listing every
    a_p - 1 unconditionally overcounts the stabilizer on such cells.
    """
    a = g.a_seq
    out = []
    for p in range(2, g.r + 1):
        k = a[p - 1] - 1
        if k >= 1 and k not in a and a[p - 2] == a[p - 1] - 2:
            out.append(k)
    return tuple(out)


# ---------------------------------------------------------------------------
# case dispatch


def action_case(k: int, g: GrassmannElement) -> Tuple[str, int]:
    """Which action rule applies for s_k on this cell: (label, block index).

    Labels: ``head-swap`` (column swap in every row), ``gap-swap``
    (column swap below block p), ``pre-block-swap`` (s_{a_p - 1}),
    ``row-swap`` (s_{a_p}, previous block adjacent), ``inversion``
    (s_{a_p}, previous block distant or p = 1), ``outside`` (indices
    past every block; the action is trivial).
    """
    a = g.a_seq
    r = g.r
    if not 1 <= k <= g.n - 1:
        raise ValueError(f"simple index {k} out of range for n={g.n}")
    if k in a:
        p = a.index(k) + 1
        if p >= 2 and a[p - 2] == k - 1:
            return "row-swap", p
        return "inversion", p
    for p in range(1, r + 1):
        if k == a[p - 1] - 1:
            if p >= 2 and a[p - 2] == a[p - 1] - 2:
                raise ValueError(f"cell not stable under s_{k}")
            return "pre-block-swap", p
    if k <= a[0] - 2:
        return "head-swap", 0
    for p in range(1, r):
        if a[p - 1] + 2 <= k <= a[p] - 2:
            return "gap-swap", p
    if k >= a[r - 1] + 2:
        return "outside", r
    raise ValueError(f"cell not stable under s_{k}")


# ---------------------------------------------------------------------------
# action on the X coordinates


def _x_identity(g: GrassmannElement) -> Substitution:
    return variables(x_names(g))


def _swap_columns(sub: Substitution, g: GrassmannElement, rows: Sequence[int], c1: int, c2: int) -> None:
    for i in rows:
        if _row_len(g, i) >= max(c1, c2):
            sub[f"X_{i}_{c1}"], sub[f"X_{i}_{c2}"] = sub[f"X_{i}_{c2}"], sub[f"X_{i}_{c1}"]


def x_action(k: int, g: GrassmannElement) -> Substitution:
    """Substitution on the X's realizing s_k on the open cell.

    Swap cases move whole columns (the start values k and k+1 trade
    places in every affected row); the s_{a_p} case with a distant
    previous block inverts the last coordinate of row p and corrects
    the lower rows by an elementary column operation.
    """
    label, p = action_case(k, g)
    a = g.a_seq
    r = g.r
    sub = _x_identity(g)
    if label == "outside":
        return sub
    if label == "head-swap":
        _swap_columns(sub, g, range(1, r + 1), k, k + 1)
        return sub
    if label == "gap-swap":
        _swap_columns(sub, g, range(p + 1, r + 1), k - p, k - p + 1)
        return sub
    if label == "pre-block-swap":
        c = a[p - 1] - p
        _swap_columns(sub, g, range(p, r + 1), c, c + 1)
        return sub
    if label == "row-swap":
        # adjacent blocks have rows of equal length
        for q in range(1, _row_len(g, p) + 1):
            sub[f"X_{p}_{q}"], sub[f"X_{p - 1}_{q}"] = (
                sub[f"X_{p - 1}_{q}"],
                sub[f"X_{p}_{q}"],
            )
        return sub
    # inversion case at block p
    lp = a[p - 1] - p + 1
    xpl = x_variable(g, p, lp)
    sub[f"X_{p}_{lp}"] = 1 / xpl
    for q in range(1, lp):
        sub[f"X_{p}_{q}"] = x_variable(g, p, q) / xpl
    for j in range(p + 1, r + 1):
        xjl = x_variable(g, j, lp)
        sub[f"X_{j}_{lp}"] = -xjl / xpl
        for q in range(1, lp):
            sub[f"X_{j}_{q}"] = x_variable(g, j, q) - xjl * x_variable(g, p, q) / xpl
    return sub


# ---------------------------------------------------------------------------
# moving between X and Y coordinates


class ReexpressionError(ValueError):
    """A function expected to be torus-invariant failed to reduce to Y's."""


def y_to_x(g: GrassmannElement) -> Substitution:
    """Each cross-ratio Y_{i,j} as a Laurent monomial in the X's."""
    sub: Substitution = {}
    for i, j in y_labels(inversion_array(g)):
        li = g.a_seq[i - 1] - i + 1
        sub[f"Y_{i}_{j}"] = (
            x_variable(g, i, li)
            * x_variable(g, i + 1, j)
            / (x_variable(g, i, j) * x_variable(g, i + 1, li))
        )
    return sub


def _monomial_weight(g: GrassmannElement, arr: InversionArray, mono: Tuple[int, ...]):
    return torus_weight(ExponentVector(array_shape(arr), mono), arr)


def reexpress_in_y(f: RationalFunction, g: GrassmannElement) -> RationalFunction:
    """Rewrite a torus-invariant rational function of the X's in the Y's.

    Requires both numerator and denominator to be weight-homogeneous of
    a common weight (true for any invariant after gcd reduction, since
    distinct monomial weights cannot cancel); each monomial is then a
    weight-zero multiple of the denominator's leading monomial and is
    solved exactly in the cross-ratio exponent lattice.
    """
    if f.names != x_names(g):
        raise ValueError("expected a function of this cell's X coordinates")
    if f.is_zero:
        return RationalFunction.constant(0, y_names(g))
    arr = inversion_array(g)
    num, den = f.numer_terms(), f.denom_terms()
    wn = _monomial_weight(g, arr, num[0][0])
    wd = _monomial_weight(g, arr, den[0][0])
    if any(_monomial_weight(g, arr, m) != wn for m, _ in num[1:]):
        raise ReexpressionError("numerator is not weight-homogeneous")
    if any(_monomial_weight(g, arr, m) != wd for m, _ in den[1:]):
        raise ReexpressionError("denominator is not weight-homogeneous")
    if wn != wd:
        raise ReexpressionError("function has nonzero torus weight")
    basis = y_generators(arr) if g.r >= 2 else None
    pivot = den[0][0]
    ynames = y_names(g)

    def monomial_image(mono: Tuple[int, ...]) -> RationalFunction:
        target = [e - p for e, p in zip(mono, pivot)]
        if not any(target):
            return RationalFunction.constant(1, ynames)
        if basis is None:
            raise ReexpressionError("nonconstant invariant monomial with r < 2")
        cols = [list(vec.exps) for vec in basis.generators]
        mat = [[col[i] for col in cols] for i in range(len(target))]
        sol = linalg.solve_linear(mat, target)
        if sol is None or any(z.denominator != 1 for z in sol):
            raise ReexpressionError("monomial outside the cross-ratio lattice")
        out = RationalFunction.constant(1, ynames)
        for (i, j), z in zip(basis.labels, sol):
            if z:
                out = out * RationalFunction.variable(f"Y_{i}_{j}", ynames) ** int(z)
        return out

    num_y = RationalFunction.constant(0, ynames)
    for mono, coeff in num:
        num_y = num_y + RationalFunction.constant(coeff, ynames) * monomial_image(mono)
    den_y = RationalFunction.constant(0, ynames)
    for mono, coeff in den:
        den_y = den_y + RationalFunction.constant(coeff, ynames) * monomial_image(mono)
    if den_y.is_zero:
        raise ReexpressionError("denominator collapsed to zero")
    return num_y / den_y


def y_action(k: int, g: GrassmannElement, f: RationalFunction) -> RationalFunction:
    """Action of s_k on a rational function of the Y's, via the X level."""
    fx = f.subs(y_to_x(g), target_names=x_names(g))
    gx = fx.subs(x_action(k, g))
    return reexpress_in_y(gx, g)


def y_action_substitution(k: int, g: GrassmannElement) -> Substitution:
    return {
        name: y_action(k, g, RationalFunction.variable(name, y_names(g)))
        for name in y_names(g)
    }


def closed_y_action(k: int, g: GrassmannElement) -> Substitution:
    """Expected images of the Y's under s_k, as standalone closed forms.

    These are stated independently of the X-level computation so the
    two can be compared; the adjacent-block row-swap case is derived
    from the coordinate-level action (its direct closed form does not
    survive in a legible state and is certified by the comparison).
    """
    label, p = action_case(k, g)
    a = g.a_seq
    r = g.r
    names = y_names(g)
    sub = variables(names)

    def yv(i: int, c: int) -> RationalFunction:
        # convention: out-of-range cross-ratios are 1
        if 1 <= i <= r - 1 and 1 <= c <= a[i - 1] - i:
            return RationalFunction.variable(f"Y_{i}_{c}", names)
        return RationalFunction.constant(1, names)

    if label == "outside":
        return sub
    if label == "head-swap":
        for i in range(1, r):
            if a[i - 1] - i >= k + 1:
                sub[f"Y_{i}_{k}"], sub[f"Y_{i}_{k + 1}"] = (
                    sub[f"Y_{i}_{k + 1}"],
                    sub[f"Y_{i}_{k}"],
                )
        return sub
    if label == "gap-swap":
        for i in range(p + 1, r):
            c = k - p
            sub[f"Y_{i}_{c}"], sub[f"Y_{i}_{c + 1}"] = (
                sub[f"Y_{i}_{c + 1}"],
                sub[f"Y_{i}_{c}"],
            )
        return sub
    if label == "pre-block-swap":
        c = a[p - 1] - p
        for i in range(p, r):
            if a[i - 1] - i == c:
                sub[f"Y_{i}_{c}"] = 1 / yv(i, c)
                for q in range(1, c):
                    sub[f"Y_{i}_{q}"] = yv(i, q) / yv(i, c)
            elif i > p and a[i - 1] - i > c:
                sub[f"Y_{i}_{c}"], sub[f"Y_{i}_{c + 1}"] = (
                    sub[f"Y_{i}_{c + 1}"],
                    sub[f"Y_{i}_{c}"],
                )
        return sub
    if label == "row-swap":
        top = a[p - 1] - p  # common Y-range of rows p-1 and p
        if p >= 3:
            for q in range(1, a[p - 3] - p + 3):
                sub[f"Y_{p - 2}_{q}"] = (
                    yv(p - 2, q) * yv(p - 1, q) / yv(p - 1, a[p - 3] - p + 3)
                )
        for q in range(1, top + 1):
            sub[f"Y_{p - 1}_{q}"] = 1 / yv(p - 1, q)
        if p <= r - 1:
            for q in range(1, top + 1):
                sub[f"Y_{p}_{q}"] = yv(p, q) * yv(p - 1, q)
        return sub
    # inversion case at block p
    lp = a[p - 1] - p + 1
    if p <= r - 1:
        for q in range(1, lp):
            sub[f"Y_{p}_{q}"] = 1 - yv(p, q)
    for i in range(p + 1, r):
        for q in range(1, lp):
            prod = RationalFunction.constant(1, names)
            for m in range(p, i):
                prod = prod * yv(m, q) / yv(m, lp)
            prod_top = prod * yv(i, q) / yv(i, lp)
            sub[f"Y_{i}_{q}"] = (1 - prod_top) / (1 - prod) * yv(i, lp)
    return sub


# ---------------------------------------------------------------------------
# matrix realization of cell points


def matrix_of_point(
    g: GrassmannElement, values: Mapping[str, Fraction]
) -> List[List[Fraction]]:
    """The n x r column-span matrix of the cell point with the given X's."""
    mat = [[Fraction(0)] * g.r for _ in range(g.n)]
    for j in range(1, g.r + 1):
        mat[g.a_seq[j - 1]][j - 1] = Fraction(1)
        for q, start in enumerate(row_starts(g, j), start=1):
            mat[start - 1][j - 1] = Fraction(values[f"X_{j}_{q}"])
    return mat


def coordinates_of_matrix(
    mat: Sequence[Sequence[Fraction]], g: GrassmannElement
) -> Dict[str, Fraction]:
    """Cell coordinates of a column span lying in the open cell of g.

    Columns are reduced to the canonical cell form (pivot rows a_j + 1
    from the bottom up, pivots scaled to 1, pivot rows cleared); raises
    if the span's pivot set is not this cell's column set.
    """
    n, r = g.n, g.r
    cols = [[Fraction(mat[i][j]) for i in range(n)] for j in range(r)]

    def lowest(col: List[Fraction]) -> int:
        for i in range(n - 1, -1, -1):
            if col[i]:
                return i
        return -1

    chosen: Dict[int, List[Fraction]] = {}
    remaining = cols
    while remaining:
        lows = [lowest(c) for c in remaining]
        if -1 in lows:
            raise ValueError("matrix has dependent columns")
        idx = max(range(len(remaining)), key=lambda t: lows[t])
        piv = lows[idx]
        col = remaining.pop(idx)
        for other in remaining:
            if other[piv]:
                fac = other[piv] / col[piv]
                for i in range(n):
                    other[i] -= fac * col[i]
        chosen[piv] = col
    if sorted(chosen) != list(g.a_seq):
        raise ValueError(
            f"point lies in the cell with pivots {sorted(i + 1 for i in chosen)}, "
            f"not {[x + 1 for x in g.a_seq]}"
        )
    ordered = [chosen[g.a_seq[j]] for j in range(r)]
    for j in range(r):
        piv = g.a_seq[j]
        scale = ordered[j][piv]
        ordered[j] = [v / scale for v in ordered[j]]
        for j2 in range(j + 1, r):
            fac = ordered[j2][piv]
            if fac:
                ordered[j2] = [v - fac * w for v, w in zip(ordered[j2], ordered[j])]
    out: Dict[str, Fraction] = {}
    for j in range(1, r + 1):
        for q, start in enumerate(row_starts(g, j), start=1):
            out[f"X_{j}_{q}"] = ordered[j - 1][start - 1]
    return out


# ---------------------------------------------------------------------------
# the r = 2 family and the reflection representation


def r2_names(m: int) -> Names:
    return tuple(f"Y_{i}" for i in range(1, m))


def r2_action(
    k: int, m: int, f: RationalFunction, n: Optional[int] = None
) -> RationalFunction:
    """Closed-form action of s_k on the invariants of the cell (m, n-1), r = 2.

    Indices up to m act through the reflection-representation rules;
    indices from m + 2 on act trivially except that for m = n - 2 the
    final index inverts every variable.  k = m + 1 (for m < n - 2) does
    not stabilize the cell and is an error, as is any k needing the
    ambient size when none is given.
    """
    if m < 2:
        raise ValueError("the r = 2 family needs m >= 2")
    names = r2_names(m)
    if f.names != names:
        raise ValueError("expected a function of Y_1 .. Y_{m-1}")
    sub = variables(names)
    if 1 <= k <= m - 2:
        sub[f"Y_{k}"], sub[f"Y_{k + 1}"] = sub[f"Y_{k + 1}"], sub[f"Y_{k}"]
    elif k == m - 1:
        ym = RationalFunction.variable(f"Y_{m - 1}", names)
        sub[f"Y_{m - 1}"] = 1 / ym
        for i in range(1, m - 1):
            sub[f"Y_{i}"] = RationalFunction.variable(f"Y_{i}", names) / ym
    elif k == m:
        for i in range(1, m):
            sub[f"Y_{i}"] = 1 - RationalFunction.variable(f"Y_{i}", names)
    else:
        if n is None:
            raise ValueError("indices past m need the ambient size n")
        if k > n - 1:
            raise ValueError(f"simple index {k} out of range for n={n}")
        if m == n - 2:
            # only k = n - 1 = m + 1 lands here; the adjacent-block row
            # swap inverts every invariant
            for i in range(1, m):
                sub[f"Y_{i}"] = 1 / RationalFunction.variable(f"Y_{i}", names)
        elif k == m + 1:
            raise ValueError(f"s_{k} is not a listed case for m={m}, n={n}")
        # m <= n - 3, k >= m + 2: identity
    return f.subs(sub)


def standard_rep_names(m: int) -> Names:
    return tuple(f"Z_{i}" for i in range(1, m))


@lru_cache(maxsize=None)
def _standard_rep_substitution(k: int, m: int) -> Tuple[Tuple[str, RationalFunction], ...]:
    xnames = tuple(f"x_{i}" for i in range(1, m + 2))
    znames = standard_rep_names(m)
    xs = variables(xnames)
    swap = variables(xnames)
    swap[f"x_{k}"], swap[f"x_{k + 1}"] = swap[f"x_{k + 1}"], swap[f"x_{k}"]
    slice_sub: Substitution = {}
    for i in range(1, m):
        slice_sub[f"x_{i}"] = RationalFunction.variable(f"Z_{i}", znames)
    slice_sub[f"x_{m}"] = RationalFunction.constant(1, znames)
    slice_sub[f"x_{m + 1}"] = RationalFunction.constant(0, znames)
    out = []
    for i in range(1, m):
        zi = (xs[f"x_{i}"] - xs[f"x_{m + 1}"]) / (xs[f"x_{m}"] - xs[f"x_{m + 1}"])
        img = zi.subs(swap).subs(slice_sub, target_names=znames)
        out.append((f"Z_{i}", img))
    return tuple(out)


def standard_rep_action(k: int, m: int, f: RationalFunction) -> RationalFunction:
    """Action of s_k on ratios Z_i = (x_i - x_{m+1}) / (x_m - x_{m+1}).

    The x_i are permutation coordinates of the reflection representation
    of the symmetric group on m + 1 letters; the Z's are a complete set
    of invariants for simultaneous translation and scaling, so the
    permuted ratio always re-expresses in them (evaluate on the section
    x = (Z_1, ..., Z_{m-1}, 1, 0)).
    """
    if not 1 <= k <= m:
        raise ValueError(f"index {k} out of range for the rank-{m} model")
    if f.names != standard_rep_names(m):
        raise ValueError("expected a function of Z_1 .. Z_{m-1}")
    return f.subs(dict(_standard_rep_substitution(k, m)))


def adjoint_torus_action(k: int, m: int, f: RationalFunction) -> RationalFunction:
    """Action of s_k on torus characters, in the variables Y_i = e^{eps_i - eps_m}.

    Model for the index range 1..m-1: permuting the eps-coordinates of
    the adjoint torus and rewriting each image character in the Y's
    (with e^{eps_m - eps_m} = 1).
    """
    if not 1 <= k <= m - 1:
        raise ValueError(f"index {k} out of range for the rank-{m} torus model")
    names = r2_names(m)
    if f.names != names:
        raise ValueError("expected a function of Y_1 .. Y_{m-1}")

    def character(i: int) -> RationalFunction:
        if i == m:
            return RationalFunction.constant(1, names)
        return RationalFunction.variable(f"Y_{i}", names)

    def img(i: int) -> int:
        return k + 1 if i == k else (k if i == k + 1 else i)

    sub = {f"Y_{i}": character(img(i)) / character(img(m)) for i in range(1, m)}
    return f.subs(sub)


@dataclass(frozen=True)
class EquivarianceReport:
    """Per-generator comparison of the two closed-form models."""

    m: int
    entries: Tuple[Tuple[int, int, bool], ...]  # (k, i, match)
    negative_control_failed: bool  # perturbed rule must NOT match

    @property
    def ok(self) -> bool:
        return all(match for _, _, match in self.entries) and self.negative_control_failed


def check_equivariance(m: int) -> EquivarianceReport:
    """Does the r = 2 closed action match the reflection representation?

    Compares r2_action and standard_rep_action on every variable for
    every generator index 1..m, after the renaming Y_i -> Z_i; also runs
    a negative control replacing the rule for s_m by Z_i -> 1 + Z_i,
    which must break the match.
    """
    if m < 2:
        raise ValueError("the comparison needs m >= 2")
    ynames = r2_names(m)
    znames = standard_rep_names(m)
    rename = {
        f"Y_{i}": RationalFunction.variable(f"Z_{i}", znames) for i in range(1, m)
    }
    entries = []
    for k in range(1, m + 1):
        for i in range(1, m):
            yi = RationalFunction.variable(f"Y_{i}", ynames)
            lhs = r2_action(k, m, yi).subs(rename, target_names=znames)
            rhs = standard_rep_action(
                k, m, RationalFunction.variable(f"Z_{i}", znames)
            )
            entries.append((k, i, lhs == rhs))
    z1 = RationalFunction.variable("Z_1", znames)
    perturbed = 1 + z1
    control = standard_rep_action(m, m, z1) != perturbed
    return EquivarianceReport(m, tuple(entries), control)
