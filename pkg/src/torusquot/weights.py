"""Weights of type A in the simple-root basis, with exact coordinates.

A weight is a rational vector (m_1, ..., m_l) standing for
sum m_i alpha_i, where alpha_1, ..., alpha_l are the simple roots of
sl_{l+1}.  The pairing with a simple coroot is computed through the
Cartan matrix, and simple reflections act by

    s_i(chi) = chi - <chi, alpha_i^vee> alpha_i.

Fundamental weights are obtained by solving the Cartan system, not
from a closed form; the closed form is checked against this in the
tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, List, Sequence, Tuple

from . import linalg
from .weyl import Permutation, reduced_word


@dataclass(frozen=True)
class Weight:
    """Coefficients over the simple roots, exact rationals."""

    coeffs: Tuple[Q, ...]

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coeffs))

    def __rmul__(self, c) -> "Weight":
        q = Q(c)
        return Weight(tuple(q * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def is_nonpositive(self) -> bool:
        return all(a <= 0 for a in self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def leq(self, other: "Weight") -> bool:
        """Coefficientwise comparison."""
        self._check(other)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def _check(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise ValueError("dimension mismatch")


def weight(coeffs: Iterable) -> Weight:
    return Weight(tuple(Q(c) for c in coeffs))


def zero_weight(rank: int) -> Weight:
    return Weight((Q(0),) * rank)


def simple_root(i: int, rank: int) -> Weight:
    if not 1 <= i <= rank:
        raise ValueError(f"simple root index {i} out of range for rank {rank}")
    return Weight(tuple(Q(1) if j == i else Q(0) for j in range(1, rank + 1)))


def cartan_matrix(rank: int) -> List[List[int]]:
    """Type A Cartan matrix: 2 on the diagonal, -1 off by one."""
    return [
        [2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank)]
        for i in range(rank)
    ]


def pairing(chi: Weight, j: int) -> Q:
    """<chi, alpha_j^vee> through the Cartan matrix."""
    if not 1 <= j <= chi.rank:
        raise ValueError(f"coroot index {j} out of range for rank {chi.rank}")
    a = cartan_matrix(chi.rank)
    return sum((m * a[i][j - 1] for i, m in enumerate(chi.coeffs)), Q(0))


def fundamental_weight(r: int, n: int) -> Weight:
    """omega_r for sl_n, solved from <omega_r, alpha_j^vee> = delta_rj."""
    rank = n - 1
    if not 1 <= r <= rank:
        raise ValueError(f"fundamental weight index {r} out of range for sl_{n}")
    a = cartan_matrix(rank)
    e = [Q(1) if j == r - 1 else Q(0) for j in range(rank)]
    sol = linalg.solve_linear(a, e)
    assert sol is not None  # the Cartan matrix is invertible
    return Weight(tuple(sol))


def reflect(i: int, chi: Weight) -> Weight:
    """s_i(chi) = chi - <chi, alpha_i^vee> alpha_i."""
    return chi - pairing(chi, i) * simple_root(i, chi.rank)


def act(w: Permutation, chi: Weight) -> Weight:
    """Action of a permutation on a weight, via any word for it."""
    if w.n != chi.rank + 1:
        raise ValueError("dimension mismatch")
    cur = chi
    for i in reversed(reduced_word(w)):
        cur = reflect(i, cur)
    return cur


def height(chi: Weight) -> Q:
    """Sum of the simple-root coefficients."""
    return sum(chi.coeffs, Q(0))


def descent_direction(mu: Weight, support: Sequence[int]) -> int:
    """Smallest index i in the support with <mu, alpha_i^vee> > 0.

    Any weight with positive coefficients exactly on the support pairs
    positively with some coroot there; a violation means the caller's
    hypothesis failed.
    """
    for i in sorted(support):
        if pairing(mu, i) > 0:
            return i
    raise ValueError("no positive pairing on the support; hypothesis violated")


def _extremal_target(omega: Weight, mode: str) -> Weight:
    if mode == "ceil":
        return Weight(tuple(m - math.ceil(m) for m in omega.coeffs))
    if mode == "floor":
        return Weight(tuple(m - math.floor(m) for m in omega.coeffs))
    raise ValueError(f"mode must be 'ceil' or 'floor', got {mode!r}")


def minuscule_floor_element(omega: Weight, mode: str = "ceil") -> Permutation:
    """The unique minimal-coset element moving omega to its rounded image.

    For ``mode='ceil'`` the image has coefficients m_i - ceil(m_i), all
    in (-1, 0]; for ``mode='floor'`` it has m_i - floor(m_i) in [0, 1).
    Requires omega minuscule (all coroot pairings along the orbit stay
    in {-1, 0, 1}); each step subtracts one simple root, choosing the
    smallest qualifying index.
    """
    target = _extremal_target(omega, mode)
    n = omega.rank + 1
    from .weyl import identity, simple_reflection  # local to avoid cycle noise

    w = identity(n)
    chi = omega
    steps = height(chi - target)
    if steps != int(steps):
        raise ValueError("omega is not in the root-translate of its rounding")
    for _ in range(int(steps)):
        moved = False
        for i in range(1, omega.rank + 1):
            if chi.coeffs[i - 1] > target.coeffs[i - 1] and pairing(chi, i) == 1:
                chi = chi - simple_root(i, omega.rank)
                w = simple_reflection(i, n) * w
                moved = True
                break
        if not moved:
            raise ValueError("descent stalled; weight is not minuscule")
    assert chi == target
    return w
