"""Symmetric group action on cell coordinates and on the invariants."""

from fractions import Fraction

import pytest

from torusquot.action import (
    adjoint_torus_action,
    check_equivariance,
    closed_y_action,
    coordinates_of_matrix,
    matrix_of_point,
    r2_action,
    r2_names,
    stabilizer_generators,
    standard_rep_action,
    standard_rep_names,
    x_action,
    x_names,
    y_action_substitution,
    y_names,
)
from torusquot.ratfunc import RationalFunction, compose, identity_substitution, variables
from torusquot.schubert import GrassmannElement, semistable_cells


G24 = GrassmannElement(5, 2, (2, 4))


def test_stabilizer_frozen():
    assert stabilizer_generators(G24) == frozenset({1, 2, 4})
    assert stabilizer_generators(GrassmannElement(6, 2, (3, 5))) == frozenset(
        {1, 2, 3, 5}
    )
    # the top cell's closure is everything, so every reflection stays
    assert stabilizer_generators(GrassmannElement(6, 2, (4, 5))) == frozenset(
        {1, 2, 3, 4, 5}
    )


def test_x_names_frozen():
    assert x_names(G24) == ("X_1_1", "X_1_2", "X_2_1", "X_2_2", "X_2_3")
    assert y_names(G24) == ("Y_1_1",)


def test_x_action_is_involution():
    ident = identity_substitution(x_names(G24))
    for k in sorted(stabilizer_generators(G24)):
        sub = x_action(k, G24)
        assert compose(sub, sub) == ident


def test_x_action_permutes_points_like_row_swap():
    """The coordinate action must agree with swapping matrix rows and
    re-reading coordinates, on a generic rational point."""
    values = {
        "X_1_1": Fraction(2),
        "X_1_2": Fraction(-3),
        "X_2_1": Fraction(5),
        "X_2_2": Fraction(7, 2),
        "X_2_3": Fraction(-1, 3),
    }
    for k in sorted(stabilizer_generators(G24)):
        mat = matrix_of_point(G24, values)
        swapped = [row[:] for row in mat]
        swapped[k - 1], swapped[k] = swapped[k], swapped[k - 1]
        direct = coordinates_of_matrix(swapped, G24)
        sub = x_action(k, G24)
        pulled = {name: sub[name].evaluate(values) for name in sub}
        assert pulled == direct


def test_coordinates_of_matrix_rejects_other_cells():
    values = {name: Fraction(1) for name in x_names(G24)}
    mat = matrix_of_point(G24, values)
    # moving the point out of the cell flips a pivot
    mat[2], mat[3] = mat[3], mat[2]
    with pytest.raises(ValueError):
        coordinates_of_matrix(mat, G24)


def test_closed_y_action_frozen_forms():
    one = {k: {n: f.canonical() for n, f in closed_y_action(k, G24).items()}
           for k in (1, 2, 4)}
    assert one[1] == {"Y_1_1": "(1)/(Y_1_1)"}
    assert one[2] == {"Y_1_1": "-Y_1_1 + 1"}
    assert one[4] == {"Y_1_1": "Y_1_1"}


@pytest.mark.parametrize("n,a", [(5, (2, 4)), (6, (3, 5)), (6, (4, 5))])
def test_pushed_through_action_matches_closed_form(n, a):
    g = GrassmannElement(n, 2, a)
    for k in sorted(stabilizer_generators(g)):
        assert y_action_substitution(k, g) == closed_y_action(k, g)


def test_y_action_is_involution_on_semistable_cells_n5():
    for g in semistable_cells(5, 2) + semistable_cells(5, 3):
        ident = identity_substitution(y_names(g))
        for k in sorted(stabilizer_generators(g)):
            sub = y_action_substitution(k, g)
            assert compose(sub, sub) == ident


def test_r2_rules_frozen():
    names = r2_names(3)
    y1, y2 = variables(names)["Y_1"], variables(names)["Y_2"]
    # leading swap
    assert r2_action(1, 3, y1) == y2
    # boxed pivot rule
    assert r2_action(2, 3, y1) == y1 / y2
    assert r2_action(2, 3, y2) == 1 / y2
    # affine flip
    assert r2_action(3, 3, y1) == 1 - y1


def test_r2_far_indices_need_ambient_size():
    names = r2_names(3)
    y1 = variables(names)["Y_1"]
    with pytest.raises(ValueError):
        r2_action(5, 3, y1)
    assert r2_action(5, 3, y1, n=7) == y1  # identity far block
    assert r2_action(4, 3, y1, n=5) == 1 / y1  # tight fit: final swap inverts
    with pytest.raises(ValueError):
        r2_action(4, 3, y1, n=7)  # k = m + 1 never stabilizes


def test_adjoint_model_matches_leading_rules():
    for m in (2, 3, 4):
        for k in range(1, m):
            for j in range(1, m):
                var = RationalFunction.variable(f"Y_{j}", r2_names(m))
                assert adjoint_torus_action(k, m, var) == r2_action(k, m, var)


def test_standard_rep_model_full_equivariance():
    for m in (2, 3):
        rep = check_equivariance(m)
        assert rep.ok
        assert rep.negative_control_failed


def test_standard_rep_action_shape():
    z1 = RationalFunction.variable("Z_1", standard_rep_names(2))
    assert standard_rep_action(2, 2, z1) == 1 - z1
    assert standard_rep_action(1, 2, z1) == 1 / z1
