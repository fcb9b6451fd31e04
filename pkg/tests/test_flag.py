"""Full-flag cells, the quotient coordinate map, and its desk checks."""

import random
from fractions import Fraction

import pytest

from torusquot import flag, oracle
from torusquot.flag import (
    RegularDominantChar,
    add_roots,
    all_positive_roots,
    beta_prime,
    cell_parameter,
    cyclic_element,
    decompose_point,
    flag_reexpress_in_y,
    flag_y_names,
    inversion_roots,
    negative_elements,
    pi_point,
    pi_tau,
    point_matrix,
    reflect_root,
    restrict_to_first,
    root_order,
    root_weight,
    s1_y_action,
    semistable_flag_support,
    subgroup_fixing_last,
    swap_rows,
    symbolic_coords,
    top_cell,
    torus_scale,
    verify_w_stability,
    y_value,
)
from torusquot.ratfunc import RationalFunction
from torusquot.weyl import all_permutations, from_word, length


# ---------------------------------------------------------------------------
# interval roots


def test_root_order_blocks_by_start_then_longest_first():
    assert root_order(3) == ((1, 3), (1, 2), (1, 1), (2, 3), (2, 2), (3, 3))
    assert len(all_positive_roots(4)) == 10


def test_add_roots_concatenates_intervals():
    assert add_roots((1, 2), (3, 5)) == (1, 5)
    assert add_roots((3, 5), (1, 2)) == (1, 5)
    assert add_roots((1, 2), (4, 5)) is None
    assert add_roots((1, 3), (2, 5)) is None


def test_reflect_root_letter_swap():
    # s_2 on [2,2] is the negative root: dropped
    assert reflect_root(2, (2, 2)) is None
    assert reflect_root(2, (1, 1)) == (1, 2)
    assert reflect_root(2, (1, 2)) == (1, 1)
    assert reflect_root(2, (3, 4)) == (2, 4)
    assert reflect_root(1, (3, 4)) == (3, 4)


def test_root_weight_indicator():
    assert root_weight((2, 3), 4) == (0, 1, 1, 0)


def test_beta_prime_unique_completion():
    # [2,4] completes with [1,1] to the first-row interval [1,4]
    assert beta_prime((2, 4), 4) == (1, 1)
    assert beta_prime((3, 3), 4) == (1, 2)
    with pytest.raises(ValueError):
        beta_prime((1, 3), 4)


# ---------------------------------------------------------------------------
# cells of the semistable shape


def test_cyclic_element_one_line():
    assert cyclic_element(3).images == (2, 3, 4, 1)


def test_cell_parameter_splits_off_cycle():
    c = cyclic_element(3)
    for tau in subgroup_fixing_last(3):
        w = c * tau
        assert cell_parameter(w) == tau
        assert restrict_to_first(tau).n == 3


def test_cell_parameter_rejects_other_cells():
    with pytest.raises(ValueError):
        cell_parameter(cyclic_element(3) * from_word((3,), 4))


def test_negative_elements_counts():
    import math

    for n in (2, 3):
        chi = RegularDominantChar(n, tuple(range(1, n + 1)))
        elements = negative_elements(chi)  # internally cross-checked
        assert len(elements) == math.factorial(n)
        c = cyclic_element(n)
        assert all(cell_parameter(w) is not None for w in elements)
        assert c in elements


def test_regular_dominant_char_validation():
    with pytest.raises(ValueError):
        RegularDominantChar(3, (1, 2))
    with pytest.raises(ValueError):
        RegularDominantChar(3, (0, 1, 2))
    with pytest.raises(ValueError):
        RegularDominantChar(3, (1, 1, 2))


# ---------------------------------------------------------------------------
# points of a cell and their coordinates


def _random_coords(w, rng):
    return {
        r: Fraction(rng.choice([v for v in range(-9, 10) if v]))
        for r in inversion_roots(w)
    }


@pytest.mark.parametrize("n", [3, 4])
def test_decompose_inverts_point_matrix_everywhere(n):
    rng = random.Random(0)
    for w in all_permutations(n):
        coords = _random_coords(w, rng)
        w2, coords2 = decompose_point(point_matrix(w, coords))
        assert w2 == w
        assert coords2 == coords


def test_inversion_roots_follow_global_order():
    w = top_cell(3)
    roots = inversion_roots(w)
    assert len(roots) == length(w)
    order = root_order(3)
    assert sorted(roots, key=order.index) == list(roots)


def test_torus_scale_rescales_coordinates():
    w = top_cell(2)
    coords = {(1, 1): Fraction(2), (1, 2): Fraction(3), (2, 2): Fraction(5)}
    ts = [Fraction(1), Fraction(2), Fraction(6)]
    _, scaled = decompose_point(torus_scale(point_matrix(w, coords), ts))
    # coordinate at [j,k] rescales by t_j / t_{k+1}
    assert scaled[(1, 1)] == coords[(1, 1)] * ts[0] / ts[1]
    assert scaled[(1, 2)] == coords[(1, 2)] * ts[0] / ts[2]
    assert scaled[(2, 2)] == coords[(2, 2)] * ts[1] / ts[2]


# ---------------------------------------------------------------------------
# the quotient map


def test_pi_tau_frozen_small_cell():
    tau = from_word((1, 2), 4)
    exprs = pi_tau(tau, 3)
    assert {k: v.canonical() for k, v in exprs.items()} == {
        "Y_1_1": "(-X_1_1*X_2_2)/(X_1_2)",
        "Y_1_2": "(-X_1_1*X_2_3)/(X_1_3)",
    }


def test_pi_tau_rejects_moving_last_letter():
    with pytest.raises(ValueError):
        pi_tau(from_word((3,), 4), 3)


@pytest.mark.parametrize("n", [2, 3])
def test_pi_point_matches_symbolic_map(n):
    rng = random.Random(1)
    for tau in subgroup_fixing_last(n):
        w = cyclic_element(n) * tau
        exprs = pi_tau(tau, n)
        coords = _random_coords(w, rng)
        values = {
            f"X_{a}_{b}": v for (a, b), v in coords.items()
        }
        small, yvals = pi_point(w, coords)
        for (a, b), val in yvals.items():
            assert exprs[f"Y_{a}_{b}"].evaluate(values) == val


def test_y_value_reads_quotient_coordinate():
    w0 = top_cell(2)
    coords = {(1, 1): Fraction(2), (1, 2): Fraction(3), (2, 2): Fraction(5)}
    mat = point_matrix(w0, coords)
    assert y_value(mat, (1, 1)) == Fraction(2)
    assert y_value(mat, (2, 2)) == Fraction(5)


def test_support_predicate_matches_sampling_oracle():
    """First-row coordinates nonzero iff the point is torus-semistable,
    on every cell of the smallest two flag varieties."""
    rng = random.Random(7)
    for n in (2, 3):
        chi = [Fraction(c) for c in range(1, n + 1)]
        cyc = cyclic_element(n)
        for w in all_permutations(n + 1):
            try:
                member = semistable_flag_support(w, n)
                is_cell = True
            except ValueError:
                is_cell = False
            for _ in range(3):
                coords = _random_coords(w, rng)
                mat = point_matrix(w, coords)
                truth = oracle.flag_point_semistable(
                    [[Fraction(e) for e in row] for row in mat], chi
                )
                if is_cell:
                    assert truth == member(coords)
                else:
                    assert not truth
            if is_cell:
                # vanishing any first-row coordinate destabilizes
                coords = _random_coords(w, rng)
                coords[(1, 1)] = Fraction(0)
                assert not member(coords)


# ---------------------------------------------------------------------------
# the induced action downstairs


def test_s1_rule_negates_and_shifts_first_row():
    names = flag_y_names(2)
    got = {
        nm: s1_y_action(RationalFunction.variable(nm, names)).canonical()
        for nm in names
    }
    assert got == {"Y_1_1": "-Y_1_1 - 1", "Y_1_2": "-Y_1_2 - 1", "Y_2_2": "Y_2_2"}


def test_s1_rule_is_involution():
    names = flag_y_names(3)
    for nm in names:
        var = RationalFunction.variable(nm, names)
        assert s1_y_action(s1_y_action(var)) == var


def test_reexpress_in_y_roundtrip():
    n = 2
    w0 = top_cell(n)
    coords = symbolic_coords(w0)
    # the signed cross-ratio -X_1_1 X_2_2 / X_1_2 IS the quotient coordinate
    f = -coords[(1, 1)] * coords[(2, 2)] / coords[(1, 2)]
    assert flag_reexpress_in_y(f, n).canonical() == "Y_1_1"
    assert flag_reexpress_in_y(f * f, n).canonical() == "Y_1_1**2"
    with pytest.raises(flag.FlagReexpressionError):
        flag_reexpress_in_y(coords[(1, 1)], n)  # weight nonzero


def test_swap_rows_keeps_generic_top_cell_point_in_cell():
    w0 = top_cell(2)
    coords = _random_coords(w0, random.Random(3))
    w2, _ = decompose_point(swap_rows(point_matrix(w0, coords), 2))
    assert w2 == w0


# ---------------------------------------------------------------------------
# the aggregated desk check


def test_stability_report_small():
    rep = verify_w_stability(2)
    assert rep.ok
    assert rep.support_preserved == (60, 60)
    assert rep.injectivity == (40, 40)
    assert rep.rescale_stable == (60, 60)
    assert rep.case_tallies["3-middle-equals-inner-ends"] == (30, 30)
    assert rep.global_identity["sign-dropped"] == (60, 60)
    assert rep.induced_first_rule and rep.induced_higher_rules == {2: True}


def test_stability_report_records_sign_convention():
    rep = verify_w_stability(2)
    assert "leading minus dropped" in rep.validated_readings["quotient-map-sign"]
    assert "s_i" in rep.validated_readings["case-3-right-end"]
    assert "dropping the leading minus" in rep.sign_note


def test_stability_check_refuses_large_rank():
    with pytest.raises(ValueError):
        verify_w_stability(5)
