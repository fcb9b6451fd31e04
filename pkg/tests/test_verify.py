"""The named cross-check suites and their registry."""

import pytest

from torusquot.verify import CheckReport, available_suites, exhaustive_check


def test_registry_is_complete():
    assert available_suites() == (
        "cor-4.3",
        "cor-4.4",
        "cor-5.3",
        "cor-5.4",
        "lemma-1.6",
        "lemma-1.7",
        "lemma-1.8",
        "lemma-2.7",
        "lemma-3.1",
        "lemma-4.1",
        "lemma-5.1",
        "prop-2.9",
        "prop-3.2",
        "prop-4.2",
        "strata",
        "thm-5.2",
    )


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        exhaustive_check("lemma-9.9")


def test_gateway_oracle_example():
    rep = exhaustive_check("lemma-2.7", n=5, r=2)
    assert rep.ok
    assert rep.checked == 10
    assert "2 semistable cells" in rep.details[0]


def test_order_reversal_example():
    rep = exhaustive_check("lemma-1.8", n=5, rs=(2,))
    assert rep.ok
    assert rep.checked == 100  # all ordered pairs of the ten cells


def test_negative_set_example():
    rep = exhaustive_check("lemma-5.1", n=3)
    assert rep.ok  # three characters, six elements each


def test_report_payload_shape():
    rep = exhaustive_check("strata", n_min=4, n_max=5)
    assert isinstance(rep, CheckReport)
    payload = rep.to_payload()
    assert payload["name"] == "strata"
    assert payload["status"] == "pass"
    assert "counterexample" not in payload
    assert payload["params"] == {"n_min": 4, "n_max": 5}


def test_none_params_are_dropped():
    rep = exhaustive_check("lemma-2.7", n=4, r=2, seeds=None)
    assert rep.ok
    assert rep.params["seeds"] == [0, 1, 2]


@pytest.mark.parametrize(
    "name,params",
    [
        ("lemma-1.6", {"n": 5, "rs": (1, 2)}),
        ("lemma-1.7", {"n": 5, "rs": (1, 2)}),
        ("prop-2.9", {"n": 5, "rs": (2, 3)}),
        ("lemma-3.1", {"n": 4}),
        ("prop-3.2", {"n": 5}),
        ("lemma-4.1", {"n": 5, "points": 1}),
        ("prop-4.2", {"ms": (2, 3)}),
        ("cor-4.3", {"ms": (2, 3)}),
        ("cor-4.4", {"ms": (2,)}),
        ("strata", {"n_min": 4, "n_max": 6}),
        ("thm-5.2", {"n": 2, "samples": 6}),
        ("cor-5.3", {"n": 2}),
        ("cor-5.4", {"n": 2}),
    ],
)
def test_suites_pass_at_reduced_scale(name, params):
    rep = exhaustive_check(name, **params)
    assert rep.status == "pass", rep.counterexample
    assert rep.checked > 0


def test_thm_suite_carries_reading_records():
    rep = exhaustive_check("thm-5.2", n=2, samples=6)
    blob = "\n".join(rep.details)
    assert "leading minus" in blob or "sign" in blob.lower()
