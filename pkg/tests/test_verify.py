"""The theorem-suite runner itself."""

import pytest

from qbmg import ColoredDigraph, QbmgError
from qbmg.verify import CHECK_NAMES, graphs_match_up_to_rename, run_suite

from tests import refdata


def test_all_checks_pass_on_reference_member():
    results = run_suite(refdata.BLOWUP_TWICE)
    assert [r.name for r in results] == list(CHECK_NAMES)
    assert all(r.passed for r in results)


def test_non_member_short_circuits_to_membership_failure():
    results = run_suite(refdata.SIMULTANEOUS_DUPLICATION)
    assert len(results) == 1
    assert results[0].name == "membership" and not results[0].passed


def test_check_subset_selection():
    results = run_suite(refdata.BLOWUP_BASE,
                        checks=["membership", "underlying_p6c6_free"])
    assert [r.name for r in results] == ["membership", "underlying_p6c6_free"]


def test_unknown_check_name_raises():
    with pytest.raises(QbmgError, match="unknown checks"):
        run_suite(refdata.BLOWUP_BASE, checks=["nonsense"])


def test_thin_conditional_checks_skip_on_non_thin():
    results = {r.name: r for r in run_suite(refdata.complete_symmetric(2, 2))}
    assert results["thin_orbit_pairs"].passed
    assert "skipped" in results["thin_orbit_pairs"].detail
    assert results["fixed_vertex_in_neighborhood"].passed


def test_graphs_match_up_to_rename():
    a = ColoredDigraph(("1",), ("2",), [("1", "2")])
    b = ColoredDigraph(("x",), ("y",), [("x", "y")])
    assert graphs_match_up_to_rename(a, b, {"1": "x", "2": "y"})
    assert not graphs_match_up_to_rename(a, b, {"1": "y", "2": "x"})


def test_known_false_identity_is_flagged_not_crashed():
    # The orientation group identity fails on this 3-vertex member; the suite
    # must report it as a failing check with a detail, not raise.
    g = ColoredDigraph(("1",), ("2", "3"), [("1", "2"), ("2", "1"), ("1", "3")])
    results = {r.name: r for r in run_suite(g)}
    assert not results["orientation_theorems"].passed
    assert "color-preserving group" in results["orientation_theorems"].detail
    others = [r for name, r in results.items() if name != "orientation_theorems"]
    assert all(r.passed for r in others)
