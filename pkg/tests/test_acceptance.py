"""Acceptance gate: one test per pinned verification criterion.

Each test runs its criterion, prints the formatted pass/fail line (the same
line `fanfree verify` prints), and fails with that line as the message if
the criterion does not hold within its runtime budget.  Tolerances are those
pinned inside the criteria themselves: counting results are exact integer
equalities, weight identities are exact rationals, and runtime budgets are
wall-clock seconds.
"""

from fanfree.acceptance import format_line, run_criterion


def _check(number: int):
    result = run_criterion(number)
    line = format_line(result)
    print(line)
    assert result.passed, line
    return result


def test_criterion_1_constructions_attain_the_closed_forms():
    _check(1)


def test_criterion_2_constructions_contain_no_fan():
    _check(2)


def test_criterion_3_exhaustive_search_matches_frozen_maxima():
    _check(3)


def test_criterion_4_rigid_degree_sequence_dichotomy():
    _check(4)


def test_criterion_5_weight_ledgers_conserve_triangles():
    _check(5)


def test_criterion_6_basic_bound_suite_holds_on_fan_free_graphs():
    _check(6)


def test_criterion_7_refined_per_edge_bounds_hold():
    _check(7)


def test_criterion_8_counting_identities_hold():
    _check(8)


def test_criterion_9_lifts_are_star_free_and_meet_the_triple_bound():
    _check(9)


def test_criterion_10_matching_certificates_verify():
    _check(10)


def test_criterion_11_cli_reports_are_deterministic():
    _check(11)
