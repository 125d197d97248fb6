"""
Unit tests for the identity checkers: hand-verified fixtures, reductions and convention flags.
"""

import pytest
from horadam_quat.arith.views import QuadExt
from horadam_quat.quaternion.views import Quaternion
from horadam_quat.quaternion.service import quat_parse
from horadam_quat.sequence.views import HoradamParams
from horadam_quat.identities.service import (binet_recurrence_check, cassini_check, catalan_check, check_lemma1,
                                             check_lemma2, commutator_adjacent_check, cross_lucas_fib_check,
                                             docagne_check, fib_double_check, fib_negative_index_check,
                                             fib_square_check, lemma1_ab_check, mixed_commutator_check,
                                             mixed_commutator_diag_check, root_power_check, square_diff_check,
                                             square_diff_scaled_check, square_root_sum_check)

PQ_SAMPLE = [(1, 1), (2, 1), (1, 2), (-1, 3), (3, -2), (0, -1), (-2, -3), (1, -3)]
INDICES = range(-6, 13)


class TestLemma1:
    """Tests for the alpha_bar/beta_bar products."""

    def test_fibonacci_fixture(self):
        report = lemma1_ab_check(1, 1)
        root = QuadExt(0, 1, 5)
        assert report.equal
        assert report.lhs == Quaternion(2, 1 - root, 3 - root, 4 + root)
        assert report.params == HoradamParams(1, 1, 0, 1)

    def test_all_three_pass(self):
        for p, q in PQ_SAMPLE:
            reports = check_lemma1(p, q)
            assert [report.identity for report in reports] == ['lemma1-ab', 'lemma1-ba', 'lemma1-sum']
            assert all(report.equal for report in reports), (p, q)

    def test_swapping_order_flips_twist_only(self):
        ab, ba, _ = check_lemma1(2, 1)
        assert (ab.lhs + ba.lhs).is_rational
        assert (ab.lhs - ba.lhs).rational_part().is_zero


class TestCatalanFamily:
    """Tests for Catalan, Cassini, d'Ocagne and the adjacent commutator."""

    def test_catalan_fixture(self):
        report = catalan_check(HoradamParams(1, 1, 0, 1), 1, 1)
        assert report.equal
        assert report.lhs == report.rhs == quat_parse("2+2j+5k")

    def test_cassini_fixture(self):
        report = cassini_check(HoradamParams(1, 1, 0, 1), 1)
        assert report.equal
        assert report.lhs.to_string() == "2+2j+5k"

    def test_catalan_passes_on_sample(self, small_grid):
        for params in small_grid:
            for m in INDICES:
                for n in (-3, -1, 0, 2, 5):
                    assert catalan_check(params, m, n).equal, (params, m, n)

    def test_catalan_reduces_to_cassini(self, small_grid):
        for params in small_grid:
            for m in INDICES:
                cassini = cassini_check(params, m)
                assert cassini.equal
                assert cassini.forms['catalan-n1']
                assert catalan_check(params, m, 1).rhs == cassini.rhs

    def test_catalan_printed_form_flagged_when_q_not_unit(self, jacobsthal_params):
        report = catalan_check(jacobsthal_params, 3, 2)
        assert report.equal
        assert report.forms['proof-intermediate']
        assert not report.forms['printed-negative-index']
        assert report.flagged
        assert report.notes

    def test_catalan_printed_form_agrees_for_unit_q(self, fibonacci_params):
        report = catalan_check(fibonacci_params, 4, 3)
        assert report.forms == {'proof-intermediate': True, 'printed-negative-index': True}
        assert not report.flagged

    def test_docagne_fixture(self):
        report = docagne_check(HoradamParams(1, 1, 0, 1), 2, 0)
        assert report.equal
        assert report.rhs == quat_parse("2-2i+7k")

    def test_docagne_reductions(self, small_grid):
        for params in small_grid:
            for n in range(-4, 8):
                previous = docagne_check(params, n, n - 1)
                assert previous.equal and previous.forms['cassini']
                same = docagne_check(params, n, n)
                assert same.equal and same.forms['commutator-adjacent']
                assert previous.rhs == cassini_check(params, n).rhs
                assert same.rhs == commutator_adjacent_check(params, n).rhs

    def test_rational_reports_are_not_lifted(self, jacobsthal_params):
        report = catalan_check(jacobsthal_params, 2, 4)
        assert report.equal
        assert not any(isinstance(value, QuadExt) for value in report.lhs.components() + report.rhs.components())

    def test_mixed_sides_are_lifted(self, fibonacci_params):
        report = binet_recurrence_check(fibonacci_params, 3)
        assert report.equal
        assert all(isinstance(value, QuadExt) for value in report.lhs.components() + report.rhs.components())

    @pytest.mark.parametrize("params,n,expected", [
        (HoradamParams(1, 1, 0, 1), 1, "2i+2j-2k"),
        (HoradamParams(2, 1, 0, 1), 0, "-2i-4j+2k"),
    ])
    def test_commutator_adjacent_fixtures(self, params, n, expected):
        report = commutator_adjacent_check(params, n)
        assert report.equal
        assert report.lhs == quat_parse(expected)

    def test_commutator_values_are_pure(self, small_grid):
        for params in small_grid:
            for n in INDICES:
                report = commutator_adjacent_check(params, n)
                assert report.equal and report.rhs.is_pure


class TestCrossLucasFibonacci:
    """Tests for the cross Lucas/Fibonacci identity."""

    def test_fixture(self):
        report = cross_lucas_fib_check(1, 1, 0, 0, 1)
        assert report.equal
        assert report.lhs == quat_parse("4+2i+6j+8k")

    def test_zero_when_shifts_coincide(self):
        for r in range(-4, 9):
            assert cross_lucas_fib_check(2, 1, 1, r, r).lhs.is_zero

    def test_antisymmetric(self):
        for p, q in PQ_SAMPLE[:4]:
            for r in range(-2, 4):
                for s in range(-2, 4):
                    forward = cross_lucas_fib_check(p, q, 1, r, s)
                    backward = cross_lucas_fib_check(p, q, 1, s, r)
                    assert forward.equal and backward.equal
                    assert forward.lhs == -backward.lhs


class TestSquares:
    """Tests for the alpha_bar² expansions and the square-difference identities."""

    def test_lemma2_pass(self):
        for p, q in PQ_SAMPLE:
            assert all(report.equal for report in check_lemma2(p, q)), (p, q)

    def test_lemma2_difference(self):
        alpha, beta = check_lemma2(1, 1)
        difference = (alpha.lhs - beta.lhs).irrational_part()
        # (alpha_bar² - beta_bar²)/√5 = 2(Q_F0 - s)
        assert difference == 2 * (Quaternion(0, 1, 1, 2) - 6)

    def test_square_diff_fixture(self):
        report = square_diff_check(1, 1, 0)
        assert report.equal
        assert report.lhs == report.rhs == quat_parse("-16+4i+12j+16k")
        assert report.forms['printed-coefficient']

    def test_square_diff_pell(self):
        assert square_diff_check(2, 1, 1).equal

    def test_square_diff_flags_printed_coefficient(self):
        report = square_diff_check(1, 1, 1)
        assert report.equal
        assert report.lhs == quat_parse("-60+4i+4j+8k")
        assert not report.forms['printed-coefficient']
        assert report.notes

    def test_square_identities_on_sample(self):
        for p, q in PQ_SAMPLE:
            for n in INDICES:
                assert square_diff_check(p, q, n).equal, (p, q, n)
                assert square_diff_scaled_check(p, q, n).equal, (p, q, n)
                assert square_root_sum_check(p, q, n).equal, (p, q, n)


class TestMixedCommutator:
    """Tests for commutators with the (p,q)-Fibonacci quaternion."""

    def test_fixture(self):
        report = mixed_commutator_check(HoradamParams(1, 1, 2, 1), 0, 1)
        assert report.equal
        assert report.lhs == quat_parse("-2i-2j+2k")

    def test_diagonal_with_fibonacci_seeds_vanishes(self):
        report = mixed_commutator_diag_check(HoradamParams(1, 1, 0, 1), 3)
        assert report.equal and report.lhs.is_zero

    def test_sample(self, small_grid):
        for params in small_grid:
            for n in range(-4, 8):
                assert mixed_commutator_diag_check(params, n).equal
                for m in range(-4, 8):
                    report = mixed_commutator_check(params, n, m)
                    assert report.equal and report.rhs.is_pure


class TestScalarIdentities:
    """Tests for the scalar and Binet checkers."""

    def test_binet_recurrence(self, small_grid):
        for params in small_grid:
            for n in range(-8, 17):
                assert binet_recurrence_check(params, n).equal

    def test_negative_index_convention_flag(self):
        report = fib_negative_index_check(1, 2, 2)
        assert report.equal
        assert not report.forms['printed-negative-index']
        assert report.flagged
        assert any('-1/4' in note for note in report.notes)

    def test_negative_index_unit_q_not_flagged(self):
        report = fib_negative_index_check(1, 1, 2)
        assert report.equal and not report.flagged

    def test_fib_square_and_double(self):
        for p, q in PQ_SAMPLE:
            for n in INDICES:
                assert fib_square_check(p, q, n).equal
                assert fib_double_check(p, q, n).equal

    def test_root_power(self):
        for p, q in PQ_SAMPLE:
            for n in range(1, 13):
                report = root_power_check(p, q, n)
                assert report.equal, (p, q, n)
