#!/usr/bin/env python3
"""
虚维数上界测试
"""
import unittest
from fractions import Fraction

from swdim.errors import InputError
from swdim.primes import build_table
from swdim.swbounds import (
    FAIL_B1,
    FAIL_BELOW_S,
    FAIL_K_DIVISIBLE,
    FAIL_N_SMALL,
    FAIL_SW_ABOVE_C,
    SpincInvariants,
    all_bounds,
    best_bound,
    cohomotopy_condition,
    cohomotopy_degree,
    compute_d,
    example_n_large_bound,
    least_admissible_prime,
    nonprime_bound,
    theorem_main_bound,
    theorem_s_bound,
    uniform_bound_1,
)


def invariants(b2_plus, sw, d=0, b1=0):
    return SpincInvariants.from_dimension(b2_plus=b2_plus, d=d, sw=sw, b1=b1)


class InvariantTests(unittest.TestCase):
    def test_compute_d(self):
        k3 = SpincInvariants(b1=0, b2_plus=3, signature=-16, c1_squared=0, sw=1)
        self.assertEqual(compute_d(k3), 0)
        shifted = SpincInvariants(b1=0, b2_plus=3, signature=-16, c1_squared=8, sw=1)
        self.assertEqual(compute_d(shifted), 2)

    def test_validation(self):
        with self.assertRaises(InputError):
            SpincInvariants(b1=0, b2_plus=3, signature=0, c1_squared=1, sw=1)
        with self.assertRaises(InputError) as ctx:
            SpincInvariants.from_dimension(b2_plus=4, d=0, sw=1)
        self.assertIn("sw must vanish for even b2+", str(ctx.exception))
        with self.assertRaises(InputError):
            SpincInvariants.from_dimension(b2_plus=3, d=-2, sw=1)
        with self.assertRaises(InputError):
            SpincInvariants.from_dimension(b2_plus=3, d=1, sw=1)
        with self.assertRaises(InputError):
            SpincInvariants(b1=0, b2_plus=True, signature=0, c1_squared=0, sw=0)

    def test_from_dimension_and_round_trip(self):
        inv = invariants(11, 6, d=4)
        self.assertEqual(inv.d, 4)
        self.assertEqual(inv.k, 5)
        self.assertEqual(SpincInvariants.from_dict(inv.to_dict()), inv)
        with self.assertRaises(InputError):
            SpincInvariants.from_dict({"b1": 0, "b2_plus": 3})


class TheoremMainTests(unittest.TestCase):
    def test_examples(self):
        report = theorem_main_bound(2, invariants(3, 1))
        self.assertTrue(report.applicable)
        self.assertEqual(report.bound_value, 0)
        self.assertEqual(theorem_main_bound(3, invariants(5, 1)).bound_value, 2)

        report = theorem_main_bound(3, invariants(7, 1))
        self.assertFalse(report.applicable)
        self.assertIsNone(report.bound_value)
        self.assertIn(FAIL_K_DIVISIBLE, report.hypothesis_failures)

    def test_non_prime_rejected(self):
        with self.assertRaises(InputError):
            theorem_main_bound(4, invariants(3, 1))

    def test_b1_positive_is_inapplicable(self):
        inv = invariants(3, 1, b1=2)
        for report in all_bounds(inv):
            self.assertFalse(report.applicable)
            self.assertIn(FAIL_B1, report.hypothesis_failures)

    def test_mod_two_applicability(self):
        for b2_plus in range(1, 100, 2):
            report = theorem_main_bound(2, invariants(b2_plus, 1))
            self.assertEqual(report.applicable, b2_plus % 4 == 3, b2_plus)

    def test_uniform_bound(self):
        self.assertEqual(uniform_bound_1(7, invariants(11, 6), 10).bound_value, 10)
        report = uniform_bound_1(7, invariants(11, 12), 10)
        self.assertIn(FAIL_SW_ABOVE_C, report.hypothesis_failures)


class AdmissiblePrimeTests(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(least_admissible_prime(invariants(11, 6)), 7)
        self.assertEqual(least_admissible_prime(invariants(3, 1)), 2)
        with self.assertRaises(InputError):
            least_admissible_prime(invariants(3, 0))

    def test_small_cases_are_covered_by_seven(self):
        for sw in range(1, 12):
            for k in range(1, 12):
                inv = invariants(2 * k + 1, sw)
                self.assertLessEqual(least_admissible_prime(inv), 7)
                self.assertLessEqual(best_bound(inv).bound_value, 10)

    def test_two_primes_between_half_and_n(self):
        table = build_table(16)
        for n in range(12, 17):
            self.assertGreaterEqual(table.count_primes_interval(Fraction(n, 2), n, True, True), 2)


class CorollaryTests(unittest.TestCase):
    def test_nonprime_bound(self):
        self.assertEqual(nonprime_bound(invariants(3, 1)).bound_value, 10)
        self.assertEqual(nonprime_bound(invariants(3, 20)).bound_value, 34)
        self.assertLessEqual(least_admissible_prime(invariants(3, 20)), 19)
        self.assertEqual(nonprime_bound(invariants(25, 1)).bound_value, 18)

    def test_s_bound_two_thirds(self):
        report = theorem_s_bound(invariants(3, 44), "2/3")
        self.assertTrue(report.applicable)
        self.assertEqual(report.bound_value, 54)
        self.assertEqual(report.raw_bound, Fraction(164, 3))
        self.assertEqual(report.to_dict()["raw_bound"], "164/3")

    def test_s_bound_one(self):
        report = theorem_s_bound(invariants(3, 17), 1)
        self.assertTrue(report.applicable)
        self.assertEqual(report.bound_value, 28)

    def test_s_bound_below_threshold_suggests_nonprime(self):
        report = theorem_s_bound(invariants(3, 3), 1)
        self.assertFalse(report.applicable)
        self.assertIn(FAIL_BELOW_S, report.hypothesis_failures)
        self.assertEqual(report.suggestion, "nonprime_bound")

    def test_s_bound_rejects_constant(self):
        with self.assertRaises(InputError):
            theorem_s_bound(invariants(3, 17), "1/2")

    def test_n_large_example(self):
        report = example_n_large_bound(invariants(3, 100))
        self.assertEqual(report.bound_value, 128)
        self.assertIn(FAIL_N_SMALL, example_n_large_bound(invariants(3, 5)).hypothesis_failures)

    def test_bound_values_are_even(self):
        for sw in (1, 7, 44, 100):
            for report in all_bounds(invariants(3, sw)):
                if report.applicable:
                    self.assertEqual(report.bound_value % 2, 0)
                    self.assertLessEqual(report.bound_value, report.raw_bound)
                else:
                    self.assertIsNone(report.bound_value)


class BestBoundTests(unittest.TestCase):
    def test_mod_two(self):
        report = best_bound(invariants(3, 1))
        self.assertEqual(report.bound_value, 0)
        self.assertEqual(report.provenance, "theorem_main(p=2)")

    def test_seven(self):
        report = best_bound(invariants(11, 6))
        self.assertEqual(report.bound_value, 10)
        self.assertEqual(report.provenance, "theorem_main(p=7)")

    def test_large_sw(self):
        report = best_bound(invariants(101, 100))
        self.assertLessEqual(report.bound_value, 128)
        self.assertEqual(report.bound_value, 2)

    def test_no_bound(self):
        report = best_bound(invariants(1, 1))
        self.assertEqual(report.bound_name, "no-bound")
        self.assertFalse(report.applicable)
        self.assertTrue(report.hypothesis_failures)


class CohomotopyTests(unittest.TestCase):
    def test_examples(self):
        report = cohomotopy_condition(6, 3, 1)
        self.assertTrue(report.holds)
        self.assertEqual(report.steenrod_coefficient, 1)
        report = cohomotopy_condition(5, 3, 1)
        self.assertFalse(report.holds)
        self.assertEqual(report.steenrod_coefficient, 0)
        self.assertIsNone(report.map_factor)
        report = cohomotopy_condition(7, 5, 2)
        self.assertTrue(report.holds)
        self.assertEqual(report.map_factor, 25)

    def test_steenrod_coefficient_matches_condition(self):
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            for n in range(1, 1001):
                report = cohomotopy_condition(n, p, 1)
                self.assertEqual(report.holds, report.steenrod_coefficient != 0)

    def test_range_of_i(self):
        with self.assertRaises(InputError):
            cohomotopy_condition(6, 3, 3)
        with self.assertRaises(InputError):
            cohomotopy_condition(6, 3, 0)

    def test_degree_links_to_theorem_main(self):
        for p in (3, 5, 7):
            for b2_plus in range(3, 60, 2):
                n = cohomotopy_degree(b2_plus, p)
                self.assertEqual(2 * n, b2_plus + 2 * p - 3)
                holds = cohomotopy_condition(n, p).holds
                self.assertEqual(holds, theorem_main_bound(p, invariants(b2_plus, 1)).applicable)
        for b2_plus in range(3, 60, 2):
            n = cohomotopy_degree(b2_plus, 2)
            self.assertEqual(cohomotopy_condition(n, 2).holds, b2_plus % 4 == 3)


if __name__ == "__main__":
    unittest.main()
