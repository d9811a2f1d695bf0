#!/usr/bin/env python3
"""
幂级数系数与分母整除维数测试
"""
import itertools
import math
import unittest
from fractions import Fraction

from sympy import bernoulli, harmonic, primerange

from swdim.errors import InapplicableError, InputError
from swdim.series import (
    base_series,
    bf_divisibility_bound,
    coefficient_stream,
    coefficient_table,
    default_cap,
    denominator_factorization,
    divisibility_dimension,
    power_series,
    truncated_product,
)
from swdim.swbounds import SpincInvariants, theorem_main_bound


def naive_power(k, length):
    """逐次卷积 k 次"""
    base = [Fraction(1, i + 1) for i in range(length)]
    result = [Fraction(1)] + [Fraction(0)] * (length - 1)
    for _ in range(k):
        result = [sum(result[j] * base[i - j] for j in range(i + 1)) for i in range(length)]
    return result


def invariants(b2_plus, sw):
    return SpincInvariants.from_dimension(b2_plus=b2_plus, d=0, sw=sw)


class SeriesCoefficientTests(unittest.TestCase):
    def test_base_series(self):
        self.assertEqual(list(base_series(3).coeffs), [1, Fraction(1, 2), Fraction(1, 3)])
        self.assertEqual(list(base_series(1).coeffs), [1])
        self.assertEqual(base_series(10)[9], Fraction(1, 10))

    def test_square(self):
        series = power_series(2, 4)
        self.assertEqual(list(series.coeffs), [1, 1, Fraction(11, 12), Fraction(5, 6)])

    def test_identity_power(self):
        self.assertEqual(power_series(1, 20).coeffs, base_series(20).coeffs)

    def test_cube_first_coefficient(self):
        self.assertEqual(power_series(3, 2)[1], Fraction(3, 2))

    def test_matches_naive_convolution(self):
        for k in range(1, 11):
            self.assertEqual(list(power_series(k, 64).coeffs), naive_power(k, 64), k)

    def test_stream_matches_power_series(self):
        for k in (1, 2, 5, 9):
            streamed = list(itertools.islice(coefficient_stream(k), 40))
            self.assertEqual(streamed, list(power_series(k, 40).coeffs))

    def test_square_is_harmonic_sum(self):
        # (−log(1−x))² 的系数为 2·H_{n−1}/n
        series = power_series(2, 30)
        for i in range(30):
            n = i + 2
            expected = Fraction(2) * Fraction(str(harmonic(n - 1))) / n
            self.assertEqual(series[i], expected)

    def test_bernoulli_oracle_for_first_power(self):
        # 代入 x = 1 − e^{−y} 后 Σ a_i x^i = y/(1 − e^{−y})，系数为 B_n/n!
        length = 12
        shift = [Fraction(0)] + [Fraction((-1) ** (n + 1), math.factorial(n)) for n in range(1, length)]
        total = [Fraction(0)] * length
        power = [Fraction(1)] + [Fraction(0)] * (length - 1)
        for value in base_series(length).coeffs:
            total = [t + value * c for t, c in zip(total, power)]
            power = truncated_product(power, shift, length)
        self.assertEqual(total[1], Fraction(1, 2))
        for n in range(2, length):
            self.assertEqual(total[n], Fraction(str(bernoulli(n))) / math.factorial(n), n)

    def test_coefficients_are_reduced(self):
        for value in power_series(4, 30).coeffs:
            self.assertEqual(math.gcd(value.numerator, value.denominator), 1)
            self.assertGreaterEqual(value.denominator, 1)

    def test_invalid_arguments(self):
        with self.assertRaises(InputError):
            power_series(0, 4)
        with self.assertRaises(InputError):
            base_series(0)


class DivisibilityTests(unittest.TestCase):
    def test_first_power(self):
        for q in primerange(2, 32):
            result = divisibility_dimension(int(q), 1)
            self.assertEqual(result.dimension, 2 * q - 4, q)
            self.assertEqual(result.witness_index, q - 1)

    def test_square_at_two(self):
        result = divisibility_dimension(2, 2)
        self.assertEqual(result.dimension, 2)
        self.assertEqual(result.witness_index, 2)

    def test_prime_dividing_k(self):
        result = divisibility_dimension(3, 3)
        self.assertGreater(result.dimension, 2)
        self.assertNotEqual(power_series(3, 3)[2].denominator % 3, 0)

    def test_prime_dividing_k_exhaustive(self):
        for p in (2, 3, 5):
            for k in range(p, 31, p):
                result = divisibility_dimension(p, k)
                self.assertTrue(result.cap_exceeded or result.dimension > 2 * p - 4, (p, k))

    def test_p_minus_one_coefficient_when_p_divides_k(self):
        for p in (3, 5, 7):
            for k in (p, 2 * p):
                self.assertNotEqual(power_series(k, p)[p - 1].denominator % p, 0)

    def test_cap_exceeded_is_a_result(self):
        result = divisibility_dimension(5, 5, cap=2)
        self.assertTrue(result.cap_exceeded)
        self.assertIsNone(result.dimension)
        self.assertEqual(result.to_dict()["cap"], 2)

    def test_default_cap(self):
        self.assertEqual(default_cap(5, 3), 76)
        self.assertEqual(divisibility_dimension(5, 3).cap, 76)

    def test_non_prime_rejected(self):
        for q in (1, 4, 9):
            with self.assertRaises(InputError):
                divisibility_dimension(q, 1)


class BauerFurutaBoundTests(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(bf_divisibility_bound(3, invariants(3, 1)).dimension, 2)
        self.assertEqual(bf_divisibility_bound(2, invariants(3, 1)).dimension, 0)
        self.assertGreater(bf_divisibility_bound(2, invariants(5, 1)).dimension, 0)

    def test_even_b2_plus_is_inapplicable(self):
        inv = SpincInvariants.from_dimension(b2_plus=4, d=0, sw=0)
        with self.assertRaises(InapplicableError):
            bf_divisibility_bound(3, inv)

    def test_mod_p_basic_required(self):
        with self.assertRaises(InputError):
            bf_divisibility_bound(3, invariants(3, 3))

    def test_theorem_main_is_sharper(self):
        for p in (2, 3, 5, 7):
            for k in range(1, 21):
                inv = invariants(2 * k + 1, 1)
                report = theorem_main_bound(p, inv)
                if not report.applicable:
                    continue
                result = bf_divisibility_bound(p, inv)
                self.assertTrue(result.cap_exceeded or report.bound_value <= result.dimension, (p, k))


class TableTests(unittest.TestCase):
    def test_factorization(self):
        factors, cofactor = denominator_factorization(Fraction(11, 12))
        self.assertEqual(factors, {2: 2, 3: 1})
        self.assertEqual(cofactor, 1)
        factors, cofactor = denominator_factorization(Fraction(1, 2 * 101), bound=100)
        self.assertEqual(factors, {2: 1})
        self.assertEqual(cofactor, 101)

    def test_coefficient_table(self):
        rows = coefficient_table(1, 4)
        self.assertEqual([row["coefficient"] for row in rows], ["1/1", "1/2", "1/3", "1/4"])
        self.assertEqual(rows[3]["denominator_factors"], {"2": 2})


if __name__ == "__main__":
    unittest.main()
