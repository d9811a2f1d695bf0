#!/usr/bin/env python3
"""
精确有理幂级数
(−log(1−x)/x)^k 的系数 a_i^{(k)} 与分母整除维数 d(q,k)
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from sympy import isprime, primerange

from config import SERIES_CONFIG
from .errors import InapplicableError, InputError
from .rational import format_rational
from .swbounds import SpincInvariants

# 配置日志
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesCoeffs:
    """k 次幂级数的前 len(coeffs) 个系数，coeffs[0] = 1"""

    k: int
    coeffs: Tuple[Fraction, ...]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, index):
        return self.coeffs[index]


@dataclass(frozen=True)
class DivisibilityResult:
    """d(q,k)；cap 内找不到可整除分母时 cap_exceeded 为真"""

    q: int
    k: int
    cap: int
    dimension: Optional[int]
    witness_index: Optional[int]
    cap_exceeded: bool

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "cap": self.cap,
            "dimension": self.dimension,
            "witness_index": self.witness_index,
            "cap_exceeded": self.cap_exceeded,
        }


def _positive(name: str, value: int) -> int:
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise InputError(f"{name} must be a positive integer, got {value}")
    return int(value)


def _require_prime(name: str, value: int) -> int:
    if isinstance(value, bool) or int(value) != value or not isprime(int(value)):
        raise InputError(f"{name} must be prime, got {value}")
    return int(value)


def base_series(length: int) -> SeriesCoeffs:
    """−log(1−x)/x = 1 + x/2 + x²/3 + ..."""
    length = _positive("length", length)
    return SeriesCoeffs(k=1, coeffs=tuple(Fraction(1, i + 1) for i in range(length)))


def truncated_product(left, right, length: int) -> List[Fraction]:
    """截断的 Cauchy 乘积"""
    out = [Fraction(0)] * length
    for i, a in enumerate(left[:length]):
        if a == 0:
            continue
        for j, b in enumerate(right[: length - i]):
            out[i + j] += a * b
    return out


def power_series(k: int, length: int) -> SeriesCoeffs:
    """反复平方计算 base_series 的 k 次幂"""
    k = _positive("k", k)
    length = _positive("length", length)
    base = list(base_series(length).coeffs)
    result = [Fraction(1)] + [Fraction(0)] * (length - 1)
    exponent = k
    while exponent:
        if exponent & 1:
            result = truncated_product(result, base, length)
        exponent >>= 1
        if exponent:
            base = truncated_product(base, base, length)
    return SeriesCoeffs(k=k, coeffs=tuple(result))


def coefficient_stream(k: int) -> Iterator[Fraction]:
    """
    逐项生成 a_0, a_1, ...
    f^k 的递推: a_i = (1/i)·Σ_{j=1..i} ((k+1)j − i)·b_j·a_{i−j}，b_j = 1/(j+1)
    """
    k = _positive("k", k)
    coeffs = [Fraction(1)]
    yield coeffs[0]
    i = 1
    while True:
        total = Fraction(0)
        for j in range(1, i + 1):
            weight = (k + 1) * j - i
            if weight:
                total += Fraction(weight, j + 1) * coeffs[i - j]
        coeffs.append(total / i)
        yield coeffs[i]
        i += 1


def default_cap(q: int, k: int) -> int:
    return SERIES_CONFIG["cap_factor"] * q * k + SERIES_CONFIG["cap_offset"]


def divisibility_dimension(q: int, k: int, cap: Optional[int] = None) -> DivisibilityResult:
    """
    d(q,k): 使 a_1..a_d 的分母都不被 q 整除的最大 2d
    找到首个分母可被 q 整除的 i* 后返回 2(i*−1)
    """
    q = _require_prime("q", q)
    k = _positive("k", k)
    cap = default_cap(q, k) if cap is None else _positive("cap", cap)

    stream = coefficient_stream(k)
    next(stream)
    for i in range(1, cap + 1):
        coefficient = next(stream)
        if coefficient.denominator % q == 0:
            return DivisibilityResult(q, k, cap, 2 * (i - 1), i, False)

    logger.warning(f"d({q},{k}) 在 cap={cap} 内未找到可整除的分母")
    return DivisibilityResult(q, k, cap, None, None, True)


def bf_divisibility_bound(p: int, inv: SpincInvariants, cap: Optional[int] = None) -> DivisibilityResult:
    """由分母整除性得到的 d(s) <= d(p,k)，k = (b2+ − 1)/2"""
    p = _require_prime("p", p)
    if inv.b2_plus % 2 == 0:
        raise InapplicableError(f"b2+ = {inv.b2_plus} is even: SW vanishes, the divisibility bound does not apply")
    if inv.b1 != 0:
        raise InputError("divisibility bound needs b1 = 0")
    if inv.b2_plus < 2:
        raise InputError("divisibility bound needs b2+ >= 2")
    if inv.sw % p == 0:
        raise InputError(f"p = {p} divides SW = {inv.sw}: not a mod p basic class")
    return divisibility_dimension(p, (inv.b2_plus - 1) // 2, cap)


def denominator_factorization(value: Fraction, bound: Optional[int] = None) -> Tuple[Dict[int, int], int]:
    """分母在 bound 以内素数上的分解，以及剩余的余因子"""
    bound = SERIES_CONFIG["factor_bound"] if bound is None else bound
    remaining = Fraction(value).denominator
    factors: Dict[int, int] = {}
    for prime in primerange(2, bound + 1):
        while remaining % prime == 0:
            factors[prime] = factors.get(prime, 0) + 1
            remaining //= prime
    return factors, remaining


def coefficient_table(k: int, length: int) -> List[dict]:
    """表格输出: (i, "num/den", 分母分解)"""
    series = power_series(k, length)
    rows = []
    for i, coefficient in enumerate(series.coeffs):
        factors, cofactor = denominator_factorization(coefficient)
        rows.append({
            "i": i,
            "coefficient": format_rational(coefficient),
            "denominator_factors": {str(prime): exp for prime, exp in factors.items()},
            "cofactor": cofactor,
        })
    return rows
