#!/usr/bin/env python3
"""
素数表服务
奇数位图筛法 + 分块累计计数索引，回答 is_prime 与 π(x) 查询
"""
import logging
import math
from functools import cached_property
from fractions import Fraction
from typing import List, Optional

import numpy as np

from config import SCAN_CONFIG, SIEVE_CONFIG
from .errors import BudgetError, InputError, RangeError
from .rational import RationalLike, parse_rational

# 配置日志
logger = logging.getLogger(__name__)


def sieve_cap(max_limit: Optional[int] = None) -> int:
    """当前生效的筛法上限"""
    return int(max_limit) if max_limit is not None else SIEVE_CONFIG["max_limit"]


class PrimeTable:
    """不可变素数表，构造后可被并发读取"""

    def __init__(self, limit: int, max_limit: Optional[int] = None):
        limit = int(limit)
        cap = sieve_cap(max_limit)
        if limit < 2:
            raise InputError(f"sieve limit must be >= 2, got {limit}")
        if limit > cap:
            raise BudgetError(
                f"sieve limit {limit} exceeds the memory budget {cap}; "
                f"raise SWDIM_SIEVE_LIMIT or pass --sieve-limit"
            )

        self.limit = limit
        self.block_bits = SIEVE_CONFIG["block_bits"]
        self._odd = self._sieve_odd(limit)
        self._block_prefix = self._build_block_index()
        self._odd.setflags(write=False)
        logger.debug(f"素数表构建完成: limit={limit}, π(limit)={self.prime_count}")

    @staticmethod
    def _sieve_odd(limit: int) -> np.ndarray:
        """下标 i 对应奇数 2i+1"""
        flags = np.ones((limit + 1) // 2, dtype=bool)
        flags[0] = False  # 1 不是素数
        for p in range(3, math.isqrt(limit) + 1, 2):
            if flags[p // 2]:
                # 相邻奇数倍相差 2p，在奇数下标中步长为 p
                flags[p * p // 2 :: p] = False
        return flags

    def _build_block_index(self) -> np.ndarray:
        size = self._odd.shape[0]
        blocks = -(-size // self.block_bits)
        padded = np.zeros(blocks * self.block_bits, dtype=bool)
        padded[:size] = self._odd
        per_block = padded.reshape(blocks, self.block_bits).sum(axis=1, dtype=np.int64)
        return np.concatenate(([0], np.cumsum(per_block)))

    @property
    def prime_count(self) -> int:
        return int(self._block_prefix[-1]) + 1

    @cached_property
    def primes(self) -> np.ndarray:
        """升序排列的全部素数 (int64)"""
        odd_primes = np.flatnonzero(self._odd).astype(np.int64) * 2 + 1
        array = np.concatenate((np.array([2], dtype=np.int64), odd_primes))
        array.setflags(write=False)
        return array

    def _check_range(self, value, what: str):
        if value > self.limit:
            raise RangeError(f"{what} {value} exceeds table limit {self.limit}")

    def is_prime(self, m: int) -> bool:
        m = int(m)
        self._check_range(m, "argument")
        if m < 2:
            return False
        if m % 2 == 0:
            return m == 2
        return bool(self._odd[m // 2])

    def pi_int(self, m: int) -> int:
        """整数参数的 π(m)"""
        m = int(m)
        self._check_range(m, "argument")
        if m < 2:
            return 0
        last = (m - 1) // 2
        block = last // self.block_bits
        start = block * self.block_bits
        partial = int(np.count_nonzero(self._odd[start : last + 1]))
        return 1 + int(self._block_prefix[block]) + partial

    def pi(self, x: RationalLike) -> int:
        """π(x)，x 为非负有理数，π(10.5) = π(10)"""
        x = parse_rational(x)
        if x < 0:
            raise InputError(f"pi() needs x >= 0, got {x}")
        self._check_range(x, "argument")
        return self.pi_int(math.floor(x))

    def pi_many(self, values: np.ndarray) -> np.ndarray:
        """整数数组的向量化 π 查询，供临界点扫描使用"""
        values = np.asarray(values, dtype=np.int64)
        if values.size and int(values.max()) > self.limit:
            raise RangeError(f"argument {int(values.max())} exceeds table limit {self.limit}")
        return np.searchsorted(self.primes, values, side="right")

    @staticmethod
    def _bounds(lo: Fraction, hi: Fraction, lo_open: bool, hi_open: bool):
        """把区间端点化成整数: 计入 <= upper 的素数，排除 <= lower 的素数"""
        upper = math.ceil(hi) - 1 if hi_open else math.floor(hi)
        lower = math.floor(lo) if lo_open else math.ceil(lo) - 1
        return lower, upper

    def _check_interval(self, lo: Fraction, hi: Fraction):
        if lo < 0 or lo > hi:
            raise InputError(f"interval needs 0 <= lo <= hi, got lo={lo}, hi={hi}")
        self._check_range(hi, "right endpoint")

    def count_primes_interval(
        self,
        lo: RationalLike,
        hi: RationalLike,
        lo_open: bool = True,
        hi_open: bool = False,
    ) -> int:
        lo, hi = parse_rational(lo), parse_rational(hi)
        self._check_interval(lo, hi)
        lower, upper = self._bounds(lo, hi, lo_open, hi_open)
        if upper <= lower:
            return 0
        return self.pi_int(upper) - self.pi_int(max(lower, 0))

    def primes_in(
        self,
        lo: RationalLike,
        hi: RationalLike,
        lo_open: bool = True,
        hi_open: bool = False,
    ) -> List[int]:
        lo, hi = parse_rational(lo), parse_rational(hi)
        self._check_interval(lo, hi)
        lower, upper = self._bounds(lo, hi, lo_open, hi_open)
        left = np.searchsorted(self.primes, lower, side="right")
        right = np.searchsorted(self.primes, upper, side="right")
        return [int(p) for p in self.primes[left:right]]


def build_table(limit: int, max_limit: Optional[int] = None) -> PrimeTable:
    logger.info(f"正在构建素数表: limit={limit}")
    return PrimeTable(limit, max_limit=max_limit)


def pi(table: PrimeTable, x: RationalLike) -> int:
    return table.pi(x)


def count_primes_interval(
    table: PrimeTable,
    lo: RationalLike,
    hi: RationalLike,
    lo_open: bool = True,
    hi_open: bool = False,
) -> int:
    return table.count_primes_interval(lo, hi, lo_open, hi_open)


def _check_c(c: Fraction):
    if not 0 < c < 1:
        raise InputError(f"c must lie in (0, 1), got {c}")


def rs_validity_threshold(c: RationalLike) -> float:
    """解析下界成立的范围 x > max{59, e^{3/2}/c}"""
    c = parse_rational(c)
    _check_c(c)
    return max(59.0, math.exp(1.5) / float(c))


def rs_gap_lower_bound(x: RationalLike, c: RationalLike) -> float:
    """
    π(x) − π(cx) 的解析下界
    x/log x·(1 + 1/(2 log x)) − cx/(log(cx) − 3/2)，只用于终止预算，不用于最终答案
    """
    x, c = parse_rational(x), parse_rational(c)
    _check_c(c)
    threshold = rs_validity_threshold(c)
    if not float(x) > threshold:
        raise InputError(f"rs_gap_lower_bound needs x > {threshold:.6g}, got x={x}")
    xf, cf = float(x), float(c)
    log_x = math.log(xf)
    return xf / log_x * (1 + 1 / (2 * log_x)) - cf * xf / (math.log(cf * xf) - 1.5)


def conservative_gap(x: RationalLike, c: RationalLike) -> float:
    """乘以安全系数后的下界"""
    return SCAN_CONFIG["rs_haircut"] * rs_gap_lower_bound(x, c)


def rs_dominance_threshold(c: RationalLike) -> float:
    """x 超过该值后 x/log x − cx/(log(cx) − 3/2) >= 0"""
    c = parse_rational(c)
    _check_c(c)
    return math.exp((-math.log(float(c)) + 1.5) / (1 - float(c)))
