#!/usr/bin/env python3
"""
广义 Ramanujan 素数 R_{c,n} 与区间阈值 S_{c,n}
对 x ↦ #(区间内素数) 的全部临界点做精确扫描，终止预算来自显式上界
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from config import SCAN_CONFIG
from .errors import BudgetError, InputError
from .primes import PrimeTable, conservative_gap, rs_validity_threshold, sieve_cap
from .rational import RationalLike, format_rational, parse_rational

# 配置日志
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntervalQuery:
    """c 与 n；区间形状由 kind 决定: "R" 为 (cx, x]，"S" 为 (x/2, x) 或 (x/2, cx]"""

    kind: str
    c: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "c", parse_rational(self.c))
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise InputError(f"n must be a positive integer, got {self.n}")
        if self.kind == "R":
            if not 0 < self.c < 1:
                raise InputError(f"c must lie in (0, 1) for R_{{c,n}}, got {self.c}")
        elif self.kind == "S":
            if not Fraction(1, 2) < self.c <= 1:
                raise InputError(f"c must lie in (1/2, 1] for S_{{c,n}}, got {self.c}")
        else:
            raise InputError(f"unknown threshold kind {self.kind!r}")

    @property
    def interval(self) -> Tuple[Fraction, Fraction, bool, bool]:
        """(lam, mu, lo_open, hi_open): 区间为 (lam·x, mu·x) 并按标志开闭"""
        if self.kind == "R":
            return self.c, Fraction(1), True, False
        if self.c == 1:
            return Fraction(1, 2), Fraction(1), True, True
        return Fraction(1, 2), self.c, True, False


@dataclass(frozen=True)
class ScanResult:
    value: Fraction
    attained: bool
    witness_failure: Fraction
    critical_points: int


@dataclass(frozen=True)
class ThresholdResult:
    """阈值及其验证数据"""

    kind: str
    c: Fraction
    n: int
    value: Fraction
    witness_failure: Fraction
    certificate_limit: int
    attained: bool
    critical_points: int
    analytic_gap_at_limit: Optional[float] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "c": format_rational(self.c),
            "n": self.n,
            "value": format_rational(self.value),
            "witness_failure": format_rational(self.witness_failure),
            "certificate_limit": self.certificate_limit,
            "attained": self.attained,
            "critical_points": self.critical_points,
            "analytic_gap_at_limit": (
                None if self.analytic_gap_at_limit is None else f"{self.analytic_gap_at_limit:.12g}"
            ),
        }


class CriticalPointScanner:
    """
    区间 (lam·x, mu·x) 内素数个数关于实数 x 分段常值，
    只在 x = p/lam 与 x = p/mu 处跳变。在坐标 T = L·x 下所有临界点都是偶整数，
    相邻临界点的中点仍是整数，于是每个常值段用一个内点求值即可。
    """

    def __init__(self, table: PrimeTable, lam: Fraction, mu: Fraction, lo_open: bool, hi_open: bool):
        if not 0 < lam < mu:
            raise InputError(f"interval needs 0 < lam < mu, got lam={lam}, mu={mu}")
        self.table = table
        self.lam = lam
        self.mu = mu
        self.lo_open = lo_open
        self.hi_open = hi_open
        self.scale = 2 * math.lcm(lam.numerator, mu.numerator)

    def _breakpoints(self, upper: int) -> np.ndarray:
        scale = self.scale
        primes = self.table.primes
        points = []
        for ratio in (self.lam, self.mu):
            # p / ratio <= upper
            usable = primes[primes <= math.floor(ratio * upper)]
            step = ratio.denominator * (scale // ratio.numerator)
            points.append(usable * step)
        points.append(np.array([scale, scale * upper], dtype=np.int64))
        merged = np.unique(np.concatenate(points))
        return merged[(merged >= scale) & (merged <= scale * upper)]

    def samples(self, upper: int) -> Tuple[np.ndarray, np.ndarray]:
        """按顺序交错的临界点与中点 (坐标 T)，以及是否为临界点的标记"""
        upper = int(upper)
        if math.ceil(self.mu * upper) > self.table.limit:
            raise BudgetError(f"scan up to {upper} needs a table beyond {self.table.limit}")
        if self.scale * upper * max(self.lam.numerator, self.mu.numerator) >= 2**62:
            raise InputError("rational constants too large for an exact int64 scan")
        breakpoints = self._breakpoints(upper)
        midpoints = (breakpoints[:-1] + breakpoints[1:]) // 2
        coords = np.empty(breakpoints.size + midpoints.size, dtype=np.int64)
        coords[0::2] = breakpoints
        coords[1::2] = midpoints
        is_breakpoint = np.zeros(coords.size, dtype=bool)
        is_breakpoint[0::2] = True
        return coords, is_breakpoint

    def counts(self, coords: np.ndarray) -> np.ndarray:
        """在坐标 T 处的区间素数个数"""
        scale = self.scale
        mu_den = self.mu.denominator * scale
        lam_den = self.lam.denominator * scale
        if self.hi_open:
            upper = (coords * self.mu.numerator - 1) // mu_den
        else:
            upper = (coords * self.mu.numerator) // mu_den
        if self.lo_open:
            lower = (coords * self.lam.numerator) // lam_den
        else:
            lower = (coords * self.lam.numerator - 1) // lam_den
        return self.table.pi_many(upper) - self.table.pi_many(np.maximum(lower, 0))

    def to_fraction(self, coord) -> Fraction:
        return Fraction(int(coord), self.scale)

    def scan(self, n: int, upper: int) -> ScanResult:
        coords, is_breakpoint = self.samples(upper)
        failing = np.flatnonzero(self.counts(coords) < n)
        last = int(failing[-1])
        if last == coords.size - 1:
            raise BudgetError(f"condition still fails at the certificate limit {upper}")

        if is_breakpoint[last]:
            # 临界点本身失败而其后的开区间成立: 下确界不可达
            value_index, attained = last, False
            earlier = failing[failing < last]
            witness = self.to_fraction(coords[int(earlier[-1])]) if earlier.size else Fraction(0)
        else:
            value_index, attained = last + 1, True
            witness = self.to_fraction(coords[last])

        return ScanResult(
            value=self.to_fraction(coords[value_index]),
            attained=attained,
            witness_failure=witness,
            critical_points=int(is_breakpoint.sum()),
        )

    def failures_above(self, n: int, value: Fraction, attained: bool, upper: int) -> List[Fraction]:
        """重新扫描 [value, upper]，返回所有失败点"""
        coords, _ = self.samples(upper)
        start = value * self.scale
        counts = self.counts(coords)
        keep = coords >= start if attained else coords > start
        return [self.to_fraction(t) for t in coords[keep & (counts < n)]]


def critical_scan(
    table: PrimeTable,
    lam: RationalLike,
    mu: RationalLike,
    lo_open: bool,
    hi_open: bool,
    n: int,
    upper: int,
) -> ScanResult:
    scanner = CriticalPointScanner(table, parse_rational(lam), parse_rational(mu), lo_open, hi_open)
    return scanner.scan(n, upper)


@lru_cache(maxsize=8)
def _shared_table(limit: int, cap: int) -> PrimeTable:
    return PrimeTable(limit, max_limit=cap)


def _ceil_sqrt(m: int) -> int:
    root = math.isqrt(m)
    return root if root * root == m else root + 1


def ramanujan_budget(c: RationalLike, n: int, max_limit: Optional[int] = None) -> int:
    """
    R_{c,n} <= max{(2⌈√(2n)+1⌉)!, exp((−log c + 3/2)/(1−c)), e^{3/2}/c, 59}
    阶乘项精确计算，指数项浮点计算后向上取整再加 1
    """
    query = IntervalQuery("R", c, n)
    c_float = float(query.c)
    factorial_term = math.factorial(2 * (_ceil_sqrt(2 * query.n) + 1))
    try:
        exp_term = math.exp((-math.log(c_float) + 1.5) / (1 - c_float))
    except OverflowError:
        raise BudgetError(f"analytic budget for c={query.c} overflows a double")
    inflation = SCAN_CONFIG["budget_inflation"]
    budget = max(
        factorial_term,
        59,
        math.ceil(exp_term) + inflation,
        math.ceil(math.exp(1.5) / c_float) + inflation,
    )

    cap = sieve_cap(max_limit)
    if budget > cap:
        logger.error(f"预算超出筛法上限: budget={budget}, cap={cap}")
        raise BudgetError(
            f"budget {budget} for c={query.c}, n={query.n} exceeds the sieve cap {cap}; "
            f"raise SWDIM_SIEVE_LIMIT to continue"
        )
    return budget


def _scan_query(query: IntervalQuery, upper: int, cap: int) -> Tuple[ScanResult, CriticalPointScanner]:
    lam, mu, lo_open, hi_open = query.interval
    table = _shared_table(int(upper), cap)
    scanner = CriticalPointScanner(table, lam, mu, lo_open, hi_open)
    logger.info(f"开始临界点扫描: {query.kind}_{{{query.c},{query.n}}}, upper={upper}")
    result = scanner.scan(query.n, upper)
    logger.info(f"扫描完成: value={result.value}, 临界点数={result.critical_points}")
    return result, scanner


@lru_cache(maxsize=256)
def _ramanujan_cached(c: Fraction, n: int, cap: int) -> ThresholdResult:
    query = IntervalQuery("R", c, n)
    budget = ramanujan_budget(query.c, query.n, max_limit=cap)
    scan, _ = _scan_query(query, budget, cap)
    if scan.value.denominator != 1 or not _shared_table(budget, cap).is_prime(scan.value.numerator):
        raise BudgetError(f"scan for R_{{{c},{n}}} ended at non-prime {scan.value}")

    analytic = None
    if budget > rs_validity_threshold(query.c):
        analytic = conservative_gap(budget, query.c)
        logger.info(f"预算处的解析下界: {analytic:.3f} (n={query.n})")
    return ThresholdResult(
        kind="R",
        c=query.c,
        n=query.n,
        value=scan.value,
        witness_failure=scan.witness_failure,
        certificate_limit=budget,
        attained=scan.attained,
        critical_points=scan.critical_points,
        analytic_gap_at_limit=analytic,
    )


def ramanujan_prime(c: RationalLike, n: int, max_limit: Optional[int] = None) -> ThresholdResult:
    """第 n 个 c-Ramanujan 素数: 使所有 x >= R 时 (cx, x] 至少含 n 个素数的最小数"""
    query = IntervalQuery("R", c, n)
    return _ramanujan_cached(query.c, query.n, sieve_cap(max_limit))


def ramanujan_table(c: RationalLike, n_max: int, max_limit: Optional[int] = None) -> List[ThresholdResult]:
    return [ramanujan_prime(c, n, max_limit=max_limit) for n in range(1, int(n_max) + 1)]


def s_budget(c: RationalLike, n: int, max_limit: Optional[int] = None) -> int:
    """S_{1,n} <= R_{1/2,n+1}，S_{c,n} <= R_{1/(2c),n}/c"""
    query = IntervalQuery("S", c, n)
    if query.c == 1:
        bound = ramanujan_prime(Fraction(1, 2), query.n + 1, max_limit=max_limit).value
    else:
        bound = ramanujan_prime(1 / (2 * query.c), query.n, max_limit=max_limit).value / query.c
    return math.ceil(bound)


@lru_cache(maxsize=256)
def _s_threshold_cached(c: Fraction, n: int, cap: int) -> ThresholdResult:
    query = IntervalQuery("S", c, n)
    budget = s_budget(query.c, query.n, max_limit=cap)
    scan, _ = _scan_query(query, budget, cap)
    return ThresholdResult(
        kind="S",
        c=query.c,
        n=query.n,
        value=scan.value,
        witness_failure=scan.witness_failure,
        certificate_limit=budget,
        attained=scan.attained,
        critical_points=scan.critical_points,
    )


def s_threshold(c: RationalLike, n: int, max_limit: Optional[int] = None) -> ThresholdResult:
    """x >= S 时 (x/2, x) (c = 1) 或 (x/2, cx] (c < 1) 至少含 n 个素数的下确界"""
    query = IntervalQuery("S", c, n)
    return _s_threshold_cached(query.c, query.n, sieve_cap(max_limit))


def verify_certificate(result: ThresholdResult, max_limit: Optional[int] = None) -> List[Fraction]:
    """在 [value, certificate_limit] 上重新扫描，返回失败点列表 (可靠结果为空)"""
    query = IntervalQuery(result.kind, result.c, result.n)
    lam, mu, lo_open, hi_open = query.interval
    cap = sieve_cap(max_limit)
    table = _shared_table(result.certificate_limit, cap)
    scanner = CriticalPointScanner(table, lam, mu, lo_open, hi_open)
    return scanner.failures_above(result.n, result.value, result.attained, result.certificate_limit)
