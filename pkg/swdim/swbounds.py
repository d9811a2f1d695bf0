#!/usr/bin/env python3
"""
四维流形不变量数据模型与虚维数上界
包括 mod p 基本类的 2p−4 上界、各推论、区间素数上界以及上同伦适用条件
"""
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from sympy import isprime, nextprime

from config import SCAN_CONFIG
from .errors import InputError
from .rational import RationalLike, display_rational, even_floor, format_rational, parse_rational
from .ramanujan import s_threshold

# 配置日志
logger = logging.getLogger(__name__)

# 假设不成立时的标签
FAIL_B1 = "b1 ≠ 0"
FAIL_B2_SMALL = "b2+ < 2"
FAIL_B2_EVEN = "b2+ even"
FAIL_K_DIVISIBLE = "(b2+−1)/2 ≡ 0 mod p"
FAIL_SW_MOD_P = "sw ≡ 0 mod p"
FAIL_SW_ZERO = "sw = 0"
FAIL_BELOW_S = "n < S_{c,2}"
FAIL_SW_ABOVE_C = "|sw| > C"
FAIL_N_SMALL = "n < 44"


def _integer(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{name} must be an integer, got {value!r}")
    return value


def _require_prime(p) -> int:
    p = _integer("p", p)
    if not isprime(p):
        raise InputError(f"p must be prime, got {p}")
    return p


@dataclass(frozen=True)
class SpincInvariants:
    """(b1, b2+, sign(X), c1², SW): 所有上界运算的输入"""

    b1: int
    b2_plus: int
    signature: int
    c1_squared: int
    sw: int

    def __post_init__(self):
        for name in ("b1", "b2_plus", "signature", "c1_squared", "sw"):
            _integer(name, getattr(self, name))
        if self.b1 < 0 or self.b2_plus < 0:
            raise InputError("b1 and b2_plus must be nonnegative")
        if (self.c1_squared - self.signature) % 4 != 0:
            raise InputError(
                f"c1_squared − signature = {self.c1_squared - self.signature} is not divisible by 4"
            )
        if self.b1 == 0 and self.b2_plus % 2 == 0 and self.sw != 0:
            raise InputError("sw must vanish for even b2+ (b1 = 0)")
        if self.sw != 0 and (self.d % 2 != 0 or self.d < 0):
            raise InputError(f"a basic class needs even d >= 0, got d = {self.d}")

    @property
    def d(self) -> int:
        return (self.c1_squared - self.signature) // 4 - (1 + self.b2_plus)

    @property
    def k(self) -> Optional[int]:
        """(b2+ − 1)/2，b2+ 为偶数时为 None"""
        return (self.b2_plus - 1) // 2 if self.b2_plus % 2 == 1 else None

    @classmethod
    def from_dimension(cls, b2_plus: int, d: int, sw: int, b1: int = 0, signature: int = 0) -> "SpincInvariants":
        """按指定虚维数反解 c1²"""
        return cls(b1=b1, b2_plus=b2_plus, signature=signature,
                   c1_squared=signature + 4 * (1 + b2_plus + d), sw=sw)

    @classmethod
    def from_dict(cls, data: dict) -> "SpincInvariants":
        try:
            return cls(**{name: data[name] for name in ("b1", "b2_plus", "signature", "c1_squared", "sw")})
        except KeyError as e:
            raise InputError(f"missing field {e.args[0]!r} in spin-c invariants")

    def to_dict(self) -> dict:
        return {
            "b1": self.b1,
            "b2_plus": self.b2_plus,
            "signature": self.signature,
            "c1_squared": self.c1_squared,
            "sw": self.sw,
        }


@dataclass(frozen=True)
class BoundReport:
    """单条上界的求值结果；不适用是数据而不是异常"""

    bound_name: str
    applicable: bool
    hypothesis_failures: Tuple[str, ...] = ()
    bound_value: Optional[int] = None
    raw_bound: Optional[Fraction] = None
    parameter: Optional[str] = None
    provenance: Optional[str] = None
    suggestion: Optional[str] = None
    details: Dict[str, str] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "bound_name": self.bound_name,
            "applicable": self.applicable,
            "bound_value": self.bound_value,
            "raw_bound": format_rational(self.raw_bound) if self.raw_bound is not None else None,
            "hypothesis_failures": list(self.hypothesis_failures),
            "parameter": self.parameter,
            "provenance": self.provenance,
            "suggestion": self.suggestion,
            "details": dict(self.details),
        }


def _report(name: str, failures: List[str], raw: Optional[Fraction], **extra) -> BoundReport:
    if failures:
        return BoundReport(name, False, tuple(failures), **extra)
    return BoundReport(name, True, (), even_floor(raw), Fraction(raw), **extra)


def _standing_failures(inv: SpincInvariants) -> List[str]:
    failures = []
    if inv.b1 != 0:
        failures.append(FAIL_B1)
    if inv.b2_plus < 2:
        failures.append(FAIL_B2_SMALL)
    return failures


def compute_d(inv: SpincInvariants) -> int:
    """d(s) = (c1² − sign)/4 − (1 + b2+)"""
    return inv.d


def theorem_main_bound(p: int, inv: SpincInvariants) -> BoundReport:
    """mod p 基本类满足 d(s) <= 2p − 4"""
    p = _require_prime(p)
    failures = _standing_failures(inv)
    if inv.k is None:
        failures.append(FAIL_B2_EVEN)
    elif inv.k % p == 0:
        failures.append(FAIL_K_DIVISIBLE)
    if inv.sw % p == 0:
        failures.append(FAIL_SW_MOD_P)
    return _report("theorem_main", failures, Fraction(2 * p - 4), parameter=f"p={p}")


def uniform_bound_1(p: int, inv: SpincInvariants, bound_c: int) -> BoundReport:
    """|SW| <= C 的 mod p 基本类一致满足 2p − 4"""
    report = theorem_main_bound(p, inv)
    failures = list(report.hypothesis_failures)
    if abs(inv.sw) > _integer("C", bound_c):
        failures.append(FAIL_SW_ABOVE_C)
    return _report("uniform_bound_1", failures, Fraction(2 * p - 4), parameter=f"p={p}, C={bound_c}")


def _basic_class_guard(inv: SpincInvariants):
    if inv.sw == 0:
        raise InputError("sw = 0: not a basic class")
    if inv.b1 != 0:
        raise InputError("least admissible prime needs b1 = 0")
    if inv.k is None or inv.b2_plus < 2:
        raise InputError("least admissible prime needs odd b2+ >= 2")


def least_admissible_prime(inv: SpincInvariants) -> int:
    """不整除 SW 且不整除 (b2+ − 1)/2 的最小素数"""
    _basic_class_guard(inv)
    p = 2
    while inv.sw % p == 0 or inv.k % p == 0:
        p = nextprime(p)
    return int(p)


def nonprime_bound(inv: SpincInvariants) -> BoundReport:
    """d(s) <= max{2|SW| − 6, b2+ − 7, 10}"""
    failures = _standing_failures(inv)
    if inv.sw == 0:
        failures.append(FAIL_SW_ZERO)
    raw = Fraction(max(2 * abs(inv.sw) - 6, inv.b2_plus - 7, 10))
    return _report("nonprime_bound", failures, raw)


def s_parameter(inv: SpincInvariants) -> int:
    """n = max{|SW|, (b2+ − 1)/2}"""
    return max(abs(inv.sw), (inv.b2_plus - 1) // 2)


def theorem_s_bound(inv: SpincInvariants, c: RationalLike, max_limit: Optional[int] = None) -> BoundReport:
    """n >= S_{c,2} 时 d(s) <= 2n − 6 (c = 1) 或 2cn − 4 (c < 1)"""
    c = parse_rational(c)
    if not Fraction(1, 2) < c <= 1:
        raise InputError(f"c must lie in (1/2, 1], got {c}")
    failures = _standing_failures(inv)
    if inv.sw == 0:
        failures.append(FAIL_SW_ZERO)

    n = s_parameter(inv)
    threshold = s_threshold(c, 2, max_limit=max_limit)
    reaches = n > threshold.value or (n == threshold.value and threshold.attained)
    suggestion = None
    if not reaches:
        failures.append(FAIL_BELOW_S)
        suggestion = "nonprime_bound"

    raw = Fraction(2 * n - 6) if c == 1 else 2 * c * n - 4
    details = {"n": str(n), "S_c2": format_rational(threshold.value), "S_c2_attained": str(threshold.attained)}
    return _report("theorem_s_bound", failures, raw, parameter=f"c={display_rational(c)}",
                   suggestion=suggestion, details=details)


def example_n_large_bound(inv: SpincInvariants) -> BoundReport:
    """n >= 44 时 d(s) <= max{4/3·|SW| − 4, 2/3·b2+ − 14/3}"""
    failures = _standing_failures(inv)
    if inv.sw == 0:
        failures.append(FAIL_SW_ZERO)
    if s_parameter(inv) < 44:
        failures.append(FAIL_N_SMALL)
    raw = max(Fraction(4, 3) * abs(inv.sw) - 4, Fraction(2, 3) * inv.b2_plus - Fraction(14, 3))
    return _report("example_n_large", failures, raw, parameter="c=2/3")


def all_bounds(inv: SpincInvariants, max_limit: Optional[int] = None) -> List[BoundReport]:
    """best_bound 评估的全部分支"""
    reports = []
    try:
        lap = least_admissible_prime(inv)
    except InputError as e:
        logger.debug(f"无法确定最小可用素数: {e}")
        lap = 2
    p = 2
    while p <= lap:
        reports.append(theorem_main_bound(p, inv))
        p = int(nextprime(p))
    reports.append(nonprime_bound(inv))
    for c in SCAN_CONFIG["s_threshold_constants"]:
        reports.append(theorem_s_bound(inv, c, max_limit=max_limit))
    return reports


def best_bound(inv: SpincInvariants, max_limit: Optional[int] = None) -> BoundReport:
    """所有适用上界中的最小值，并记录来源"""
    reports = all_bounds(inv, max_limit=max_limit)
    applicable = [r for r in reports if r.applicable]
    if not applicable:
        failures = sorted({f for r in reports for f in r.hypothesis_failures})
        logger.warning(f"没有适用的上界: {failures}")
        return BoundReport("no-bound", False, tuple(failures))

    best = min(applicable, key=lambda r: r.bound_value)
    provenance = best.bound_name if best.parameter is None else f"{best.bound_name}({best.parameter})"
    logger.info(f"最佳上界 {best.bound_value} 来自 {provenance}")
    return replace(best, bound_name="best_bound", provenance=provenance)


@dataclass(frozen=True)
class CohomotopyReport:
    n: int
    p: int
    i: int
    holds: bool
    steenrod_coefficient: int
    map_factor: Optional[int]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "i": self.i,
            "holds": self.holds,
            "steenrod_coefficient": self.steenrod_coefficient,
            "map_factor": self.map_factor,
        }


def cohomotopy_condition(n: int, p: int, i: int = 1) -> CohomotopyReport:
    """
    n ≢ −1, …, −i mod p 时限制映射等同于乘以 p^i
    i = 1 时 Steenrod 系数 (n − p + 1) mod p 非零恰好等价于条件成立
    """
    n = _integer("n", n)
    p = _require_prime(p)
    i = _integer("i", i)
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if not 1 <= i <= p - 1:
        raise InputError(f"i must lie in [1, {p - 1}], got {i}")
    holds = all((n + j) % p != 0 for j in range(1, i + 1))
    return CohomotopyReport(
        n=n,
        p=p,
        i=i,
        holds=holds,
        steenrod_coefficient=(n - p + 1) % p,
        map_factor=p**i if holds else None,
    )


def cohomotopy_degree(b2_plus: int, p: int) -> int:
    """主定理证明中的 n，满足 2n = b2+ + 2p − 3"""
    b2_plus = _integer("b2_plus", b2_plus)
    p = _require_prime(p)
    if b2_plus % 2 == 0:
        raise InputError("cohomotopy degree needs odd b2+")
    return (b2_plus + 2 * p - 3) // 2
