#!/usr/bin/env python3
"""
嵌入曲面的亏格约束
维数平移公式、曲面平移与爆破两种 spin^c 变换，以及附加不等式的判定
"""
import logging
from dataclasses import dataclass, replace
from typing import List, Optional, Set, Tuple

from .errors import InapplicableError, InputError
from .swbounds import SpincInvariants, _integer, _require_prime

# 配置日志
logger = logging.getLogger(__name__)

# 未满足的假设
HYP_GENUS_POSITIVE = "g ≥ 1"
HYP_NEGATIVE_SQUARE = "α·α < 0"
HYP_MOD_P_BASIC = "sw ≢ 0 mod p"
HYP_SHIFT_1 = "−⟨c1,α⟩ + α·α ≥ max{2g − 2d, 0}"
HYP_SHIFT_2 = "⟨c1,α⟩ + α·α ≥ 2g"
HYP_B1 = "b1 = 0"
HYP_B2 = "b2+ ≥ 2"
HYP_K = "(b2+−1)/2 ≢ 0 mod p"
HYP_BASIC = "sw ≠ 0"


@dataclass(frozen=True)
class SurfaceClass:
    """亏格 g、自交数 α·α 与配对 ⟨c1(s),α⟩"""

    genus: int
    self_int: int
    pairing: int

    def __post_init__(self):
        for name in ("genus", "self_int", "pairing"):
            _integer(name, getattr(self, name))
        if self.genus < 0:
            raise InputError(f"genus must be nonnegative, got {self.genus}")
        if (self.pairing + self.self_int) % 2 != 0:
            raise InputError(
                f"Wu formula violated: pairing + self_int = {self.pairing + self.self_int} must be even"
            )

    @classmethod
    def from_dict(cls, data: dict) -> "SurfaceClass":
        try:
            return cls(genus=data["genus"], self_int=data["self_int"], pairing=data["pairing"])
        except KeyError as e:
            raise InputError(f"missing field {e.args[0]!r} in surface class")

    def to_dict(self) -> dict:
        return {"genus": self.genus, "self_int": self.self_int, "pairing": self.pairing}


def reverse_orientation(surf: SurfaceClass) -> SurfaceClass:
    """反转曲面定向: 配对取反，自交数不变"""
    return replace(surf, pairing=-surf.pairing)


@dataclass(frozen=True)
class TransformResult:
    applicable: bool
    hypothesis_failures: Tuple[str, ...] = ()
    invariants: Optional[SpincInvariants] = None
    surface: Optional[SurfaceClass] = None

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "hypothesis_failures": list(self.hypothesis_failures),
            "invariants": self.invariants.to_dict() if self.invariants else None,
            "surface": self.surface.to_dict() if self.surface else None,
            "d": self.invariants.d if self.invariants else None,
        }


@dataclass(frozen=True)
class GenusVerdict:
    theorem_branch: str
    inequality: str
    hypotheses_hold: bool
    inequality_holds: bool
    forbidden: bool
    lhs: int
    rhs: int
    hypothesis_failures: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "branch": self.theorem_branch,
            "inequality": self.inequality,
            "hypotheses_hold": self.hypotheses_hold,
            "inequality_holds": self.inequality_holds,
            "forbidden": self.forbidden,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "hypothesis_failures": list(self.hypothesis_failures),
        }


@dataclass(frozen=True)
class GenusExclusion:
    """某一分支排除的亏格区间 [lower, upper]，lower > upper 表示空"""

    theorem_branch: str
    inequality: str
    lower: int
    upper: int
    hypothesis_failures: Tuple[str, ...] = ()

    @property
    def genera(self) -> range:
        if self.hypothesis_failures:
            return range(0)
        return range(self.lower, self.upper + 1)

    def to_dict(self) -> dict:
        genera = self.genera
        return {
            "branch": self.theorem_branch,
            "inequality": self.inequality,
            "excluded": [genera.start, genera.stop - 1] if len(genera) else None,
            "hypothesis_failures": list(self.hypothesis_failures),
        }


def shift_d(inv: SpincInvariants, surf: SurfaceClass, sign: int) -> int:
    """d(s ± PD(α)) = d(s) ± ⟨c1(s),α⟩ + α·α"""
    if sign not in (1, -1):
        raise InputError(f"sign must be +1 or -1, got {sign}")
    return inv.d + sign * surf.pairing + surf.self_int


def _with_dimension(inv: SpincInvariants, new_d: int) -> SpincInvariants:
    """只改 c1²，使 compute_d 给出 new_d"""
    return replace(inv, c1_squared=inv.c1_squared + 4 * (new_d - inv.d))


def surface_shift_transform(inv: SpincInvariants, surf: SurfaceClass, p: int) -> TransformResult:
    """满足条件时 s − PD(α) 仍是 mod p 基本类，SW 不变"""
    p = _require_prime(p)
    failures = []
    if inv.sw % p == 0:
        failures.append(HYP_MOD_P_BASIC)
    if surf.genus < 1:
        failures.append(HYP_GENUS_POSITIVE)
    if -surf.pairing + surf.self_int < max(2 * surf.genus - 2 * inv.d, 0):
        failures.append(HYP_SHIFT_1)
    if failures:
        return TransformResult(False, tuple(failures))

    shifted = _with_dimension(inv, shift_d(inv, surf, -1))
    logger.debug(f"曲面平移: d {inv.d} -> {shifted.d}")
    return TransformResult(True, invariants=shifted, surface=surf)


def blowup_transform(inv: SpincInvariants) -> SpincInvariants:
    """X # n(−CP²)，n = d/2: sign − n，c1² − 9n，SW 不变，结果 d = 0"""
    if inv.d < 0 or inv.d % 2 != 0:
        raise InapplicableError(f"blow-up needs even d >= 0, got d = {inv.d}")
    count = inv.d // 2
    return replace(inv, signature=inv.signature - count, c1_squared=inv.c1_squared - 9 * count)


def surface_blowup_shift(inv: SpincInvariants, surf: SurfaceClass, p: int) -> TransformResult:
    """
    爆破后 α̂ = α − e_1 − … − e_n: 配对 +3n，自交数 −n，
    ŝ + PD(α̂) 的维数为 ⟨c1,α⟩ + α·α + d(s)
    """
    p = _require_prime(p)
    if inv.d < 0 or inv.d % 2 != 0:
        raise InapplicableError(f"blow-up needs even d >= 0, got d = {inv.d}")
    failures = []
    if inv.sw % p == 0:
        failures.append(HYP_MOD_P_BASIC)
    if surf.self_int >= 0:
        failures.append(HYP_NEGATIVE_SQUARE)
    if surf.pairing + surf.self_int < 2 * surf.genus:
        failures.append(HYP_SHIFT_2)
    if surf.genus < 1:
        failures.append(HYP_GENUS_POSITIVE)
    if failures:
        return TransformResult(False, tuple(failures))

    count = inv.d // 2
    blown = blowup_transform(inv)
    hat_surface = SurfaceClass(genus=surf.genus, self_int=surf.self_int - count, pairing=surf.pairing + 3 * count)
    shifted = _with_dimension(blown, shift_d(blown, hat_surface, 1))
    return TransformResult(True, invariants=shifted, surface=hat_surface)


def _mod_p_failures(inv: SpincInvariants, p: int) -> List[str]:
    failures = []
    if inv.b2_plus < 2:
        failures.append(HYP_B2)
    if inv.b1 != 0:
        failures.append(HYP_B1)
    if inv.k is None or inv.k % p == 0:
        failures.append(HYP_K)
    if inv.sw % p == 0:
        failures.append(HYP_MOD_P_BASIC)
    return failures


def _ordinary_failures(inv: SpincInvariants) -> List[str]:
    failures = []
    if inv.b2_plus < 2:
        failures.append(HYP_B2)
    if inv.b1 != 0:
        failures.append(HYP_B1)
    if inv.sw == 0:
        failures.append(HYP_BASIC)
    return failures


def ordinary_genus_thresholds(inv: SpincInvariants) -> Tuple[int, int]:
    """任意基本类适用 (1)(2) 的亏格门槛"""
    first = max(abs(2 * inv.sw) - 5, inv.b2_plus - 6, 11)
    # (b2+ − 5)/2 可能是半整数，亏格为整数时取上整
    second = max(abs(inv.sw) - 2, -((5 - inv.b2_plus) // 2), 6)
    return first, second


def _branches(inv: SpincInvariants, p: int):
    """(分支, 不等式, 亏格门槛, d 的系数, 非亏格假设失败)"""
    mod_p = _mod_p_failures(inv, p)
    ordinary = _ordinary_failures(inv)
    first, second = ordinary_genus_thresholds(inv)
    return [
        ("(1)", "(1)", 2 * p - 3, 2, mod_p),
        ("(2)", "(2)", p - 1, 1, mod_p),
        ("ordinary", "(1)", first, 2, ordinary),
        ("ordinary", "(2)", second, 1, ordinary),
    ]


def adjunction_verdict(inv: SpincInvariants, surf: SurfaceClass, p: int) -> List[GenusVerdict]:
    """
    (1) g >= 2p−3 时 |⟨c1,α⟩| + α·α + 2d <= 2g − 2
    (2) g >= p−1 时 |⟨c1,α⟩| + α·α + d <= 2g − 2
    """
    p = _require_prime(p)
    verdicts = []
    for branch, inequality, genus_floor, d_weight, base_failures in _branches(inv, p):
        failures = list(base_failures)
        if surf.self_int >= 0:
            failures.append(HYP_NEGATIVE_SQUARE)
        if surf.genus < genus_floor:
            failures.append(f"g ≥ {genus_floor}")
        lhs = abs(surf.pairing) + surf.self_int + d_weight * inv.d
        rhs = 2 * surf.genus - 2
        hypotheses_hold = not failures
        inequality_holds = lhs <= rhs
        verdicts.append(GenusVerdict(
            theorem_branch=branch,
            inequality=inequality,
            hypotheses_hold=hypotheses_hold,
            inequality_holds=inequality_holds,
            forbidden=hypotheses_hold and not inequality_holds,
            lhs=lhs,
            rhs=rhs,
            hypothesis_failures=tuple(failures),
        ))
    return verdicts


def min_genus_floor(inv: SpincInvariants, self_int: int, pairing: int, p: int) -> List[GenusExclusion]:
    """各分支排除的亏格: g 不小于门槛且 2g − 2 < 左端"""
    p = _require_prime(p)
    # 借用 SurfaceClass 做奇偶校验
    SurfaceClass(genus=0, self_int=self_int, pairing=pairing)
    exclusions = []
    for branch, inequality, genus_floor, d_weight, base_failures in _branches(inv, p):
        failures = list(base_failures)
        if self_int >= 0:
            failures.append(HYP_NEGATIVE_SQUARE)
        lhs = abs(pairing) + self_int + d_weight * inv.d
        exclusions.append(GenusExclusion(
            theorem_branch=branch,
            inequality=inequality,
            lower=max(genus_floor, 0),
            upper=(lhs + 1) // 2,
            hypothesis_failures=tuple(failures),
        ))
    return exclusions


def excluded_genera(exclusions: List[GenusExclusion]) -> Set[int]:
    out: Set[int] = set()
    for exclusion in exclusions:
        out.update(exclusion.genera)
    return out
