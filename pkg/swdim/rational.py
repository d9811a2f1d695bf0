"""
精确有理数工具
区间端点、级数系数、实数界都以 Fraction 表示，不经过浮点
"""
import math
import re
from fractions import Fraction
from typing import Union

from .errors import InputError

ExactRational = Fraction

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: RationalLike) -> Fraction:
    """解析 "a/b" 或整数，拒绝小数和科学计数法"""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise InputError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise InputError(f"not a rational 'a/b' or integer: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise InputError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: RationalLike) -> str:
    """序列化为 num/den 形式，整数写成 n/1"""
    value = parse_rational(value)
    return f"{value.numerator}/{value.denominator}"


def display_rational(value: RationalLike) -> str:
    value = parse_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def even_floor(value: RationalLike) -> int:
    """不超过 value 的最大偶数"""
    return 2 * math.floor(parse_rational(value) / 2)
