"""
swdim
Seiberg–Witten 虚维数上界的精确计算: 素数计数、广义 Ramanujan 素数、
幂级数分母整除性与附加不等式
"""
from .errors import BudgetError, CapExceeded, InapplicableError, InputError, RangeError, SwdimError
from .rational import ExactRational, format_rational, parse_rational

__all__ = [
    "BudgetError",
    "CapExceeded",
    "ExactRational",
    "InapplicableError",
    "InputError",
    "RangeError",
    "SwdimError",
    "format_rational",
    "parse_rational",
]
