"""
异常层次
每个异常类带有对应的命令行退出码
"""


class SwdimError(Exception):
    """所有库异常的基类"""

    exit_code = 1


class InputError(SwdimError, ValueError):
    """输入解析失败或违反数据不变量"""

    exit_code = 2


class InapplicableError(InputError):
    """变换的前提条件不成立"""


class RangeError(SwdimError, IndexError):
    """查询超出素数表范围"""

    exit_code = 3


class BudgetError(SwdimError, RuntimeError):
    """筛法上限超出内存预算"""

    exit_code = 4


class CapExceeded(SwdimError, RuntimeError):
    """级数计算在 cap 之内没有找到可整除的分母"""

    exit_code = 5
