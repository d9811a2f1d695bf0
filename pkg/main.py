#!/usr/bin/env python3
"""
swdim 命令行入口
只包含参数定义与日志配置，业务逻辑在 swdim 包中
"""
import argparse
import logging
import sys
from typing import List, Optional

from config import LOG_CONFIG, OUTPUT_CONFIG
from swdim.commands import CommandHandler
from swdim.errors import SwdimError


# 自定义日志过滤器，连续重复的消息只输出一次
class RepeatLogFilter(logging.Filter):
    def __init__(self):
        super().__init__()
        self.last = None

    def filter(self, record):
        key = (record.name, record.levelno, record.getMessage())
        if key == self.last:
            return False
        self.last = key
        return True


def setup_logging(verbose: bool = False):
    """日志只写 stderr，stdout 留给命令输出"""
    level = logging.DEBUG if verbose else getattr(logging, str(LOG_CONFIG["level"]).upper(), logging.WARNING)
    logging.basicConfig(level=level, format=LOG_CONFIG["format"], stream=sys.stderr, force=True)

    root_logger = logging.getLogger()
    for handler in root_logger.handlers:
        handler.addFilter(RepeatLogFilter())

    # numpy 与 sympy 的调试输出对用户没有意义
    for logger_name in ("numpy", "sympy"):
        logging.getLogger(logger_name).setLevel(logging.WARNING)


logger = logging.getLogger(__name__)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default=OUTPUT_CONFIG["default_format"],
                        help="输出格式")
    common.add_argument("--verbose", action="store_true", help="输出调试日志到 stderr")
    common.add_argument("--sieve-limit", type=int, default=None,
                        help="筛法上限，覆盖 SWDIM_SIEVE_LIMIT")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="swdim",
        description="Seiberg–Witten 虚维数上界、Ramanujan 素数与幂级数整除性的精确计算",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    # primes
    primes = commands.add_parser("primes", help="素数计数")
    primes_actions = primes.add_subparsers(dest="action", required=True)
    pi = primes_actions.add_parser("pi", parents=[common], help="π(x)")
    pi.add_argument("x", help="有理数 a/b 或整数")
    pi.add_argument("--limit", type=int, default=None, help="素数表上限，超出时报范围错误")
    count = primes_actions.add_parser("count", parents=[common], help="区间内素数个数")
    count.add_argument("lo")
    count.add_argument("hi")
    count.add_argument("--lo-open", action="store_true")
    count.add_argument("--hi-open", action="store_true")
    count.add_argument("--limit", type=int, default=None)
    rsgap = primes_actions.add_parser("rsgap", parents=[common], help="π(x) − π(cx) 的解析下界与精确值")
    rsgap.add_argument("x")
    rsgap.add_argument("--c", required=True)
    rsgap.add_argument("--limit", type=int, default=None)

    # ramanujan / sgap
    for name, help_text in (("ramanujan", "广义 Ramanujan 素数 R_{c,n}"), ("sgap", "区间阈值 S_{c,n}")):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--c", required=True, help="有理数 a/b")
        sub.add_argument("--n", type=int, required=True)
        sub.add_argument("--verify", action="store_true", help="重新扫描证书区间")

    # series
    series = commands.add_parser("series", help="(−log(1−x)/x)^k 的系数")
    series_actions = series.add_subparsers(dest="action", required=True)
    coeffs = series_actions.add_parser("coeffs", parents=[common], help="系数表")
    coeffs.add_argument("--k", type=int, required=True)
    coeffs.add_argument("--len", type=int, required=True)
    ddim = series_actions.add_parser("ddim", parents=[common], help="分母整除维数 d(q,k)")
    ddim.add_argument("--q", type=int, required=True)
    ddim.add_argument("--k", type=int, required=True)
    ddim.add_argument("--cap", type=int, default=None)

    # bound
    bound = commands.add_parser("bound", parents=[common], help="虚维数上界")
    bound.add_argument("--input", required=True, help="spin^c 不变量 JSON 文件")
    bound.add_argument("--prime", type=int, default=None)
    bound.add_argument("--all", action="store_true", help="列出全部分支")

    # adjunction
    adjunction = commands.add_parser("adjunction", parents=[common], help="嵌入曲面的亏格约束")
    adjunction.add_argument("--input", required=True)
    adjunction.add_argument("--surface", required=True, help="曲面类 JSON 文件")
    adjunction.add_argument("--prime", type=int, required=True)
    adjunction.add_argument("--min-genus", action="store_true", help="输出被排除的亏格")

    # cohomotopy
    cohomotopy = commands.add_parser("cohomotopy", parents=[common], help="上同伦限制映射条件")
    cohomotopy.add_argument("--n", type=int, required=True)
    cohomotopy.add_argument("--p", type=int, required=True)
    cohomotopy.add_argument("--i", type=int, default=1)

    # tables
    tables = commands.add_parser("tables", parents=[common], help="重新生成 golden 表")
    tables.add_argument("--output-dir", default=None)
    tables.add_argument("--check", action="store_true", help="只比较不写入")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 的用法错误退出码为 2，--help 为 0
        return int(e.code or 0)

    setup_logging(args.verbose)
    handler = CommandHandler(output_format=args.format, sieve_limit=args.sieve_limit)
    try:
        envelope = handler.dispatch(args)
    except SwdimError as e:
        logger.debug("命令失败", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    print(envelope.render())
    return envelope.exit_code


if __name__ == "__main__":
    sys.exit(main())
