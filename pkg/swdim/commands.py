#!/usr/bin/env python3
"""
命令处理
把解析后的命令行参数交给各模块，并包装成 OutputEnvelope
"""
import logging
import math
from pathlib import Path
from typing import Dict, List, Optional

from sympy import primerange

from config import OUTPUT_CONFIG
from .adjunction import SurfaceClass, adjunction_verdict, excluded_genera, min_genus_floor
from .errors import CapExceeded, InputError
from .output import OutputEnvelope, load_json_file
from .primes import build_table, conservative_gap, rs_gap_lower_bound
from .ramanujan import ramanujan_prime, ramanujan_table, s_threshold, verify_certificate
from .rational import format_rational, parse_rational
from .series import coefficient_table, divisibility_dimension
from .swbounds import (
    SpincInvariants,
    all_bounds,
    best_bound,
    cohomotopy_condition,
    theorem_main_bound,
)

# 配置日志
logger = logging.getLogger(__name__)

GOLDEN_DIR = Path(__file__).resolve().parent.parent / OUTPUT_CONFIG["golden_dir"]
RAMANUJAN_GOLDEN = "ramanujan.tsv"
SERIES_GOLDEN = "series_d_q1.tsv"


class CommandHandler:
    """命令处理器，每个子命令对应一个 cmd_* 方法"""

    def __init__(self, output_format: str = OUTPUT_CONFIG["default_format"], sieve_limit: Optional[int] = None):
        self.output_format = output_format
        self.sieve_limit = sieve_limit

    def dispatch(self, args) -> OutputEnvelope:
        handler = getattr(self, f"cmd_{args.command}", None)
        if handler is None:
            raise InputError(f"unknown command {args.command!r}")
        return handler(args)

    def _envelope(self, command: str, inputs: Dict, result, exit_code: int = 0) -> OutputEnvelope:
        return OutputEnvelope(command, inputs, result, self.output_format, exit_code)

    def _load_invariants(self, path: str) -> SpincInvariants:
        return SpincInvariants.from_dict(load_json_file(path, "spinc_invariants"))

    # ---- primes ----

    def cmd_primes(self, args) -> OutputEnvelope:
        if args.action == "pi":
            x = parse_rational(args.x)
            if x < 0:
                raise InputError(f"x must be >= 0, got {args.x}")
            table = build_table(self._table_limit(args, x), max_limit=self.sieve_limit)
            inputs = {"action": "pi", "x": format_rational(x)}
            return self._envelope("primes", inputs, {"pi": table.pi(x)})

        if args.action == "count":
            lo, hi = parse_rational(args.lo), parse_rational(args.hi)
            if lo < 0 or lo > hi:
                raise InputError(f"need 0 <= lo <= hi, got lo={args.lo}, hi={args.hi}")
            table = build_table(self._table_limit(args, hi), max_limit=self.sieve_limit)
            primes = table.primes_in(lo, hi, args.lo_open, args.hi_open)
            inputs = {
                "action": "count",
                "lo": format_rational(lo),
                "hi": format_rational(hi),
                "lo_open": args.lo_open,
                "hi_open": args.hi_open,
            }
            return self._envelope("primes", inputs, {"count": len(primes), "primes": primes})

        # rsgap
        x, c = parse_rational(args.x), parse_rational(args.c)
        bound = rs_gap_lower_bound(x, c)
        table = build_table(self._table_limit(args, x), max_limit=self.sieve_limit)
        gap = table.count_primes_interval(c * x, x, True, False)
        inputs = {"action": "rsgap", "x": format_rational(x), "c": format_rational(c)}
        result = {
            "lower_bound": f"{bound:.12g}",
            "conservative": f"{conservative_gap(x, c):.12g}",
            "exact_gap": gap,
            "below_exact": bound < gap,
        }
        return self._envelope("primes", inputs, result)

    @staticmethod
    def _table_limit(args, top) -> int:
        if getattr(args, "limit", None) is not None:
            return args.limit
        return max(2, math.ceil(top))

    # ---- ramanujan / sgap ----

    def _threshold_envelope(self, command: str, args, result) -> OutputEnvelope:
        payload = result.to_dict()
        if args.verify:
            failures = verify_certificate(result, max_limit=self.sieve_limit)
            payload["certificate_failures"] = [format_rational(x) for x in failures]
        inputs = {"c": format_rational(parse_rational(args.c)), "n": args.n}
        return self._envelope(command, inputs, payload)

    def cmd_ramanujan(self, args) -> OutputEnvelope:
        result = ramanujan_prime(parse_rational(args.c), args.n, max_limit=self.sieve_limit)
        return self._threshold_envelope("ramanujan", args, result)

    def cmd_sgap(self, args) -> OutputEnvelope:
        result = s_threshold(parse_rational(args.c), args.n, max_limit=self.sieve_limit)
        return self._threshold_envelope("sgap", args, result)

    # ---- series ----

    def cmd_series(self, args) -> OutputEnvelope:
        if args.action == "coeffs":
            rows = coefficient_table(args.k, args.len)
            return self._envelope("series", {"action": "coeffs", "k": args.k, "len": args.len}, rows)

        result = divisibility_dimension(args.q, args.k, args.cap)
        inputs = {"action": "ddim", "q": args.q, "k": args.k, "cap": result.cap}
        exit_code = CapExceeded.exit_code if result.cap_exceeded else 0
        return self._envelope("series", inputs, result.to_dict(), exit_code)

    # ---- bound ----

    def cmd_bound(self, args) -> OutputEnvelope:
        inv = self._load_invariants(args.input)
        inputs = {"invariants": inv.to_dict(), "d": inv.d}
        if args.prime is not None:
            inputs["prime"] = args.prime
            return self._envelope("bound", inputs, theorem_main_bound(args.prime, inv).to_dict())
        if args.all:
            reports = all_bounds(inv, max_limit=self.sieve_limit)
            result = {
                "branches": [r.to_dict() for r in reports],
                "best": best_bound(inv, max_limit=self.sieve_limit).to_dict(),
            }
            return self._envelope("bound", inputs, result)
        return self._envelope("bound", inputs, best_bound(inv, max_limit=self.sieve_limit).to_dict())

    # ---- adjunction ----

    def cmd_adjunction(self, args) -> OutputEnvelope:
        inv = self._load_invariants(args.input)
        surf = SurfaceClass.from_dict(load_json_file(args.surface, "surface_class"))
        inputs = {"invariants": inv.to_dict(), "surface": surf.to_dict(), "prime": args.prime}
        if args.min_genus:
            exclusions = min_genus_floor(inv, surf.self_int, surf.pairing, args.prime)
            result = {
                "branches": [e.to_dict() for e in exclusions],
                "excluded_genera": sorted(excluded_genera(exclusions)),
            }
            return self._envelope("adjunction", inputs, result)
        verdicts = adjunction_verdict(inv, surf, args.prime)
        return self._envelope("adjunction", inputs, [v.to_dict() for v in verdicts])

    # ---- cohomotopy ----

    def cmd_cohomotopy(self, args) -> OutputEnvelope:
        report = cohomotopy_condition(args.n, args.p, args.i)
        return self._envelope("cohomotopy", {"n": args.n, "p": args.p, "i": args.i}, report.to_dict())

    # ---- tables ----

    def cmd_tables(self, args) -> OutputEnvelope:
        output_dir = Path(args.output_dir) if args.output_dir else GOLDEN_DIR
        documents = {
            RAMANUJAN_GOLDEN: render_ramanujan_golden(self.sieve_limit),
            SERIES_GOLDEN: render_series_golden(),
        }

        if args.check:
            mismatched = [name for name, text in documents.items() if _read(output_dir / name) != text]
            if mismatched:
                logger.error(f"golden 文件不一致: {mismatched}")
                raise InputError(f"golden files differ: {', '.join(mismatched)}")
            return self._envelope("tables", {"check": True, "dir": str(output_dir)},
                                  {"files": sorted(documents), "status": "match"})

        try:
            output_dir.mkdir(parents=True, exist_ok=True)
            for name, text in documents.items():
                (output_dir / name).write_text(text, encoding="utf-8")
                logger.info(f"已写入 {output_dir / name}")
        except OSError as e:
            raise InputError(f"cannot write {output_dir}: {e}")
        return self._envelope("tables", {"check": False, "dir": str(output_dir)},
                              {"files": sorted(documents), "status": "written"})


def _read(path: Path) -> Optional[str]:
    try:
        return path.read_text(encoding="utf-8")
    except OSError:
        return None


def render_ramanujan_golden(sieve_limit: Optional[int] = None) -> str:
    lines: List[str] = ["# c\tn\tR_{c,n}"]
    for c, rows in OUTPUT_CONFIG["ramanujan_rows"].items():
        for result in ramanujan_table(parse_rational(c), rows, max_limit=sieve_limit):
            lines.append(f"{c}\t{result.n}\t{result.value}")
    return "\n".join(lines) + "\n"


def render_series_golden() -> str:
    lines: List[str] = ["# q\tk\td(q,k)"]
    for q in primerange(2, OUTPUT_CONFIG["series_primes_upto"] + 1):
        result = divisibility_dimension(int(q), 1)
        lines.append(f"{q}\t1\t{result.dimension}")
    return "\n".join(lines) + "\n"
