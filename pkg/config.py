import os

from dotenv import load_dotenv

load_dotenv()

# 筛法配置
SIEVE_CONFIG = {
    "max_limit": int(os.environ.get("SWDIM_SIEVE_LIMIT", 10**8)),  # 内存上限，对应约 50MB 位图
    "block_bits": 1 << 15,  # 每个累计计数块覆盖的奇数个数
}

# 临界点扫描配置
SCAN_CONFIG = {
    "budget_inflation": 1,  # 浮点预算向上取整后再加 1
    "rs_haircut": 0.99,  # 解析下界使用前乘以的安全系数
    "s_threshold_constants": ["1", "3/4", "2/3"],  # best_bound 使用的 c 值
}

# 幂级数配置
SERIES_CONFIG = {
    "cap_factor": 4,  # 默认 cap = 4·p·k + 16
    "cap_offset": 16,
    "factor_bound": 100,  # 分母分解只用到 100 以内的素数
}

# 输出配置
OUTPUT_CONFIG = {
    "default_format": "table",
    "schema_dir": "schemas",
    "golden_dir": "golden",
    "ramanujan_rows": {"1/2": 5, "3/4": 5},
    "series_primes_upto": 31,
}

# 日志配置
LOG_CONFIG = {
    "level": os.environ.get("SWDIM_LOG_LEVEL", "WARNING"),
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
}
