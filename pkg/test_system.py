#!/usr/bin/env python3
"""
系统自检脚本
验证依赖、schema 文件与 golden 表是否就绪
"""
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent


def test_imports():
    """测试必要的包是否可以导入"""
    print("📦 测试包导入...")

    try:
        import numpy
        print(f"✅ NumPy {numpy.__version__}")
    except ImportError as e:
        print(f"❌ NumPy: {e}")
        return False

    try:
        import sympy
        print(f"✅ SymPy {sympy.__version__}")
    except ImportError as e:
        print(f"❌ SymPy: {e}")
        return False

    try:
        import jsonschema
        print("✅ jsonschema")
    except ImportError as e:
        print(f"❌ jsonschema: {e}")
        return False

    try:
        import dotenv
        print("✅ python-dotenv")
    except ImportError as e:
        print(f"❌ python-dotenv: {e}")
        return False

    return True


def test_schema_files():
    """测试 schema 文件是否存在且为合法 JSON Schema"""
    print("\n📐 测试 schema 文件...")

    from jsonschema.validators import validator_for

    from swdim.output import SCHEMA_DIR, SCHEMA_FILES

    for name, file_name in SCHEMA_FILES.items():
        path = SCHEMA_DIR / file_name
        if not path.exists():
            print(f"❌ {file_name} 不存在")
            return False
        with open(path, "r", encoding="utf-8") as f:
            schema = json.load(f)
        validator_for(schema).check_schema(schema)
        print(f"✅ {name}")

    return True


def test_config():
    """测试配置是否可读"""
    print("\n⚙️  测试配置...")

    from config import LOG_CONFIG, SIEVE_CONFIG

    limit = SIEVE_CONFIG["max_limit"]
    if not isinstance(limit, int) or limit < 2:
        print(f"❌ 筛法上限无效: {limit!r}")
        return False
    print(f"✅ 筛法上限 {limit}")
    print(f"✅ 日志级别 {LOG_CONFIG['level']}")
    return True


def test_golden_tables():
    """测试 golden 表可以复现"""
    print("\n📊 测试 golden 表...")

    from swdim.commands import GOLDEN_DIR, RAMANUJAN_GOLDEN, SERIES_GOLDEN, render_ramanujan_golden, render_series_golden

    expected = {
        RAMANUJAN_GOLDEN: render_ramanujan_golden(),
        SERIES_GOLDEN: render_series_golden(),
    }
    for name, text in expected.items():
        path = GOLDEN_DIR / name
        if not path.exists():
            print(f"❌ {name} 不存在")
            return False
        if path.read_text(encoding="utf-8") != text:
            print(f"❌ {name} 与重新计算的结果不一致")
            return False
        print(f"✅ {name}")

    return True


def main():
    """主测试函数"""
    print("🧪 swdim 系统自检开始...\n")

    sys.path.insert(0, str(ROOT))
    tests = [
        ("包导入", test_imports),
        ("schema 文件", test_schema_files),
        ("配置", test_config),
        ("golden 表", test_golden_tables),
    ]

    results = []
    for test_name, test_func in tests:
        try:
            result = test_func()
            results.append((test_name, result))
        except Exception as e:
            print(f"❌ {test_name} 测试失败: {e}")
            results.append((test_name, False))

    # 输出测试结果
    print("\n" + "=" * 50)
    print("📊 测试结果汇总:")
    print("=" * 50)

    passed = 0
    for test_name, result in results:
        status = "✅ 通过" if result else "❌ 失败"
        print(f"{test_name:15} {status}")
        if result:
            passed += 1

    print(f"\n总计: {passed}/{len(results)} 项测试通过")

    if passed == len(results):
        print("\n🎉 所有检查通过！")
        print("\n常用命令:")
        print("  python main.py ramanujan --c 1/2 --n 5")
        print("  ./check_tables.sh      # 对比 golden 表")
        return 0
    else:
        print(f"\n⚠️  有 {len(results) - passed} 项检查失败，请检查问题后重试。")
        return 1


if __name__ == "__main__":
    sys.exit(main())
