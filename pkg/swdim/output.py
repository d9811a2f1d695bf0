#!/usr/bin/env python3
"""
输出封装
统一的 OutputEnvelope，表格与 JSON 两种渲染，以及 JSON Schema 校验
"""
import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict

import jsonschema

from config import OUTPUT_CONFIG
from .errors import InputError

# 配置日志
logger = logging.getLogger(__name__)

SCHEMA_DIR = Path(__file__).resolve().parent.parent / OUTPUT_CONFIG["schema_dir"]

SCHEMA_FILES = {
    "spinc_invariants": "spinc_invariants.schema.json",
    "surface_class": "surface_class.schema.json",
    "output_envelope": "output_envelope.schema.json",
}


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    path = SCHEMA_DIR / SCHEMA_FILES[name]
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def validate(instance: Any, schema_name: str):
    """按仓库内的 schema 校验，失败时报告违反的字段"""
    try:
        jsonschema.validate(instance=instance, schema=load_schema(schema_name))
    except jsonschema.ValidationError as e:
        location = "/".join(str(part) for part in e.absolute_path) or "<root>"
        raise InputError(f"{schema_name} schema violation at {location}: {e.message}")


def load_json_file(path: str, schema_name: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON in {path}: {e}")
    validate(data, schema_name)
    return data


def dumps(payload: Any) -> str:
    """确定性的 JSON 文本，解析后再序列化逐字节一致"""
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2)


@dataclass
class OutputEnvelope:
    command: str
    inputs: Dict[str, Any]
    result: Any
    format: str = OUTPUT_CONFIG["default_format"]
    exit_code: int = field(default=0, compare=False)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "format": self.format,
        }

    def render(self) -> str:
        if self.format == "json":
            payload = self.to_dict()
            validate(payload, "output_envelope")
            return dumps(payload)
        return "\n".join(_table_lines(self.result))


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(_scalar(v) for v in value) if value else "-"
    if isinstance(value, dict):
        return ", ".join(f"{k}^{v}" for k, v in value.items()) if value else "-"
    return str(value)


def _table_lines(result: Any, prefix: str = ""):
    if isinstance(result, list):
        if result and all(isinstance(row, dict) for row in result):
            header = list(result[0].keys())
            yield "\t".join(header)
            for row in result:
                yield "\t".join(_scalar(row.get(key)) for key in header)
        else:
            for item in result:
                yield _scalar(item)
        return
    if not isinstance(result, dict):
        yield _scalar(result)
        return
    for key, value in result.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            yield f"{prefix}{key}:"
            for line in _table_lines(value):
                yield f"  {line}"
        elif isinstance(value, dict) and value and key != "details":
            yield from _table_lines(value, prefix=f"{prefix}{key}.")
        else:
            yield f"{prefix}{key}: {_scalar(value)}"
