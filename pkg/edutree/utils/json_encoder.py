"""
json-document 输出的序列化

模型文件、规则、评估报告与预测结果都走这里：键有序、缩进 2、以换行结尾，同一输入逐字节相同。
"""

import json
from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel


class DocumentEncoder(json.JSONEncoder):
    """认识 pydantic 模型、numpy 标量与数组、枚举和集合"""

    def default(self, obj: Any) -> Any:
        if isinstance(obj, BaseModel):
            return obj.model_dump(mode="json")
        if isinstance(obj, np.generic):
            return obj.item()
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, (set, frozenset)):
            return sorted(obj, key=str)
        return super().default(obj)


def safe_json_dumps(obj: Any, **kwargs) -> str:
    """
    序列化为稳定的 json-document 文本

    Raises:
        ValueError: 出现 NaN 或无穷大（文档中不允许）
    """
    kwargs.setdefault("cls", DocumentEncoder)
    kwargs.setdefault("ensure_ascii", False)
    kwargs.setdefault("sort_keys", True)
    kwargs.setdefault("indent", 2)
    kwargs.setdefault("allow_nan", False)
    return json.dumps(obj, **kwargs) + "\n"
