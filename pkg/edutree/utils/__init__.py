#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
工具模块
包含日志系统、JSON 序列化、原子写文件等
"""

from .files import atomic_write_text
from .json_encoder import safe_json_dumps
from .log_control import get_logger, init_logging, log_manager, logger

__all__ = [
    "logger",
    "get_logger",
    "init_logging",
    "log_manager",
    "safe_json_dumps",
    "atomic_write_text",
]
