"""
日志控制模块

基于 loguru。控制台只写 stderr，stdout 留给数据输出；库代码的日志默认关闭，
命令行入口调用 logger.enable("edutree") 后才可见。
"""

import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict

from edutree.settings import settings

CONSOLE_FORMAT = "{time:HH:mm:ss} | {level: <8} | {name}:{function}:{line} | {message}"
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} | {message}"


class LogOptions(BaseModel):
    """一次日志配置的全部选项，默认取自 settings"""

    model_config = ConfigDict(frozen=True)

    log_level: str
    log_to_file: bool
    log_dir: str
    log_retention_days: int
    log_rotation: str
    debug_mode: bool


class LogManager:
    """日志管理器，负责（重新）安装 loguru sink"""

    def __init__(self):
        self._is_configured = False

    def get_log_config(self) -> dict:
        """当前 settings 对应的配置；生产环境保留更久且不输出变量值"""
        options = LogOptions(
            log_level="DEBUG" if settings.DEBUG else settings.LOG_LEVEL,
            log_to_file=settings.LOG_TO_FILE,
            log_dir=str(settings.logs_path),
            log_retention_days=settings.LOG_RETENTION_DAYS,
            log_rotation=settings.LOG_ROTATION,
            debug_mode=settings.DEBUG,
        )
        if settings.is_production:
            options = options.model_copy(update={"log_retention_days": 30, "debug_mode": False})
        return options.model_dump()

    def setup_logger(self, force: bool = False, **overrides):
        """
        安装 sink

        Args:
            force: 已配置时是否重新配置（测试用来切换级别与目录）
            **overrides: 覆盖 get_log_config() 中的同名项
        """
        if self._is_configured and not force:
            return logger

        options = LogOptions(**{**self.get_log_config(), **overrides})
        logger.remove()
        # 写入时再取 sys.stderr，测试替换流时也能捕获
        logger.add(
            sink=lambda msg: sys.stderr.write(msg),
            format=CONSOLE_FORMAT,
            level=options.log_level.upper(),
            colorize=False,
            backtrace=options.debug_mode,
            diagnose=options.debug_mode,
        )
        if options.log_to_file:
            self._add_file_sinks(options)

        self._is_configured = True
        logger.debug("日志已配置: 环境 {}, 级别 {}, 文件 {}", settings.APP_ENV, options.log_level, options.log_to_file)
        return logger

    def _add_file_sinks(self, options: LogOptions) -> None:
        """普通日志与错误日志各一个文件，轮转后压缩"""
        log_path = Path(options.log_dir)
        log_path.mkdir(parents=True, exist_ok=True)
        today = datetime.now().strftime("%Y-%m-%d")
        common = dict(
            rotation=options.log_rotation,
            retention=f"{options.log_retention_days} days",
            format=FILE_FORMAT,
            encoding="utf-8",
            backtrace=True,
            diagnose=options.debug_mode,
            enqueue=True,
            compression="zip",
        )
        logger.add(sink=str(log_path / f"{today}.log"), level=options.log_level.upper(), **common)
        logger.add(sink=str(log_path / f"error_{today}.log"), level="ERROR", **common)


log_manager = LogManager()


def init_logging(**kwargs):
    """命令行入口调用；已配置时保持原配置"""
    log_manager.setup_logger(**kwargs)
    logger.debug("{} {} 启动", settings.APP_TITLE, settings.VERSION)
    return logger


def get_logger(name: Optional[str] = None):
    """
    获取日志记录器

    Args:
        name: 绑定到 extra 的名字，便于按模块过滤
    """
    if name:
        return logger.bind(name=name)
    return logger
