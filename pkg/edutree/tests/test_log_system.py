"""
日志系统测试
验证 loguru 配置、库内默认静默以及环境变量配置
"""

import pytest
from loguru import logger
from pydantic import ValidationError

from edutree.controllers import model_controller
from edutree.settings.config import Settings
from edutree.utils.log_control import get_logger, init_logging, log_manager


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    log_manager.setup_logger(force=True)
    logger.disable("edutree")


def test_basic_logging(capsys):
    """测试基本日志功能"""
    log_manager.setup_logger(force=True, log_level="INFO")
    logger.info("这是一条信息日志")
    logger.debug("这是一条调试日志")
    err = capsys.readouterr().err
    assert "这是一条信息日志" in err
    assert "这是一条调试日志" not in err
    assert "| INFO     |" in err


def test_console_never_writes_stdout(capsys):
    log_manager.setup_logger(force=True, log_level="DEBUG")
    logger.warning("警告")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "警告" in captured.err


def test_library_is_silent_until_enabled(capsys, students):
    """测试库内日志默认关闭"""
    log_manager.setup_logger(force=True, log_level="INFO")
    logger.disable("edutree")
    model_controller.train("id3", students)
    assert "训练完成" not in capsys.readouterr().err

    logger.enable("edutree")
    model_controller.train("id3", students)
    assert "id3 训练完成" in capsys.readouterr().err


def test_named_logger(capsys):
    """测试具名日志器"""
    log_manager.setup_logger(force=True, log_level="INFO")
    get_logger("arff").info("具名日志")
    assert "具名日志" in capsys.readouterr().err


def test_exception_logging(capsys):
    """测试异常日志"""
    log_manager.setup_logger(force=True, log_level="ERROR")
    try:
        1 / 0
    except ZeroDivisionError:
        logger.exception("测试异常日志记录")
    err = capsys.readouterr().err
    assert "测试异常日志记录" in err
    assert "ZeroDivisionError" in err


def test_file_sink(tmp_path):
    log_manager.setup_logger(force=True, log_level="INFO", log_to_file=True, log_dir=str(tmp_path))
    logger.info("写入文件")
    logger.error("写入错误文件")
    logger.complete()
    error = next(tmp_path.glob("error_*.log"))
    regular = next(p for p in tmp_path.glob("*.log") if p != error)
    assert "写入文件" in regular.read_text(encoding="utf-8")
    assert "写入错误文件" in regular.read_text(encoding="utf-8")
    assert "| INFO " not in error.read_text(encoding="utf-8")
    assert "写入错误文件" in error.read_text(encoding="utf-8")


def test_init_logging_keeps_existing_configuration(capsys):
    log_manager.setup_logger(force=True, log_level="WARNING")
    init_logging(log_level="DEBUG")
    logger.info("不应输出")
    assert "不应输出" not in capsys.readouterr().err


def test_log_config_defaults():
    """测试日志管理器"""
    config = log_manager.get_log_config()
    assert config["log_to_file"] is False
    assert config["log_level"] in ("WARNING", "DEBUG")


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("EDUTREE_LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("EDUTREE_LOG_TO_FILE", "true")
    monkeypatch.setenv("edutree_debug", "true")
    configured = Settings(_env_file=None)
    assert configured.LOG_LEVEL == "DEBUG"
    assert configured.LOG_TO_FILE is True
    assert configured.DEBUG is False


def test_settings_reject_unknown_level(monkeypatch):
    monkeypatch.setenv("EDUTREE_LOG_LEVEL", "chatty")
    with pytest.raises(ValidationError, match="unknown log level 'chatty'"):
        Settings(_env_file=None)
