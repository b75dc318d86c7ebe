from typing import Any, Dict, List, Optional

from edutree.core.codes import EXIT_CONFIG, EXIT_DATA


class ToolkitError(Exception):
    """工具包异常基类，携带退出码与额外的错误信息"""

    exit_code: int = EXIT_CONFIG

    def __init__(
        self,
        detail: Optional[str] = None,
        data: Optional[Dict[str, Any]] = None,
        exit_code: Optional[int] = None,
    ):
        super().__init__(detail)
        self.detail = detail or self.__class__.__doc__ or self.__class__.__name__
        self.data = data
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self) -> str:
        return self.detail


class DomainError(ToolkitError, ValueError):
    """参数超出定义域"""

    exit_code = EXIT_CONFIG


class ConfigError(ToolkitError):
    """运行配置无效"""

    exit_code = EXIT_CONFIG


class DataError(ToolkitError):
    """数据无效"""

    exit_code = EXIT_DATA


class UnsupportedAttributeError(DataError):
    """学习器不支持该属性类型"""


class UnsupportedMissingError(DataError):
    """学习器不支持缺失值"""


class InvariantError(ToolkitError, AssertionError):
    """内部不变量被破坏"""

    exit_code = EXIT_CONFIG


class ParseError(DataError):
    """数据文件解析失败，diagnostics 中每一项都带有行列位置"""

    def __init__(self, diagnostics: List[Any], data: Optional[Dict[str, Any]] = None):
        self.diagnostics = list(diagnostics)
        errors = [d for d in self.diagnostics if d.severity == "error"]
        head = errors[0] if errors else (self.diagnostics[0] if self.diagnostics else None)
        detail = str(head) if head is not None else "parse failed"
        if len(errors) > 1:
            detail = f"{detail} (+{len(errors) - 1} more)"
        super().__init__(detail=detail, data=data)


class ArffParseError(ParseError):
    """ARFF 解析失败"""


class CsvParseError(ParseError):
    """CSV 解析失败"""


def exit_code_for(exc: BaseException) -> int:
    """按异常处理器映射表查找退出码，子类优先"""
    for exc_type in type(exc).__mro__:
        if exc_type in exception_handlers:
            return exception_handlers[exc_type](exc)
    return EXIT_CONFIG


def _toolkit_exit_code(exc: ToolkitError) -> int:
    return exc.exit_code


def _os_exit_code(exc: OSError) -> int:
    # 文件不可读属于数据错误
    return EXIT_DATA


# 异常处理器映射
exception_handlers = {
    ToolkitError: _toolkit_exit_code,
    OSError: _os_exit_code,
    UnicodeDecodeError: lambda exc: EXIT_DATA,
}
