import sys
from typing import Any, Optional, Sequence

import click

from edutree.core.codes import EXIT_CONFIG, EXIT_OK
from edutree.core.exceptions import ParseError, ToolkitError, exit_code_for
from edutree.io.arff import format_diagnostics
from edutree.utils.log_control import logger


def report_failure(exc: BaseException) -> int:
    """把异常写到 stderr 并返回退出码"""
    code = exit_code_for(exc)
    if isinstance(exc, ParseError):
        click.echo(format_diagnostics(exc.diagnostics).rstrip("\n"), err=True)
    message = exc.detail if isinstance(exc, ToolkitError) else str(exc)
    click.echo(f"edutree: error: {message}", err=True)
    logger.opt(exception=exc).debug("命令失败，退出码 {}", code)
    return code


class ToolkitGroup(click.Group):
    """
    click 命令组，统一异常到退出码的映射

    0 成功，1 用法或配置错误，2 数据错误；click 自身的用法错误也归为 1。
    """

    def main(
        self,
        args: Optional[Sequence[str]] = None,
        prog_name: Optional[str] = None,
        complete_var: Optional[str] = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        try:
            rv = super().main(
                args=args, prog_name=prog_name, complete_var=complete_var, standalone_mode=False, **extra
            )
            code = rv if isinstance(rv, int) else EXIT_OK
        except click.ClickException as e:
            e.show()
            code = EXIT_CONFIG
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_CONFIG
        except (ToolkitError, OSError, UnicodeDecodeError) as e:
            code = report_failure(e)

        if not standalone_mode:
            return code
        sys.exit(code)
