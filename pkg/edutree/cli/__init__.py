from .commands import cli, cmd_compare, cmd_predict, cmd_rules, cmd_train, main
from .group import ToolkitGroup

__all__ = ["cli", "main", "ToolkitGroup", "cmd_compare", "cmd_predict", "cmd_rules", "cmd_train"]
