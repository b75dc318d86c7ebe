"""
edutree：ID3 / C4.5 / CART 决策树工具包

作为库使用时日志默认关闭，命令行入口会重新启用。
"""

from loguru import logger

from edutree.settings import settings

__version__ = settings.VERSION

logger.disable("edutree")
