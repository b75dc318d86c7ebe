from pathlib import Path

from pydantic import Field, computed_field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# loguru 内置级别
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """
    命令行与库的运行配置

    来源依次为 .env 文件与 EDUTREE_ 前缀的环境变量。只影响诊断输出（日志级别与日志文件），
    不影响学习器默认值、折划分或任何数据输出。
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="EDUTREE_",
        case_sensitive=True,
        extra="ignore",
    )

    APP_ENV: str = Field(default="development", description="运行环境 development | production")
    VERSION: str = Field(default="0.1.0", description="版本号，--version 输出")
    APP_TITLE: str = Field(default="edutree", description="程序名")
    DEBUG: bool = Field(default=False, description="调试模式，日志级别强制为 DEBUG")

    LOG_LEVEL: str = Field(default="WARNING", description="stderr 日志级别，默认只输出警告以上")
    LOG_TO_FILE: bool = Field(default=False, description="是否另写日志文件")
    LOGS_ROOT: Path = Field(default=Path("logs"), description="日志目录，相对路径按当前工作目录解析")
    LOG_RETENTION_DAYS: int = Field(default=7, ge=1, description="日志保留天数")
    LOG_ROTATION: str = Field(default="1 day", description="日志轮转条件，loguru rotation 语法")

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level '{v}', expected one of {', '.join(LOG_LEVELS)}")
        return level

    @computed_field
    @property
    def logs_path(self) -> Path:
        """日志目录（只在写日志文件时才创建）"""
        return self.LOGS_ROOT if self.LOGS_ROOT.is_absolute() else Path.cwd() / self.LOGS_ROOT

    @computed_field
    @property
    def is_production(self) -> bool:
        return self.APP_ENV.lower() == "production"

    def __repr__(self) -> str:
        return f"<Settings env={self.APP_ENV} debug={self.DEBUG} log_level={self.LOG_LEVEL}>"


settings = Settings()
