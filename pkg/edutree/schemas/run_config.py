from typing import Any, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from edutree.core.codes import EMBEDDED_SENTINEL
from edutree.core.exceptions import ConfigError
from edutree.models.enums import Algorithm, ReportFormat, Subcommand
from edutree.schemas.params import LearnerParams


class RunConfig(BaseModel):
    """一次命令行运行的完整配置"""

    model_config = ConfigDict(frozen=True, protected_namespaces=())

    subcommand: Subcommand = Field(..., description="子命令")
    data_path: str = Field(EMBEDDED_SENTINEL, description="数据文件路径或 @embedded")
    algorithms: Tuple[Algorithm, ...] = Field(tuple(Algorithm), min_length=1, description="算法子集")
    k: int = Field(10, ge=2, description="交叉验证折数")
    seed: int = Field(1, ge=0, le=2**64 - 1, description="随机种子")
    pruning: bool = Field(True, description="是否剪枝")
    output: str = Field("-", description="输出路径，- 表示 stdout")
    format: ReportFormat = Field(ReportFormat.TEXT, description="输出格式")
    model_path: Optional[str] = Field(None, description="predict 使用的序列化模型")
    merge_siblings: bool = Field(False, description="规则渲染时合并同标签的相邻兄弟分支")

    @field_validator("algorithms")
    @classmethod
    def normalize_algorithms(cls, v: Tuple[Algorithm, ...]) -> Tuple[Algorithm, ...]:
        # 去重并固定为 id3, c45, cart 的输出顺序
        order = list(Algorithm)
        return tuple(sorted(set(v), key=order.index))

    @model_validator(mode="after")
    def validate_combination(self) -> "RunConfig":
        if self.format == ReportFormat.SVG and self.subcommand != Subcommand.COMPARE:
            raise ValueError("format 'svg' is only available for compare")
        if self.subcommand == Subcommand.PREDICT and not self.model_path:
            raise ValueError("predict requires --model")
        if self.subcommand in (Subcommand.TRAIN, Subcommand.RULES) and len(self.algorithms) != 1:
            raise ValueError(f"{self.subcommand} takes exactly one algorithm")
        return self

    @property
    def is_embedded(self) -> bool:
        return self.data_path == EMBEDDED_SENTINEL

    @property
    def algorithm(self) -> Algorithm:
        return self.algorithms[0]

    def learner_params(self) -> LearnerParams:
        return LearnerParams(seed=self.seed, pruning=self.pruning)


def build_run_config(**kwargs: Any) -> RunConfig:
    """
    构造 RunConfig，校验失败转换为带字段信息的 ConfigError

    Raises:
        ConfigError: 任一字段无效
    """
    try:
        return RunConfig(**kwargs)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(p) for p in first.get("loc", ())) or "config"
        raise ConfigError(f"invalid {field}: {first.get('msg')}", data={"errors": e.errors(include_url=False)})
