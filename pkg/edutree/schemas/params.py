from pydantic import BaseModel, ConfigDict, Field


class LearnerParams(BaseModel):
    """学习器超参数，默认值即参考运行所用的配置"""

    model_config = ConfigDict(frozen=True)

    min_leaf: int = Field(2, ge=1, description="叶节点最少实例数")
    confidence_factor: float = Field(0.25, gt=0.0, lt=1.0, description="C4.5 悲观剪枝置信因子")
    cc_folds: int = Field(5, ge=2, description="CART 代价复杂度剪枝的内部交叉验证折数")
    one_se: bool = Field(False, description="CART 剪枝用 1-SE 规则；默认取内部交叉验证风险最小的子树")
    seed: int = Field(1, ge=0, le=2**64 - 1, description="随机种子")
    pruning: bool = Field(True, description="是否剪枝")
