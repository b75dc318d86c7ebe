"""
决策树文档模型

节点是带 kind 判别字段的不可变 pydantic 模型，字段名固定（kind, attribute, threshold/subset,
children, label, counts），可直接序列化为结构化文档并原样读回。
"""

from typing import Annotated, Iterator, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from edutree.models.dataset import Schema
from edutree.models.enums import Algorithm, NodeKind
from edutree.schemas.params import LearnerParams


class _NodeBase(BaseModel):
    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...] = Field(default=(), description="到达该节点的训练实例类别计数")

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def is_leaf(self) -> bool:
        return False


class Leaf(_NodeBase):
    kind: Literal[NodeKind.LEAF] = NodeKind.LEAF
    label: str = Field(..., description="类别标签")

    @property
    def is_leaf(self) -> bool:
        return True


class EmptyLeaf(_NodeBase):
    """训练时没有实例到达的分支，预测为 unclassified"""

    kind: Literal[NodeKind.EMPTY] = NodeKind.EMPTY

    @property
    def is_leaf(self) -> bool:
        return True


class MultiwaySplit(_NodeBase):
    kind: Literal[NodeKind.MULTIWAY] = NodeKind.MULTIWAY
    attribute: str
    children: Tuple["TreeNode", ...] = Field(..., min_length=1, description="每个声明取值一个子节点")


class SubsetSplit(_NodeBase):
    kind: Literal[NodeKind.SUBSET] = NodeKind.SUBSET
    attribute: str
    subset: Tuple[str, ...] = Field(..., min_length=1, description="走左分支的取值")
    children: Tuple["TreeNode", "TreeNode"]


class ThresholdSplit(_NodeBase):
    kind: Literal[NodeKind.THRESHOLD] = NodeKind.THRESHOLD
    attribute: str
    threshold: float = Field(..., description="≤ 阈值走左分支")
    children: Tuple["TreeNode", "TreeNode"]


TreeNode = Annotated[
    Union[Leaf, EmptyLeaf, MultiwaySplit, SubsetSplit, ThresholdSplit],
    Field(discriminator="kind"),
]

MultiwaySplit.model_rebuild()
SubsetSplit.model_rebuild()
ThresholdSplit.model_rebuild()


class DecisionTree(BaseModel):
    """训练好的模型：根节点 + 训练模式 + 算法与参数"""

    model_config = ConfigDict(frozen=True)

    algorithm: Algorithm
    header: Schema
    params: LearnerParams = Field(default_factory=LearnerParams)
    root: TreeNode

    def nodes(self) -> Iterator[TreeNode]:
        return iter_nodes(self.root)

    @property
    def node_count(self) -> int:
        return sum(1 for _ in self.nodes())

    @property
    def leaf_count(self) -> int:
        return sum(1 for node in self.nodes() if node.is_leaf)

    @property
    def depth(self) -> int:
        return node_depth(self.root)


def iter_nodes(node: TreeNode) -> Iterator[TreeNode]:
    """先序遍历"""
    yield node
    for child in getattr(node, "children", ()):
        yield from iter_nodes(child)


def node_depth(node: TreeNode) -> int:
    children: Optional[Tuple] = getattr(node, "children", None)
    if not children:
        return 0
    return 1 + max(node_depth(c) for c in children)


def leaves_with_depth(node: TreeNode, depth: int = 0) -> List[Tuple[TreeNode, int]]:
    if node.is_leaf:
        return [(node, depth)]
    out: List[Tuple[TreeNode, int]] = []
    for child in node.children:
        out.extend(leaves_with_depth(child, depth + 1))
    return out


class Prediction(BaseModel):
    """预测结果：label 为 None 表示 unclassified，此时不带分布"""

    model_config = ConfigDict(frozen=True)

    label: Optional[str] = Field(None, description="预测类别，None 表示 unclassified")
    distribution: Tuple[float, ...] = Field(default=(), description="按类别声明顺序的概率")

    @model_validator(mode="after")
    def validate_prediction(self) -> "Prediction":
        if self.label is None and self.distribution:
            raise ValueError("unclassified prediction carries no distribution")
        if self.label is not None and abs(sum(self.distribution) - 1.0) > 1e-9:
            raise ValueError("distribution must sum to 1")
        return self

    @property
    def is_classified(self) -> bool:
        return self.label is not None

    @classmethod
    def unclassified(cls) -> "Prediction":
        return cls()
