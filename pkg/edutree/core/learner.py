from abc import ABC, abstractmethod
from typing import Optional, Sequence, Tuple

import numpy as np

from edutree.core.exceptions import DomainError, UnsupportedAttributeError, UnsupportedMissingError
from edutree.models.dataset import Dataset, Schema
from edutree.models.enums import Algorithm
from edutree.models.tree import DecisionTree, Leaf, TreeNode
from edutree.schemas.params import LearnerParams


def majority_index(counts: np.ndarray) -> int:
    """多数类下标，并列取声明顺序最靠前者"""
    return int(np.argmax(counts))


def make_leaf(counts: np.ndarray, class_values: Sequence[str], label_index: Optional[int] = None) -> Leaf:
    if label_index is None:
        label_index = majority_index(counts)
    return Leaf(label=class_values[label_index], counts=tuple(int(c) for c in counts))


class TreeLearner(ABC):
    """决策树学习器基类：校验输入 -> 生长 -> 可选剪枝"""

    algorithm: Algorithm
    allow_numeric: bool = True

    def prepare(self, dataset: Dataset) -> Tuple[np.ndarray, np.ndarray]:
        """
        检查学习器前置条件并返回 (X, y)

        Raises:
            DomainError: 空数据集
            UnsupportedAttributeError: 学习器不支持数值属性
            UnsupportedMissingError: 存在缺失值
        """
        header = dataset.header
        if len(dataset) == 0:
            raise DomainError("cannot train on an empty dataset")
        if not self.allow_numeric:
            for j in header.predictor_indices:
                spec = header.attributes[j]
                if not spec.is_nominal:
                    raise UnsupportedAttributeError(f"{self.algorithm} does not accept numeric attribute '{spec.name}'")
        X, y = dataset.to_arrays()
        missing = np.argwhere(np.isnan(X))
        if missing.size:
            row, col = missing[0]
            raise UnsupportedMissingError(
                f"missing value at row {int(row) + 1}, attribute '{header.attributes[int(col)].name}'"
            )
        return X, y

    def build(self, dataset: Dataset, params: Optional[LearnerParams] = None) -> TreeNode:
        params = params or LearnerParams()
        X, y = self.prepare(dataset)
        root = self.grow(dataset.header, X, y, params)
        if params.pruning:
            root = self.prune(root, dataset, params)
        return root

    def fit(self, dataset: Dataset, params: Optional[LearnerParams] = None) -> DecisionTree:
        params = params or LearnerParams()
        return DecisionTree(algorithm=self.algorithm, header=dataset.header, params=params, root=self.build(dataset, params))

    @abstractmethod
    def grow(self, header: Schema, X: np.ndarray, y: np.ndarray, params: LearnerParams) -> TreeNode:
        """在全部实例上生长未剪枝的树"""

    def prune(self, root: TreeNode, dataset: Dataset, params: LearnerParams) -> TreeNode:
        return root
