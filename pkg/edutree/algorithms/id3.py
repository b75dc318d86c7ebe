"""
ID3：按信息增益选择属性的多路划分，只接受名义属性，不剪枝

训练时没有实例到达的取值分支成为 EmptyLeaf，预测时返回 unclassified。
"""

from typing import List, Optional

import numpy as np

from edutree.algorithms.split_metrics import gain_from_table, table_of
from edutree.core.codes import TIE_TOLERANCE
from edutree.core.learner import TreeLearner, make_leaf
from edutree.models.dataset import Dataset, Schema
from edutree.models.enums import Algorithm
from edutree.models.tree import EmptyLeaf, MultiwaySplit, TreeNode
from edutree.schemas.params import LearnerParams
from edutree.utils.log_control import logger


class ID3Learner(TreeLearner):
    algorithm = Algorithm.ID3
    allow_numeric = False

    def grow(self, header: Schema, X: np.ndarray, y: np.ndarray, params: LearnerParams) -> TreeNode:
        rows = np.arange(len(y))
        return self._grow(header, X, y, rows, list(header.predictor_indices))

    def _grow(self, header: Schema, X: np.ndarray, y: np.ndarray, rows: np.ndarray, available: List[int]) -> TreeNode:
        n_classes = header.n_classes
        counts = np.bincount(y[rows], minlength=n_classes)
        if np.count_nonzero(counts) <= 1 or not available:
            return make_leaf(counts, header.class_values)

        best_j: Optional[int] = None
        best_gain = 0.0
        for j in available:
            n_values = len(header.attributes[j].values)
            gain = gain_from_table(table_of(X[rows, j], y[rows], n_values, n_classes))
            if gain > best_gain + TIE_TOLERANCE:
                best_j, best_gain = j, gain
        if best_j is None:
            return make_leaf(counts, header.class_values)

        spec = header.attributes[best_j]
        logger.debug("ID3 分裂属性 {} (gain={:.4f}, n={})", spec.name, best_gain, len(rows))
        remaining = [j for j in available if j != best_j]
        column = X[rows, best_j].astype(int)
        children: List[TreeNode] = []
        for v in range(len(spec.values)):
            sub = rows[column == v]
            if sub.size == 0:
                children.append(EmptyLeaf(counts=(0,) * n_classes))
            else:
                children.append(self._grow(header, X, y, sub, remaining))
        return MultiwaySplit(attribute=spec.name, children=tuple(children), counts=tuple(int(c) for c in counts))

    def prune(self, root: TreeNode, dataset: Dataset, params: LearnerParams) -> TreeNode:
        # ID3 不剪枝
        return root


id3_learner = ID3Learner()


def build_id3(dataset: Dataset, params: Optional[LearnerParams] = None) -> TreeNode:
    return id3_learner.build(dataset, params)
