"""
CART：按基尼下降选择二分划分

名义属性枚举已出现取值的规范二分子集，不在左子集中的取值（包括该节点未出现的取值）走右分支；
数值属性在类别边界处按 ≤ 阈值二分。属性可在任意深度重复使用。
"""

from typing import Optional, Tuple

import numpy as np

from edutree.algorithms.pruning import prune_cost_complexity_node
from edutree.algorithms.split_metrics import (
    enumerate_binary_partitions,
    gini_decrease_from_table,
    numeric_thresholds,
    table_of,
)
from edutree.core.codes import TIE_TOLERANCE
from edutree.core.learner import TreeLearner, make_leaf
from edutree.models.dataset import Dataset, Schema
from edutree.models.enums import Algorithm
from edutree.models.tree import SubsetSplit, ThresholdSplit, TreeNode
from edutree.schemas.params import LearnerParams
from edutree.utils.log_control import logger

# (属性下标, 左子集下标或 None, 阈值或 None, 基尼下降)
_Candidate = Tuple[Optional[int], Optional[Tuple[int, ...]], Optional[float], float]


class CARTLearner(TreeLearner):
    algorithm = Algorithm.CART

    def grow(self, header: Schema, X: np.ndarray, y: np.ndarray, params: LearnerParams) -> TreeNode:
        return self._grow(header, X, y, np.arange(len(y)), params.min_leaf)

    def _best_split(self, header: Schema, X: np.ndarray, y: np.ndarray, rows: np.ndarray, min_leaf: int) -> _Candidate:
        n_classes = header.n_classes
        best: _Candidate = (None, None, None, 0.0)
        for j in header.predictor_indices:
            spec = header.attributes[j]
            column = X[rows, j]
            if spec.is_nominal:
                codes = column.astype(int)
                observed = [spec.values[v] for v in np.unique(codes)]
                for subset in enumerate_binary_partitions(spec, observed):
                    left_codes = tuple(spec.index_of(v) for v in subset)
                    left = np.isin(codes, left_codes)
                    n_left = int(left.sum())
                    if n_left < min_leaf or len(rows) - n_left < min_leaf:
                        continue
                    decrease = gini_decrease_from_table(table_of(np.where(left, 0, 1), y[rows], 2, n_classes))
                    if decrease > best[3] + TIE_TOLERANCE:
                        best = (j, left_codes, None, decrease)
                continue

            for t in numeric_thresholds(column, y[rows]):
                left = column <= t
                n_left = int(left.sum())
                if n_left < min_leaf or len(rows) - n_left < min_leaf:
                    continue
                decrease = gini_decrease_from_table(table_of(np.where(left, 0, 1), y[rows], 2, n_classes))
                if decrease > best[3] + TIE_TOLERANCE:
                    best = (j, None, t, decrease)
        return best

    def _grow(self, header: Schema, X: np.ndarray, y: np.ndarray, rows: np.ndarray, min_leaf: int) -> TreeNode:
        counts = np.bincount(y[rows], minlength=header.n_classes)
        if np.count_nonzero(counts) <= 1 or len(rows) < 2 * min_leaf:
            return make_leaf(counts, header.class_values)

        j, left_codes, threshold, decrease = self._best_split(header, X, y, rows, min_leaf)
        if j is None:
            return make_leaf(counts, header.class_values)

        spec = header.attributes[j]
        column = X[rows, j]
        counts_t = tuple(int(c) for c in counts)
        if threshold is not None:
            logger.debug("CART 分裂属性 {} <= {} (gini_decrease={:.4f}, n={})", spec.name, threshold, decrease, len(rows))
            left = column <= threshold
            children = (
                self._grow(header, X, y, rows[left], min_leaf),
                self._grow(header, X, y, rows[~left], min_leaf),
            )
            return ThresholdSplit(attribute=spec.name, threshold=threshold, children=children, counts=counts_t)

        subset = tuple(spec.values[v] for v in left_codes)
        logger.debug("CART 分裂属性 {} IN {} (gini_decrease={:.4f}, n={})", spec.name, subset, decrease, len(rows))
        left = np.isin(column.astype(int), left_codes)
        children = (
            self._grow(header, X, y, rows[left], min_leaf),
            self._grow(header, X, y, rows[~left], min_leaf),
        )
        return SubsetSplit(attribute=spec.name, subset=subset, children=children, counts=counts_t)

    def prune(self, root: TreeNode, dataset: Dataset, params: LearnerParams) -> TreeNode:
        return prune_cost_complexity_node(root, dataset, params, grow=self.grow_unpruned)

    def grow_unpruned(self, dataset: Dataset, params: LearnerParams) -> TreeNode:
        X, y = self.prepare(dataset)
        return self.grow(dataset.header, X, y, params)


cart_learner = CARTLearner()


def build_cart(dataset: Dataset, params: Optional[LearnerParams] = None) -> TreeNode:
    return cart_learner.build(dataset, params)
