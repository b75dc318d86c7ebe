"""
C4.5：按增益率选择属性；名义属性多路划分，数值属性在类别边界处二分

候选属性须满足 gain > 0 且 split info > 0；不使用平均增益过滤。
名义属性在路径上只用一次，数值属性可以在更深处重复使用。
"""

from typing import List, Optional, Set, Tuple

import numpy as np

from edutree.algorithms.pruning import prune_pessimistic_node
from edutree.algorithms.split_metrics import (
    gain_from_table,
    numeric_thresholds,
    split_info_from_table,
    table_of,
)
from edutree.core.codes import TIE_TOLERANCE
from edutree.core.learner import TreeLearner, majority_index, make_leaf
from edutree.models.dataset import Dataset, Schema
from edutree.models.enums import Algorithm
from edutree.models.tree import Leaf, MultiwaySplit, ThresholdSplit, TreeNode
from edutree.schemas.params import LearnerParams
from edutree.utils.log_control import logger


class C45Learner(TreeLearner):
    algorithm = Algorithm.C45

    def grow(self, header: Schema, X: np.ndarray, y: np.ndarray, params: LearnerParams) -> TreeNode:
        rows = np.arange(len(y))
        nominal = {j for j in header.predictor_indices if header.attributes[j].is_nominal}
        return self._grow(header, X, y, rows, nominal, params.min_leaf)

    def _ratio(self, table: np.ndarray) -> Optional[float]:
        gain = gain_from_table(table)
        si = split_info_from_table(table)
        if gain <= TIE_TOLERANCE or si <= TIE_TOLERANCE:
            return None
        return gain / si

    def _best_split(
        self, header: Schema, X: np.ndarray, y: np.ndarray, rows: np.ndarray, nominal: Set[int], min_leaf: int
    ) -> Tuple[Optional[int], Optional[float], float]:
        """返回 (属性下标, 阈值或 None, 增益率)"""
        n_classes = header.n_classes
        best: Tuple[Optional[int], Optional[float], float] = (None, None, 0.0)
        for j in header.predictor_indices:
            spec = header.attributes[j]
            if spec.is_nominal:
                if j not in nominal:
                    continue
                table = table_of(X[rows, j], y[rows], len(spec.values), n_classes)
                if np.count_nonzero(table.sum(axis=1) >= min_leaf) < 2:
                    continue
                ratio = self._ratio(table)
                if ratio is not None and ratio > best[2] + TIE_TOLERANCE:
                    best = (j, None, ratio)
                continue

            column = X[rows, j]
            for t in numeric_thresholds(column, y[rows]):
                left = column <= t
                n_left = int(left.sum())
                if n_left < min_leaf or len(rows) - n_left < min_leaf:
                    continue
                ratio = self._ratio(table_of(np.where(left, 0, 1), y[rows], 2, n_classes))
                if ratio is not None and ratio > best[2] + TIE_TOLERANCE:
                    best = (j, t, ratio)
        return best

    def _grow(
        self, header: Schema, X: np.ndarray, y: np.ndarray, rows: np.ndarray, nominal: Set[int], min_leaf: int
    ) -> TreeNode:
        counts = np.bincount(y[rows], minlength=header.n_classes)
        if np.count_nonzero(counts) <= 1 or len(rows) < 2 * min_leaf:
            return make_leaf(counts, header.class_values)

        j, threshold, ratio = self._best_split(header, X, y, rows, nominal, min_leaf)
        if j is None:
            return make_leaf(counts, header.class_values)

        spec = header.attributes[j]
        counts_t = tuple(int(c) for c in counts)
        if threshold is not None:
            logger.debug("C4.5 分裂属性 {} <= {} (gain_ratio={:.4f}, n={})", spec.name, threshold, ratio, len(rows))
            column = X[rows, j]
            children = (
                self._grow(header, X, y, rows[column <= threshold], nominal, min_leaf),
                self._grow(header, X, y, rows[column > threshold], nominal, min_leaf),
            )
            return ThresholdSplit(attribute=spec.name, threshold=threshold, children=children, counts=counts_t)

        logger.debug("C4.5 分裂属性 {} (gain_ratio={:.4f}, n={})", spec.name, ratio, len(rows))
        parent_label = majority_index(counts)
        remaining = nominal - {j}
        column = X[rows, j].astype(int)
        branches: List[TreeNode] = []
        for v in range(len(spec.values)):
            sub = rows[column == v]
            if sub.size == 0:
                # 空分支沿用父节点多数类
                branches.append(Leaf(label=header.class_values[parent_label], counts=(0,) * header.n_classes))
            elif sub.size < min_leaf:
                branches.append(make_leaf(np.bincount(y[sub], minlength=header.n_classes), header.class_values))
            else:
                branches.append(self._grow(header, X, y, sub, remaining, min_leaf))
        return MultiwaySplit(attribute=spec.name, children=tuple(branches), counts=counts_t)

    def prune(self, root: TreeNode, dataset: Dataset, params: LearnerParams) -> TreeNode:
        return prune_pessimistic_node(root, dataset.header, params.confidence_factor)


c45_learner = C45Learner()


def build_c45(dataset: Dataset, params: Optional[LearnerParams] = None) -> TreeNode:
    return c45_learner.build(dataset, params)
