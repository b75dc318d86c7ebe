"""
属性选择度量：信息增益（ID3）、增益率（C4.5）、基尼指数（CART）

熵以 2 为底，约定 0·log 0 = 0。表级函数（*_from_table）直接作用于 值 × 类别 的计数表，
学习器在每个节点上复用它们；数据集级函数负责名称解析与前置条件检查。
"""

from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.special import entr

from edutree.core.codes import TIE_TOLERANCE
from edutree.core.exceptions import DomainError, UnsupportedMissingError
from edutree.models.counts import ClassCounts
from edutree.models.dataset import AttributeSpec, Dataset
from edutree.models.enums import Criterion

CountsLike = Union[ClassCounts, Sequence[int], np.ndarray]

_LN2 = np.log(2.0)


class SplitStatistics(BaseModel):
    """一个候选划分的度量值"""

    model_config = ConfigDict(frozen=True)

    attribute: str
    criterion: Criterion
    value: Optional[float] = Field(..., description="度量值；增益率不可用时为 None")
    partition: Tuple[Tuple[str, ...], ...] = Field(..., description="各分支包含的取值")


def _as_array(counts: CountsLike) -> np.ndarray:
    if isinstance(counts, ClassCounts):
        return counts.as_array()
    return np.asarray(counts, dtype=float)


def entropy(counts: CountsLike) -> float:
    """类别分布的香农熵（bit），总数为 0 时返回 0"""
    c = _as_array(counts)
    total = c.sum()
    if total <= 0:
        return 0.0
    return float(entr(c / total).sum() / _LN2)


def gini(counts: CountsLike) -> float:
    """1 - Σ p²，总数为 0 时返回 0"""
    c = _as_array(counts)
    total = c.sum()
    if total <= 0:
        return 0.0
    p = c / total
    return float(1.0 - np.dot(p, p))


def table_of(codes: np.ndarray, y: np.ndarray, n_values: int, n_classes: int) -> np.ndarray:
    """值下标与类别下标 -> n_values × n_classes 计数表"""
    flat = np.bincount(codes.astype(int) * n_classes + y.astype(int), minlength=n_values * n_classes)
    return flat.reshape(n_values, n_classes)


def gain_from_table(table: np.ndarray) -> float:
    n = table.sum()
    if n <= 0:
        return 0.0
    children = sum(row.sum() / n * entropy(row) for row in table if row.sum() > 0)
    return entropy(table.sum(axis=0)) - children


def split_info_from_table(table: np.ndarray) -> float:
    return entropy(table.sum(axis=1))


def gain_ratio_from_table(table: np.ndarray) -> Optional[float]:
    """split info 为 0 时返回 None（不作为候选）"""
    si = split_info_from_table(table)
    if si <= TIE_TOLERANCE:
        return None
    return gain_from_table(table) / si


def gini_decrease_from_table(table: np.ndarray) -> float:
    """父节点基尼值减去各分支按样本数加权的基尼值"""
    n = table.sum()
    if n <= 0:
        return 0.0
    children = sum(row.sum() / n * gini(row) for row in table if row.sum() > 0)
    return gini(table.sum(axis=0)) - children


def _nominal_column(dataset: Dataset, attribute: str) -> Tuple[AttributeSpec, np.ndarray, np.ndarray]:
    header = dataset.header
    j = header.index_of(attribute)
    if j == header.class_index:
        raise DomainError(f"attribute '{attribute}' is the class attribute")
    spec = header.attributes[j]
    if not spec.is_nominal:
        raise DomainError(f"attribute '{attribute}' is numeric")
    X, y = dataset.to_arrays()
    column = X[:, j]
    if np.isnan(column).any() or (y < 0).any():
        raise UnsupportedMissingError(f"missing values in '{attribute}' or the class column")
    return spec, column.astype(int), y


def contingency_table(dataset: Dataset, attribute: str) -> np.ndarray:
    """名义属性的 值 × 类别 计数表，行按声明顺序"""
    spec, codes, y = _nominal_column(dataset, attribute)
    return table_of(codes, y, len(spec.values), dataset.header.n_classes)


def information_gain(dataset: Dataset, attribute: str) -> float:
    return gain_from_table(contingency_table(dataset, attribute))


def split_info(dataset: Dataset, attribute: str) -> float:
    return split_info_from_table(contingency_table(dataset, attribute))


def gain_ratio(dataset: Dataset, attribute: str) -> Optional[float]:
    return gain_ratio_from_table(contingency_table(dataset, attribute))


def _binary_table(table: np.ndarray, left_rows: Sequence[int]) -> np.ndarray:
    mask = np.zeros(table.shape[0], dtype=bool)
    mask[list(left_rows)] = True
    return np.vstack([table[mask].sum(axis=0), table[~mask].sum(axis=0)])


def binary_gini_decrease(dataset: Dataset, attribute: str, left_subset: Sequence[str]) -> float:
    """
    二分划分的基尼下降，左分支为取值属于 left_subset 的实例

    Raises:
        DomainError: left_subset 不是已出现取值的非空真子集
    """
    table = contingency_table(dataset, attribute)
    spec = dataset.header.attribute(attribute)
    left_rows = sorted({spec.index_of(v) for v in left_subset})
    observed = {i for i in range(table.shape[0]) if table[i].sum() > 0}
    if not observed & set(left_rows) or not observed - set(left_rows):
        raise DomainError(f"left subset for '{attribute}' must be a proper non-empty subset of observed values")
    return gini_decrease_from_table(_binary_table(table, left_rows))


def enumerate_binary_partitions(attribute: AttributeSpec, values: Optional[Sequence[str]] = None) -> List[Tuple[str, ...]]:
    """
    规范化的二分子集：每个子集都包含第一个取值，共 2^(K-1) - 1 个

    Args:
        attribute: 名义属性
        values: 参与划分的取值（默认全部声明值），按声明顺序
    """
    if not attribute.is_nominal:
        raise DomainError(f"attribute '{attribute.name}' is numeric")
    pool = tuple(attribute.values if values is None else values)
    k = len(pool)
    if k < 2:
        return []
    first, rest = pool[0], pool[1:]
    subsets = []
    for mask in range(2 ** (k - 1) - 1):
        subsets.append((first, *(v for i, v in enumerate(rest) if mask >> i & 1)))
    return subsets


def numeric_thresholds(values: np.ndarray, y: np.ndarray) -> List[float]:
    """
    类别边界处的候选阈值（≤ 语义，取观测值本身）

    相邻两个不同取值只要不是同属唯一的同一类别，较小者就是候选。
    """
    distinct = np.unique(values)
    if distinct.size < 2:
        return []
    class_sets = [frozenset(np.unique(y[values == v]).tolist()) for v in distinct]
    thresholds = []
    for i in range(distinct.size - 1):
        a, b = class_sets[i], class_sets[i + 1]
        if len(a) > 1 or len(b) > 1 or a != b:
            thresholds.append(float(distinct[i]))
    return thresholds


def best_split_statistics(dataset: Dataset, attribute: str, criterion: Criterion) -> SplitStatistics:
    """名义属性在给定准则下的度量；基尼准则取最优二分子集"""
    spec = dataset.header.attribute(attribute)
    table = contingency_table(dataset, attribute)
    if criterion == Criterion.INFORMATION_GAIN:
        return SplitStatistics(
            attribute=attribute, criterion=criterion, value=gain_from_table(table), partition=tuple((v,) for v in spec.values)
        )
    if criterion == Criterion.GAIN_RATIO:
        return SplitStatistics(
            attribute=attribute,
            criterion=criterion,
            value=gain_ratio_from_table(table),
            partition=tuple((v,) for v in spec.values),
        )

    observed = [v for i, v in enumerate(spec.values) if table[i].sum() > 0]
    best_value, best_partition = 0.0, (tuple(observed),)
    for subset in enumerate_binary_partitions(spec, observed):
        rows = [spec.index_of(v) for v in subset]
        value = gini_decrease_from_table(_binary_table(table, rows))
        if value > best_value + TIE_TOLERANCE:
            rest = tuple(v for v in spec.values if v not in subset)
            best_value, best_partition = value, (subset, rest)
    return SplitStatistics(attribute=attribute, criterion=criterion, value=best_value, partition=best_partition)
