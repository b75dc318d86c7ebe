import numpy as np

from edutree.core.exceptions import DataError, DomainError
from edutree.models.dataset import Dataset
from edutree.schemas.reports import FoldAssignment


def canonical_rank(dataset: Dataset) -> np.ndarray:
    """按属性值（缺失排最后）给每个实例排名；相同实例按原位置，互换不影响任何结果"""
    X, _ = dataset.to_arrays()
    order = np.lexsort(X.T[::-1]) if len(dataset) else np.arange(0)
    rank = np.empty(len(dataset), dtype=int)
    rank[order] = np.arange(len(dataset))
    return rank


def stratified_folds(dataset: Dataset, k: int, seed: int) -> FoldAssignment:
    """
    分层 k 折划分

    每个类别的实例先按 canonical_rank 排好，再用 PCG64（numpy default_rng）按种子打乱，
    最后按类别声明顺序轮转分配。因此划分只取决于实例的多重集合，与行的顺序无关；
    轮转计数跨类别连续，所以各折大小与各类别在各折中的计数都至多相差 1。

    Raises:
        DomainError: k 不在 [2, |dataset|] 内
        DataError: 存在缺失的类别值
    """
    n = len(dataset)
    if k < 2 or k > n:
        raise DomainError(f"k must be in [2, {n}], got {k}")
    y = dataset.class_codes()
    if (y < 0).any():
        raise DataError("cannot stratify instances with a missing class value")

    rank = canonical_rank(dataset)
    rng = np.random.default_rng(seed)
    fold_of = np.empty(n, dtype=int)
    position = 0
    for c in range(dataset.header.n_classes):
        members = np.flatnonzero(y == c)
        members = members[np.argsort(rank[members], kind="stable")]
        for i in members[rng.permutation(members.size)]:
            fold_of[i] = position % k
            position += 1
    return FoldAssignment(k=k, fold_of=tuple(int(f) for f in fold_of))
