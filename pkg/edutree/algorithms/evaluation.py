"""
分层 k 折交叉验证、混淆矩阵与逐类精确率

(实际, 预测) 对按折的顺序累积，因此各折并发计算时结果与顺序计算完全一致。
"""

from collections import Counter
from time import perf_counter
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sklearn.metrics import confusion_matrix, precision_recall_fscore_support

from edutree.algorithms.folds import stratified_folds
from edutree.algorithms.learners import get_learner, train
from edutree.algorithms.predict import predict_dataset
from edutree.core.exceptions import DomainError
from edutree.models.dataset import Dataset
from edutree.models.enums import Algorithm
from edutree.models.tree import Prediction
from edutree.schemas.params import LearnerParams
from edutree.schemas.reports import ConfusionMatrix, EvaluationReport
from edutree.utils.log_control import logger

Pair = Tuple[str, Prediction]


def confusion_from_pairs(pairs: Sequence[Pair], labels: Sequence[str]) -> ConfusionMatrix:
    """
    汇总 (实际, 预测) 对；unclassified 单独按实际类别计数

    Raises:
        DomainError: 实际或预测标签不在 labels 中
    """
    declared = set(labels)
    actual: List[str] = []
    predicted: List[str] = []
    unclassified = Counter()
    for truth, prediction in pairs:
        if truth not in declared:
            raise DomainError(f"actual label '{truth}' is not a declared class")
        if not prediction.is_classified:
            unclassified[truth] += 1
            continue
        if prediction.label not in declared:
            raise DomainError(f"predicted label '{prediction.label}' is not a declared class")
        actual.append(truth)
        predicted.append(prediction.label)

    if actual:
        cells = confusion_matrix(actual, predicted, labels=list(labels))
    else:
        cells = np.zeros((len(labels), len(labels)), dtype=int)
    return ConfusionMatrix(
        labels=tuple(labels),
        cells=tuple(tuple(int(c) for c in row) for row in cells),
        unclassified_per_actual=tuple(unclassified[label] for label in labels),
    )


def precision_per_class(matrix: ConfusionMatrix) -> Tuple[Optional[float], ...]:
    """对角元 / 预测列之和，百分比保留 1 位小数；预测列为空时为 None"""
    if matrix.classified == 0:
        return (None,) * len(matrix.labels)
    # 把计数表展开回 (实际, 预测) 下标对
    cells = np.asarray(matrix.cells)
    rows, cols = np.indices(cells.shape)
    actual = np.repeat(rows.ravel(), cells.ravel())
    predicted = np.repeat(cols.ravel(), cells.ravel())
    precision, _, _, _ = precision_recall_fscore_support(
        actual, predicted, labels=list(range(len(matrix.labels))), average=None, zero_division=np.nan
    )
    return tuple(None if np.isnan(p) else round(100.0 * float(p), 1) for p in precision)


def evaluate_fold(
    algorithm: Algorithm, dataset: Dataset, train_rows: Sequence[int], test_rows: Sequence[int], params: LearnerParams
) -> List[Pair]:
    """在补集上训练、在本折上预测"""
    tree = train(algorithm, dataset.subset(train_rows), params)
    test = dataset.subset(test_rows)
    return [(test.label_of(inst), p) for inst, p in zip(test.instances, predict_dataset(tree, test))]


def measure_build_time(algorithm: Algorithm, dataset: Dataset, params: LearnerParams) -> float:
    """全量数据训练一次的墙钟时间（秒，毫秒精度）"""
    start = perf_counter()
    train(algorithm, dataset, params)
    return round(perf_counter() - start, 3)


def build_report(
    algorithm: Algorithm, dataset: Dataset, pairs: Sequence[Pair], build_time: float, k: int, seed: int
) -> EvaluationReport:
    matrix = confusion_from_pairs(pairs, dataset.header.class_values)
    n = matrix.total
    if n == 0:
        raise DomainError("cannot report on an evaluation with no instances")
    correct = matrix.correct
    unclassified = matrix.unclassified
    incorrect = n - correct - unclassified
    return EvaluationReport(
        algorithm=algorithm,
        matrix=matrix,
        n_instances=n,
        correct=correct,
        incorrect=incorrect,
        unclassified=unclassified,
        correct_pct=100.0 * correct / n,
        incorrect_pct=100.0 * incorrect / n,
        unclassified_pct=100.0 * unclassified / n,
        per_class_precision=precision_per_class(matrix),
        build_time_seconds=build_time,
        k=k,
        seed=seed,
    )


def cross_validate(
    algorithm: Algorithm,
    dataset: Dataset,
    params: Optional[LearnerParams] = None,
    k: int = 10,
    seed: int = 1,
) -> EvaluationReport:
    """
    分层 k 折交叉验证

    Args:
        algorithm: id3 | c45 | cart
        dataset: 评估数据
        params: 学习器参数
        k: 折数，2 <= k <= |dataset|
        seed: 划分种子

    Raises:
        DomainError: 空数据集或 k 越界
    """
    algorithm = get_learner(algorithm).algorithm
    params = params or LearnerParams()
    if len(dataset) == 0:
        raise DomainError("cannot evaluate an empty dataset")
    folds = stratified_folds(dataset, k, seed)
    pairs: List[Pair] = []
    for f in range(k):
        pairs.extend(evaluate_fold(algorithm, dataset, folds.train_indices(f), folds.test_indices(f), params))
        logger.debug("{} 第 {}/{} 折完成", algorithm, f + 1, k)

    build_time = measure_build_time(algorithm, dataset, params)
    report = build_report(algorithm, dataset, pairs, build_time, k, seed)
    logger.info(
        "{} 交叉验证: correct={:.4f}% incorrect={:.4f}% unclassified={:.4f}%",
        algorithm,
        report.correct_pct,
        report.incorrect_pct,
        report.unclassified_pct,
    )
    return report
