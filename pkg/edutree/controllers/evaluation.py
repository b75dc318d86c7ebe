import asyncio
from typing import List, Sequence

from edutree.algorithms.evaluation import cross_validate
from edutree.models.dataset import Dataset
from edutree.models.enums import Algorithm
from edutree.schemas.params import LearnerParams
from edutree.schemas.reports import EvaluationReport
from edutree.utils.log_control import logger


class EvaluationController:
    """多算法交叉验证对比"""

    async def evaluate(
        self, algorithm: Algorithm, dataset: Dataset, params: LearnerParams, k: int, seed: int
    ) -> EvaluationReport:
        return await asyncio.to_thread(cross_validate, algorithm, dataset, params, k, seed)

    async def compare(
        self, algorithms: Sequence[Algorithm], dataset: Dataset, params: LearnerParams, k: int = 10, seed: int = 1
    ) -> List[EvaluationReport]:
        """
        并发评估各算法，结果按 id3, c45, cart 的固定顺序返回

        Args:
            algorithms: 算法子集
            dataset: 评估数据
            params: 学习器参数
            k: 折数
            seed: 划分种子
        """
        order = list(Algorithm)
        ordered = sorted(set(algorithms), key=order.index)
        logger.info("开始对比: {}, k={}, seed={}", ",".join(ordered), k, seed)
        reports = await asyncio.gather(*(self.evaluate(a, dataset, params, k, seed) for a in ordered))
        return list(reports)


evaluation_controller = EvaluationController()
