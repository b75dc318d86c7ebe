from typing import Dict, Optional

from edutree.algorithms.c45 import c45_learner
from edutree.algorithms.cart import cart_learner
from edutree.algorithms.id3 import id3_learner
from edutree.core.exceptions import DomainError
from edutree.core.learner import TreeLearner
from edutree.models.dataset import Dataset
from edutree.models.enums import Algorithm
from edutree.models.tree import DecisionTree
from edutree.schemas.params import LearnerParams

# 算法 -> 学习器
learners: Dict[Algorithm, TreeLearner] = {
    Algorithm.ID3: id3_learner,
    Algorithm.C45: c45_learner,
    Algorithm.CART: cart_learner,
}


def get_learner(algorithm: Algorithm | str) -> TreeLearner:
    try:
        return learners[Algorithm(algorithm)]
    except ValueError:
        raise DomainError(f"unknown algorithm '{algorithm}', expected one of {Algorithm.get_member_values()}")


def train(algorithm: Algorithm | str, dataset: Dataset, params: Optional[LearnerParams] = None) -> DecisionTree:
    """按算法名训练并返回带模式与参数的 DecisionTree"""
    return get_learner(algorithm).fit(dataset, params)
