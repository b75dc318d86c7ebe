from typing import List, Optional, Sequence, Tuple, Union

from edutree.core.exceptions import DomainError, UnsupportedMissingError
from edutree.models.dataset import Dataset, Instance, Schema
from edutree.models.tree import DecisionTree, EmptyLeaf, MultiwaySplit, Prediction, SubsetSplit, TreeNode


def leaf_prediction(counts: Sequence[int], label: str, class_values: Sequence[str]) -> Prediction:
    """叶节点计数归一化为分布；计数全为 0 时分布集中在标签上"""
    total = sum(counts)
    if total > 0:
        return Prediction(label=label, distribution=tuple(c / total for c in counts))
    return Prediction(label=label, distribution=tuple(1.0 if v == label else 0.0 for v in class_values))


def child_index(node: TreeNode, instance: Instance, header: Schema) -> int:
    """
    实例在内部节点上走向的分支

    Raises:
        UnsupportedMissingError: 被测试的属性取值缺失
    """
    j = header.index_of(node.attribute)
    value = instance.values[j]
    if value is None:
        raise UnsupportedMissingError(f"missing value for tested attribute '{node.attribute}'")
    if isinstance(node, MultiwaySplit):
        index = int(value)
        if not 0 <= index < len(node.children):
            raise DomainError(f"value index {index} outside the declared values of '{node.attribute}'")
        return index
    if isinstance(node, SubsetSplit):
        return 0 if header.attributes[j].values[int(value)] in node.subset else 1
    return 0 if float(value) <= node.threshold else 1


def route(node: TreeNode, instance: Instance, header: Schema) -> TreeNode:
    """从 node 出发走到叶节点"""
    while not node.is_leaf:
        node = node.children[child_index(node, instance, header)]
    return node


def classify_node(node: TreeNode, instance: Instance, header: Schema) -> Prediction:
    leaf = route(node, instance, header)
    if isinstance(leaf, EmptyLeaf):
        return Prediction.unclassified()
    return leaf_prediction(leaf.counts, leaf.label, header.class_values)


def classify(tree: Union[DecisionTree, TreeNode], instance: Instance, header: Optional[Schema] = None) -> Prediction:
    """
    对单个实例分类；EmptyLeaf 返回 unclassified

    Args:
        tree: DecisionTree，或裸节点加 header
        instance: 与训练模式一致的实例
        header: tree 为裸节点时必填
    """
    if isinstance(tree, DecisionTree):
        return classify_node(tree.root, instance, tree.header)
    if header is None:
        raise DomainError("classifying a bare tree node requires the training schema")
    return classify_node(tree, instance, header)


def predict_dataset(tree: DecisionTree, dataset: Dataset) -> List[Prediction]:
    return [classify_node(tree.root, inst, tree.header) for inst in dataset.instances]


def resubstitution(tree: DecisionTree, dataset: Dataset) -> Tuple[int, int, int]:
    """(正确, 错误, 未分类) 计数"""
    correct = incorrect = unclassified = 0
    for inst, prediction in zip(dataset.instances, predict_dataset(tree, dataset)):
        if not prediction.is_classified:
            unclassified += 1
        elif prediction.label == dataset.label_of(inst):
            correct += 1
        else:
            incorrect += 1
    return correct, incorrect, unclassified
