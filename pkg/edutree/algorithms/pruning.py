"""
剪枝

悲观剪枝（C4.5）：自底向上，若子树折叠为多数类叶节点后的误差上界不超过各叶误差上界之和，则折叠。
上界为训练误差的单侧二项置信上界，由 beta 分布分位数精确求得。

代价复杂度剪枝（CART）：最弱链接序列 (alpha, 子树)，alpha 严格递增，首项为 (0, 原树)，末项为根桩；
用内部分层交叉验证在几何中点上估计风险，默认取风险最小者（并列时取较大的树），
one_se 打开时改用 1-SE 规则取风险不超过最小值加一个标准误的最简子树。
"""

import math
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import beta

from edutree.algorithms.folds import stratified_folds
from edutree.algorithms.predict import child_index, classify_node
from edutree.core.codes import TIE_TOLERANCE
from edutree.core.exceptions import ConfigError
from edutree.core.learner import make_leaf
from edutree.models.dataset import Dataset, Schema
from edutree.models.tree import DecisionTree, EmptyLeaf, Leaf, TreeNode
from edutree.schemas.params import LearnerParams
from edutree.utils.log_control import logger

PruningSequence = List[Tuple[float, TreeNode]]


def pessimistic_upper_bound(errors: int, n: int, confidence_factor: float) -> float:
    """
    n 个实例中 errors 个错分时，错误率在置信因子 confidence_factor 下的单侧上界

    U = Beta(1 - CF; E + 1, N - E)；E = 0 时即 1 - CF^(1/N)，E >= N 时为 1，N = 0 时为 0。
    """
    if n <= 0:
        return 0.0
    if errors >= n:
        return 1.0
    return float(beta.ppf(1.0 - confidence_factor, errors + 1, n - errors))


def _label_index(node: Leaf, class_values: Sequence[str]) -> int:
    return class_values.index(node.label)


def leaf_errors(node: TreeNode, class_values: Sequence[str]) -> int:
    """叶节点按其标签计的训练误差"""
    if isinstance(node, EmptyLeaf) or node.n == 0:
        return 0
    return node.n - node.counts[_label_index(node, class_values)]


def collapse_errors(node: TreeNode) -> int:
    """把节点折叠为多数类叶节点后的训练误差"""
    return node.n - max(node.counts) if node.counts and node.n else 0


def _with_children(node: TreeNode, children: Tuple[TreeNode, ...]) -> TreeNode:
    return node.model_copy(update={"children": children})


def _estimated_errors(node: TreeNode, class_values: Sequence[str], cf: float) -> float:
    if node.is_leaf:
        return node.n * pessimistic_upper_bound(leaf_errors(node, class_values), node.n, cf)
    return sum(_estimated_errors(c, class_values, cf) for c in node.children)


def prune_pessimistic_node(node: TreeNode, header: Schema, confidence_factor: float) -> TreeNode:
    if node.is_leaf:
        return node
    class_values = header.class_values
    pruned = _with_children(
        node, tuple(prune_pessimistic_node(c, header, confidence_factor) for c in node.children)
    )
    as_leaf = node.n * pessimistic_upper_bound(collapse_errors(node), node.n, confidence_factor)
    as_subtree = _estimated_errors(pruned, class_values, confidence_factor)
    if as_leaf <= as_subtree + TIE_TOLERANCE:
        logger.debug("悲观剪枝折叠 {} (leaf={:.4f} <= subtree={:.4f})", node.attribute, as_leaf, as_subtree)
        return make_leaf(np.asarray(node.counts), class_values)
    return pruned


def recount(node: TreeNode, dataset: Dataset) -> TreeNode:
    """按 dataset 重新路由实例，刷新每个节点的类别计数；叶标签保持不变"""
    header = dataset.header
    y = dataset.class_codes()

    def walk(current: TreeNode, rows: List[int]) -> TreeNode:
        counts = tuple(int(c) for c in np.bincount(y[rows], minlength=header.n_classes)) if rows else (0,) * header.n_classes
        if current.is_leaf:
            return current.model_copy(update={"counts": counts})
        buckets: List[List[int]] = [[] for _ in current.children]
        for i in rows:
            buckets[child_index(current, dataset.instances[i], header)].append(i)
        children = tuple(walk(c, b) for c, b in zip(current.children, buckets))
        return current.model_copy(update={"counts": counts, "children": children})

    return walk(node, [i for i in range(len(dataset)) if y[i] >= 0])


def _check_header(tree: DecisionTree, training: Dataset) -> None:
    if training.header != tree.header:
        raise ConfigError("training data schema does not match the tree's schema")


def prune_pessimistic(
    tree: DecisionTree, training: Optional[Dataset] = None, confidence_factor: Optional[float] = None
) -> DecisionTree:
    """
    悲观剪枝

    Args:
        tree: 待剪枝的树
        training: 给出时先按该数据重新统计节点计数
        confidence_factor: 默认取 tree.params.confidence_factor
    """
    cf = tree.params.confidence_factor if confidence_factor is None else confidence_factor
    root = tree.root
    if training is not None:
        _check_header(tree, training)
        root = recount(root, training)
    return tree.model_copy(update={"root": prune_pessimistic_node(root, tree.header, cf)})


def _leaf_count(node: TreeNode) -> int:
    if node.is_leaf:
        return 1
    return sum(_leaf_count(c) for c in node.children)


def _subtree_errors(node: TreeNode, class_values: Sequence[str]) -> int:
    if node.is_leaf:
        return leaf_errors(node, class_values)
    return sum(_subtree_errors(c, class_values) for c in node.children)


def _link_strength(node: TreeNode, class_values: Sequence[str], n_root: int) -> float:
    """g(t) = (R(t) - R(T_t)) / (|叶(T_t)| - 1)，R 为误差占根实例数的比例"""
    gain = (collapse_errors(node) - _subtree_errors(node, class_values)) / n_root
    return gain / max(_leaf_count(node) - 1, 1)


def _weakest_link(node: TreeNode, class_values: Sequence[str], n_root: int) -> float:
    best = _link_strength(node, class_values, n_root)
    for child in node.children:
        if not child.is_leaf:
            best = min(best, _weakest_link(child, class_values, n_root))
    return best


def _collapse_at(node: TreeNode, alpha: float, class_values: Sequence[str], n_root: int) -> TreeNode:
    if node.is_leaf:
        return node
    if _link_strength(node, class_values, n_root) <= alpha + TIE_TOLERANCE:
        return make_leaf(np.asarray(node.counts), class_values)
    return _with_children(node, tuple(_collapse_at(c, alpha, class_values, n_root) for c in node.children))


def cost_complexity_sequence(root: TreeNode, class_values: Sequence[str]) -> PruningSequence:
    """
    最弱链接剪枝序列

    g 不超过已记录 alpha 的折叠并入下一个记录项，保证 alpha 严格递增；
    若折叠到根仍没有新的 alpha，末项取上一个 alpha 的下一个浮点数。
    """
    sequence: PruningSequence = [(0.0, root)]
    n_root = max(root.n, 1)
    current = root
    pending = False
    while not current.is_leaf:
        alpha = _weakest_link(current, class_values, n_root)
        current = _collapse_at(current, alpha, class_values, n_root)
        last = sequence[-1][0]
        if alpha > last + TIE_TOLERANCE:
            sequence.append((alpha, current))
            pending = False
        elif len(sequence) > 1:
            sequence[-1] = (last, current)
        else:
            pending = True
    if pending:
        sequence.append((float(np.nextafter(sequence[-1][0], np.inf)), current))
    return sequence


def select_from_sequence(sequence: PruningSequence, alpha: float) -> TreeNode:
    """alpha 对应的成员：最后一个 alpha_i <= alpha 的子树"""
    chosen = sequence[0][1]
    for a, node in sequence:
        if a <= alpha:
            chosen = node
        else:
            break
    return chosen


def prune_to_alpha(tree: DecisionTree, alpha: float) -> DecisionTree:
    sequence = cost_complexity_sequence(tree.root, tree.header.class_values)
    return tree.model_copy(update={"root": select_from_sequence(sequence, alpha)})


def prune_cost_complexity_node(
    root: TreeNode,
    training: Dataset,
    params: LearnerParams,
    grow: Callable[[Dataset, LearnerParams], TreeNode],
) -> TreeNode:
    """
    用内部交叉验证选择剪枝序列中的子树

    Args:
        root: 在 training 上生长的未剪枝树
        training: 训练数据
        params: cc_folds 与 seed 决定内部划分，one_se 决定选择规则
        grow: 在子集上生长未剪枝树的函数
    """
    header = training.header
    class_values = header.class_values
    n = len(training)
    if root.is_leaf or n < 2:
        return root
    sequence = cost_complexity_sequence(root, class_values)
    if len(sequence) == 1:
        return root

    alphas = [a for a, _ in sequence]
    midpoints = [math.sqrt(alphas[i] * alphas[i + 1]) for i in range(len(alphas) - 1)] + [math.inf]

    k = min(params.cc_folds, n)
    folds = stratified_folds(training, k, params.seed)
    inner = params.model_copy(update={"pruning": False})
    errors = np.zeros(len(midpoints))
    for f in range(k):
        test_rows = folds.test_indices(f)
        if not test_rows:
            continue
        fold_train = training.subset(folds.train_indices(f))
        fold_test = training.subset(test_rows)
        fold_sequence = cost_complexity_sequence(grow(fold_train, inner), class_values)
        for i, midpoint in enumerate(midpoints):
            candidate = select_from_sequence(fold_sequence, midpoint)
            for inst in fold_test.instances:
                if classify_node(candidate, inst, header).label != fold_test.label_of(inst):
                    errors[i] += 1

    risk = errors / n
    best = int(np.argmin(risk))
    chosen = best
    if params.one_se:
        se = np.sqrt(risk * (1.0 - risk) / n)
        limit = risk[best] + se[best]
        chosen = max(i for i in range(len(midpoints)) if risk[i] <= limit + TIE_TOLERANCE)
    logger.debug(
        "代价复杂度剪枝: {} 个候选, 最小风险 {:.4f} (#{}), {} 选择 #{} (alpha={:.6f})",
        len(midpoints),
        risk[best],
        best,
        "1-SE" if params.one_se else "最小风险",
        chosen,
        alphas[chosen],
    )
    return sequence[chosen][1]


def prune_cost_complexity(tree: DecisionTree, training: Dataset, params: Optional[LearnerParams] = None) -> DecisionTree:
    """对 CART 树做代价复杂度剪枝；pruning 关闭时原样返回"""
    from edutree.algorithms.cart import cart_learner

    params = params or tree.params
    _check_header(tree, training)
    if not params.pruning:
        return tree
    root = prune_cost_complexity_node(tree.root, training, params, grow=cart_learner.grow_unpruned)
    return tree.model_copy(update={"root": root})

