from itertools import product

import numpy as np
import pytest

from edutree.algorithms.c45 import build_c45
from edutree.algorithms.cart import build_cart
from edutree.algorithms.id3 import build_id3
from edutree.algorithms.learners import get_learner, train
from edutree.algorithms.predict import classify, resubstitution
from edutree.algorithms.pruning import (
    cost_complexity_sequence,
    pessimistic_upper_bound,
    prune_cost_complexity,
    prune_pessimistic,
    prune_pessimistic_node,
    prune_to_alpha,
    select_from_sequence,
)
from edutree.core.exceptions import DomainError, UnsupportedAttributeError, UnsupportedMissingError
from edutree.models.dataset import AttributeSpec, Dataset, Instance, Schema
from edutree.models.tree import DecisionTree, EmptyLeaf, Leaf, MultiwaySplit, SubsetSplit, ThresholdSplit
from edutree.schemas.params import LearnerParams

UNPRUNED = LearnerParams(pruning=False)


def internal_nodes(tree):
    return [node for node in tree.nodes() if not node.is_leaf]


def test_id3_weather_tree(weather):
    tree = train("id3", weather)
    root = tree.root
    assert isinstance(root, MultiwaySplit) and root.attribute == "outlook"
    sunny, overcast, rainy = root.children
    assert overcast == Leaf(label="yes", counts=(4, 0))
    assert sunny.attribute == "humidity"
    assert rainy.attribute == "windy"
    assert resubstitution(tree, weather) == (14, 0, 0)


def test_id3_root_is_max_gain_attribute(students):
    root = build_id3(students)
    assert isinstance(root, MultiwaySplit)
    assert root.attribute == "ATT"
    assert len(root.children) == 3


def test_id3_resubstitution_is_perfect(students):
    tree = train("id3", students)
    assert resubstitution(tree, students) == (48, 0, 0)


def test_id3_has_empty_branches_on_embedded(students):
    tree = train("id3", students)
    assert any(isinstance(node, EmptyLeaf) for node in tree.nodes())


def test_id3_attribute_equal_to_class_gives_depth_one():
    header = Schema.of([AttributeSpec.nominal("a", ("x", "y")), AttributeSpec.nominal("c", ("x", "y"))])
    dataset = Dataset.from_labels(header, [("x", "x"), ("y", "y"), ("x", "x")])
    tree = train("id3", dataset)
    assert tree.depth == 1
    assert [child.label for child in tree.root.children] == ["x", "y"]


def test_id3_contradictory_duplicates_give_first_declared_majority():
    header = Schema.of([AttributeSpec.nominal("a", ("x",)), AttributeSpec.nominal("c", ("p", "q"))])
    dataset = Dataset.from_labels(header, [("x", "q"), ("x", "p")])
    assert build_id3(dataset) == Leaf(label="p", counts=(1, 1))


def test_id3_rejects_numeric_and_missing(numeric_toy, students):
    with pytest.raises(UnsupportedAttributeError):
        train("id3", numeric_toy)
    holed = Dataset(
        relation="holed",
        header=students.header,
        instances=(Instance(values=(None, 0, 0, 0, 0, 0, 0)),) + students.instances[1:],
    )
    with pytest.raises(UnsupportedMissingError, match="row 1, attribute 'PSM'"):
        train("id3", holed)


def test_empty_dataset_is_domain_error(students):
    with pytest.raises(DomainError):
        train("c45", students.subset([]))


def test_unknown_algorithm_is_domain_error():
    with pytest.raises(DomainError):
        get_learner("c50")


def test_c45_pure_dataset_is_single_leaf():
    header = Schema.of([AttributeSpec.nominal("a", ("x", "y")), AttributeSpec.nominal("c", ("p", "q"))])
    dataset = Dataset.from_labels(header, [("x", "p"), ("y", "p"), ("y", "p")])
    assert build_c45(dataset) == Leaf(label="p", counts=(3, 0))


def test_c45_numeric_threshold(numeric_toy):
    root = build_c45(numeric_toy)
    assert isinstance(root, ThresholdSplit)
    assert root.threshold == 5.0
    assert [child.label for child in root.children] == ["lo", "hi"]


def test_c45_root_is_max_gain_ratio_attribute(students):
    root = build_c45(students, UNPRUNED)
    assert isinstance(root, MultiwaySplit)
    assert root.attribute == "ATT"


def test_c45_pruning_never_grows_the_tree(students):
    full = train("c45", students, UNPRUNED)
    pruned = train("c45", students)
    assert pruned.node_count <= full.node_count


def test_cart_is_strictly_binary(students):
    tree = train("cart", students)
    assert all(len(node.children) == 2 for node in internal_nodes(tree))


def test_cart_root_is_psm_first(students):
    root = build_cart(students, UNPRUNED)
    assert isinstance(root, SubsetSplit)
    assert root.attribute == "PSM"
    assert root.subset == ("First",)


def test_cart_separating_binary_attribute():
    header = Schema.of([AttributeSpec.nominal("b", ("yes", "no")), AttributeSpec.nominal("c", ("p", "q"))])
    dataset = Dataset.from_labels(header, [("yes", "p")] * 3 + [("no", "q")] * 3)
    root = build_cart(dataset)
    assert isinstance(root, SubsetSplit)
    assert root.subset == ("yes",)
    assert root.children == (Leaf(label="p", counts=(3, 0)), Leaf(label="q", counts=(0, 3)))


def test_cart_resubstitution_with_unit_leaves(students):
    tree = train("cart", students, LearnerParams(min_leaf=1, pruning=False))
    assert resubstitution(tree, students) == (48, 0, 0)


def test_pessimistic_bound_values():
    assert pessimistic_upper_bound(0, 0, 0.25) == 0.0
    assert pessimistic_upper_bound(3, 3, 0.25) == 1.0
    assert pessimistic_upper_bound(0, 5, 0.25) == pytest.approx(1 - 0.25 ** (1 / 5))
    assert pessimistic_upper_bound(2, 14, 0.25) == pytest.approx(0.261219, abs=1e-6)
    assert pessimistic_upper_bound(1, 8, 0.25) == pytest.approx(0.302700, abs=1e-6)
    assert pessimistic_upper_bound(1, 6, 0.25) == pytest.approx(0.389479, abs=1e-6)


def test_pessimistic_hand_case_prunes():
    """14/2 作为叶节点的估计误差 3.657 小于子节点 8/1 与 6/1 之和 4.758"""
    header = Schema.of([AttributeSpec.nominal("a", ("x", "y")), AttributeSpec.nominal("c", ("p", "q"))])
    node = MultiwaySplit(
        attribute="a",
        counts=(12, 2),
        children=(Leaf(label="p", counts=(7, 1)), Leaf(label="p", counts=(5, 1))),
    )
    assert prune_pessimistic_node(node, header, 0.25) == Leaf(label="p", counts=(12, 2))


def test_pessimistic_keeps_pure_split(numeric_toy):
    tree = train("c45", numeric_toy, UNPRUNED)
    assert prune_pessimistic(tree, numeric_toy).root == tree.root


def test_cost_complexity_sequence_properties(students):
    tree = train("cart", students, UNPRUNED)
    sequence = cost_complexity_sequence(tree.root, students.header.class_values)
    alphas = [a for a, _ in sequence]
    assert sequence[0] == (0.0, tree.root)
    assert all(a < b for a, b in zip(alphas, alphas[1:]))
    assert sequence[-1][1].is_leaf
    assert select_from_sequence(sequence, 0.0) == tree.root
    assert prune_to_alpha(tree, alphas[-1] * 2 + 1).root.is_leaf


def test_cost_complexity_monotone(students):
    full = train("cart", students, UNPRUNED)
    pruned = prune_cost_complexity(full, students, LearnerParams())
    assert pruned.node_count <= full.node_count
    assert resubstitution(pruned, students)[0] <= resubstitution(full, students)[0]
    assert pruned.root == train("cart", students).root


def test_one_se_never_keeps_a_larger_tree(students):
    smallest_risk = train("cart", students)
    one_se = train("cart", students, LearnerParams(one_se=True))
    assert one_se.node_count <= smallest_risk.node_count


@pytest.mark.parametrize("algorithm", ["id3", "c45", "cart"])
def test_instance_order_never_changes_the_tree(students, algorithm):
    expected = train(algorithm, students).root
    n = len(students)
    rng = np.random.default_rng(7)
    for order in [range(n - 1, -1, -1), *(rng.permutation(n) for _ in range(5))]:
        assert train(algorithm, students.subset(order)).root == expected


def test_single_leaf_survives_pruning():
    header = Schema.of([AttributeSpec.nominal("a", ("x", "y")), AttributeSpec.nominal("c", ("p", "q"))])
    dataset = Dataset.from_labels(header, [("x", "p"), ("y", "p")])
    tree = train("cart", dataset)
    assert prune_cost_complexity(tree, dataset).root == tree.root


def test_classify_returns_distribution(weather):
    tree = train("id3", weather)
    prediction = classify(tree, weather.instances[2])
    assert prediction.label == "yes"
    assert prediction.distribution == (1.0, 0.0)


def test_classify_unclassified_on_empty_branch(students):
    tree = train("id3", students)
    empty_path = None
    for instance in _all_instances(students.header):
        if not classify(tree, instance).is_classified:
            empty_path = instance
            break
    assert empty_path is not None
    assert classify(tree, empty_path).distribution == ()


def test_serialized_tree_round_trips(students):
    for algorithm in ("id3", "c45", "cart"):
        tree = train(algorithm, students)
        assert DecisionTree.model_validate_json(tree.model_dump_json()) == tree


def _all_instances(header):
    domains = [range(len(spec.values)) for spec in header.attributes[:-1]]
    for values in product(*domains):
        yield Instance(values=tuple(values) + (0,))
