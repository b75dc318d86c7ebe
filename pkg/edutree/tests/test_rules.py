from itertools import product

import pytest

from edutree.algorithms.learners import train
from edutree.algorithms.predict import classify
from edutree.algorithms.rules import (
    extract_rules,
    format_rule,
    merge_sibling_rules,
    render_rules,
    rules_classify,
    rules_to_csv,
)
from edutree.core.exceptions import InvariantError
from edutree.models.dataset import AttributeSpec, Dataset, Instance, Schema
from edutree.models.enums import Algorithm
from edutree.models.rules import Condition, Rule, RuleSet
from edutree.models.tree import DecisionTree, EmptyLeaf, Leaf, MultiwaySplit, leaves_with_depth
from edutree.schemas.params import LearnerParams

ALGORITHMS = ("id3", "c45", "cart")


def instance_space(header: Schema):
    """全部名义取值组合（432 个），类别位随意填 0"""
    domains = [range(len(spec.values)) for spec in header.attributes[:-1]]
    for values in product(*domains):
        yield Instance(values=tuple(values) + (0,))


@pytest.fixture
def abc_tree() -> DecisionTree:
    header = Schema.of([AttributeSpec.nominal("a", ("x", "y", "z", "w")), AttributeSpec.nominal("c", ("p", "q"))])
    root = MultiwaySplit(
        attribute="a",
        counts=(4, 1),
        children=(
            Leaf(label="p", counts=(2, 0)),
            Leaf(label="p", counts=(2, 0)),
            Leaf(label="q", counts=(0, 1)),
            EmptyLeaf(counts=(0, 0)),
        ),
    )
    return DecisionTree(algorithm=Algorithm.ID3, header=header, root=root)


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_rules_agree_with_tree_everywhere(students, algorithm):
    tree = train(algorithm, students)
    rules = extract_rules(tree)
    for instance in instance_space(students.header):
        matching = [r for r in rules.rules if r.matches(instance, rules.header)]
        assert len(matching) == 1
        assert rules_classify(rules, instance) == classify(tree, instance)


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_one_rule_per_leaf(students, algorithm):
    tree = train(algorithm, students)
    rules = extract_rules(tree)
    leaves = leaves_with_depth(tree.root)
    assert len(rules) == tree.leaf_count == len(leaves)
    assert sum(len(r.conditions) for r in rules.rules) == sum(depth for _, depth in leaves)


def test_id3_rules_start_with_root_attribute(students):
    text = render_rules(extract_rules(train("id3", students)))
    lines = text.splitlines()
    assert lines
    assert all(line.startswith("IF ATT = ") for line in lines)
    assert text.endswith("\n")
    assert any(line.endswith("THEN ESM = UNCLASSIFIED") for line in lines)


def test_cart_rules_use_subset_conditions(students):
    text = render_rules(extract_rules(train("cart", students, LearnerParams(pruning=False))))
    assert text.splitlines()[0].startswith("IF PSM IN {'First'}")
    assert any(line.startswith("IF PSM IN {'Second', 'Third', 'Fail'}") for line in text.splitlines())


def test_rule_formatting():
    rule = Rule(
        conditions=(Condition.equals("PSM", "Second"), Condition.equals("ATT", "Good"), Condition.equals("ASS", "Yes")),
        consequent="First",
        counts=(3, 0, 0, 0),
    )
    assert format_rule(rule, "ESM") == "IF PSM = 'Second' AND ATT = 'Good' AND ASS = 'Yes' THEN ESM = 'First'"


def test_single_leaf_tree_gives_true_rule():
    header = Schema.of([AttributeSpec.nominal("a", ("x", "y")), AttributeSpec.nominal("c", ("p", "q"))])
    tree = train("id3", Dataset.from_labels(header, [("x", "q"), ("y", "q")]))
    assert render_rules(extract_rules(tree)) == "IF TRUE THEN c = 'q'\n"


def test_threshold_conditions(numeric_toy):
    text = render_rules(extract_rules(train("c45", numeric_toy)))
    assert text == "IF x <= 5 THEN y = 'lo'\nIF x > 5 THEN y = 'hi'\n"


def test_quotes_are_escaped():
    rule = Rule(conditions=(Condition.equals("name", "O'Neil"),), consequent="p")
    assert format_rule(rule, "c") == "IF name = 'O\\'Neil' THEN c = 'p'"


def test_empty_leaf_rule_is_unclassified(abc_tree):
    rules = extract_rules(abc_tree)
    assert rules.rules[-1].consequent is None
    assert format_rule(rules.rules[-1], "c") == "IF a = 'w' THEN c = UNCLASSIFIED"
    assert not rules_classify(rules, Instance(values=(3, 0))).is_classified


def test_merge_siblings(abc_tree):
    rules = extract_rules(abc_tree)
    merged = merge_sibling_rules(rules)
    assert len(merged) == 3
    assert merged[0].counts == (4, 0)
    assert render_rules(rules, merge_siblings=True) == (
        "IF a IN {'x', 'y'} THEN c = 'p'\n" "IF a = 'z' THEN c = 'q'\n" "IF a = 'w' THEN c = UNCLASSIFIED\n"
    )


def test_rules_csv(abc_tree):
    text = rules_to_csv(extract_rules(abc_tree))
    lines = text.splitlines()
    assert lines[0] == "conditions,consequent"
    assert lines[1] == "a = 'x',p"
    assert lines[-1] == "a = 'w',UNCLASSIFIED"


def test_rules_serialize(students):
    rules = extract_rules(train("c45", students, LearnerParams(pruning=False)))
    assert RuleSet.model_validate_json(rules.model_dump_json()) == rules


def test_no_matching_rule_is_invariant_error(abc_tree):
    rules = extract_rules(abc_tree)
    partial = RuleSet(header=rules.header, rules=rules.rules[:1])
    with pytest.raises(InvariantError):
        rules_classify(partial, Instance(values=(2, 0)))
