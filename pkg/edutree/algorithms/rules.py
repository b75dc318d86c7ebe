"""
规则抽取：每个叶节点一条 IF-THEN 规则，条件为根到叶路径上的测试

子集划分的右分支写成补集上的 IN 条件（补集相对声明取值），因此规则两两互斥且覆盖整个实例空间。
"""

import csv
import io
from typing import Iterator, List, Tuple

from edutree.algorithms.predict import leaf_prediction
from edutree.core.exceptions import InvariantError
from edutree.models.dataset import Instance, Schema
from edutree.models.enums import ConditionOp
from edutree.models.rules import Condition, Rule, RuleSet
from edutree.models.tree import DecisionTree, EmptyLeaf, MultiwaySplit, Prediction, SubsetSplit, TreeNode

UNCLASSIFIED = "UNCLASSIFIED"


def _branch_conditions(node: TreeNode, header: Schema) -> Iterator[Tuple[Condition, TreeNode]]:
    if isinstance(node, MultiwaySplit):
        spec = header.attribute(node.attribute)
        for value, child in zip(spec.values, node.children):
            yield Condition.equals(node.attribute, value), child
    elif isinstance(node, SubsetSplit):
        spec = header.attribute(node.attribute)
        rest = tuple(v for v in spec.values if v not in node.subset)
        yield Condition.member_of(node.attribute, node.subset), node.children[0]
        yield Condition.member_of(node.attribute, rest), node.children[1]
    else:
        yield Condition(attribute=node.attribute, op=ConditionOp.LE, threshold=node.threshold), node.children[0]
        yield Condition(attribute=node.attribute, op=ConditionOp.GT, threshold=node.threshold), node.children[1]


def extract_rules(tree: DecisionTree) -> RuleSet:
    """深度优先、按子节点声明顺序枚举叶节点"""
    rules: List[Rule] = []

    def walk(node: TreeNode, path: Tuple[Condition, ...]) -> None:
        if isinstance(node, EmptyLeaf):
            rules.append(Rule(conditions=path, consequent=None, counts=node.counts))
        elif node.is_leaf:
            rules.append(Rule(conditions=path, consequent=node.label, counts=node.counts))
        else:
            for condition, child in _branch_conditions(node, tree.header):
                walk(child, path + (condition,))

    walk(tree.root, ())
    return RuleSet(header=tree.header, rules=tuple(rules))


def rules_classify(rules: RuleSet, instance: Instance) -> Prediction:
    """
    第一条匹配规则的结论

    Raises:
        InvariantError: 没有规则匹配（抽取得到的规则集不可能出现）
    """
    for rule in rules.rules:
        if rule.matches(instance, rules.header):
            if rule.consequent is None:
                return Prediction.unclassified()
            return leaf_prediction(rule.counts, rule.consequent, rules.header.class_values)
    raise InvariantError("no rule matches the instance")


def _quote(value: str) -> str:
    return "'" + value.replace("\\", "\\\\").replace("'", "\\'") + "'"


def format_threshold(value: float) -> str:
    return f"{value:.12g}"


def format_condition(condition: Condition) -> str:
    if condition.op == ConditionOp.EQ:
        return f"{condition.attribute} = {_quote(condition.values[0])}"
    if condition.op == ConditionOp.IN:
        return f"{condition.attribute} IN {{{', '.join(_quote(v) for v in condition.values)}}}"
    symbol = "<=" if condition.op == ConditionOp.LE else ">"
    return f"{condition.attribute} {symbol} {format_threshold(condition.threshold)}"


def format_consequent(rule: Rule, class_attribute: str) -> str:
    if rule.consequent is None:
        return f"{class_attribute} = {UNCLASSIFIED}"
    return f"{class_attribute} = {_quote(rule.consequent)}"


def format_rule(rule: Rule, class_attribute: str) -> str:
    body = " AND ".join(format_condition(c) for c in rule.conditions) if rule.conditions else "TRUE"
    return f"IF {body} THEN {format_consequent(rule, class_attribute)}"


def _mergeable(a: Rule, b: Rule) -> bool:
    if not a.conditions or len(a.conditions) != len(b.conditions):
        return False
    if a.consequent is None or a.consequent != b.consequent or a.conditions[:-1] != b.conditions[:-1]:
        return False
    last_a, last_b = a.conditions[-1], b.conditions[-1]
    nominal = (ConditionOp.EQ, ConditionOp.IN)
    return last_a.attribute == last_b.attribute and last_a.op in nominal and last_b.op in nominal


def merge_sibling_rules(rules: RuleSet) -> List[Rule]:
    """相邻且结论相同的兄弟规则合并为 IN 条件；只用于展示，不改变树"""
    merged: List[Rule] = []
    for rule in rules.rules:
        if merged and _mergeable(merged[-1], rule):
            prev = merged[-1]
            spec = rules.header.attribute(rule.conditions[-1].attribute)
            union = set(prev.conditions[-1].values) | set(rule.conditions[-1].values)
            values = tuple(v for v in spec.values if v in union)
            last = Condition.equals(spec.name, values[0]) if len(values) == 1 else Condition.member_of(spec.name, values)
            counts = tuple(x + y for x, y in zip(prev.counts, rule.counts))
            merged[-1] = Rule(conditions=prev.conditions[:-1] + (last,), consequent=prev.consequent, counts=counts)
        else:
            merged.append(rule)
    return merged


def render_rules(rules: RuleSet, merge_siblings: bool = False) -> str:
    """每行一条规则，UTF-8，LF 结尾"""
    items = merge_sibling_rules(rules) if merge_siblings else list(rules.rules)
    return "".join(format_rule(rule, rules.class_attribute) + "\n" for rule in items)


def rules_to_csv(rules: RuleSet, merge_siblings: bool = False) -> str:
    """两列：conditions, consequent"""
    items = merge_sibling_rules(rules) if merge_siblings else list(rules.rules)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["conditions", "consequent"])
    for rule in items:
        body = " AND ".join(format_condition(c) for c in rule.conditions) if rule.conditions else "TRUE"
        writer.writerow([body, UNCLASSIFIED if rule.consequent is None else rule.consequent])
    return buf.getvalue()
