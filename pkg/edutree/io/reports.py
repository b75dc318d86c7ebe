"""
报告渲染：汇总表、混淆矩阵、建模时间、对比图、树文本与预测结果

文本模式百分比保留 4 位小数，CSV 保留完整精度；所有输出只依赖输入，逐字节可复现。
"""

import csv
import io
from typing import Dict, List, Optional, Sequence, Tuple, Union

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from edutree.algorithms.rules import UNCLASSIFIED, format_condition, format_threshold
from edutree.core.exceptions import DomainError
from edutree.models.dataset import Dataset
from edutree.models.enums import Algorithm, ReportFormat
from edutree.models.rules import Condition
from edutree.models.tree import DecisionTree, EmptyLeaf, MultiwaySplit, Prediction, SubsetSplit, TreeNode
from edutree.schemas.reports import EvaluationReport
from edutree.utils.json_encoder import safe_json_dumps

SUMMARY_COLUMNS = ("algorithm", "correct_pct", "incorrect_pct", "unclassified_pct", "build_time_s", "k", "seed")

CHART_SIZE = (800, 480)
CHART_SERIES = (
    ("correct", "correct_pct", "#2e7d32"),
    ("incorrect", "incorrect_pct", "#c62828"),
    ("unclassified", "unclassified_pct", "#9e9e9e"),
)

Reports = Union[EvaluationReport, Sequence[EvaluationReport]]


def _as_list(reports: Reports) -> List[EvaluationReport]:
    items = [reports] if isinstance(reports, EvaluationReport) else list(reports)
    if not items:
        raise DomainError("no evaluation reports to render")
    return items


def format_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """等宽对齐：首列左对齐，其余右对齐，列间两个空格"""
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]

    def line(cells: Sequence[str]) -> str:
        parts = [cells[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(cells[1:], widths[1:])]
        return "  ".join(parts).rstrip()

    return "".join(line(r) + "\n" for r in [list(headers), *rows])


def _csv(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def report_summary(reports: Reports, fmt: ReportFormat = ReportFormat.TEXT) -> str:
    """
    汇总表，列顺序固定为 algorithm,correct_pct,incorrect_pct,unclassified_pct,build_time_s,k,seed

    Raises:
        DomainError: 没有报告可渲染
    """
    items = _as_list(reports)
    if fmt == ReportFormat.CSV:
        return _csv(
            SUMMARY_COLUMNS,
            [
                (str(r.algorithm), repr(r.correct_pct), repr(r.incorrect_pct), repr(r.unclassified_pct), repr(r.build_time_seconds), r.k, r.seed)
                for r in items
            ],
        )
    rows = [
        [
            str(r.algorithm),
            f"{r.correct_pct:.4f}",
            f"{r.incorrect_pct:.4f}",
            f"{r.unclassified_pct:.4f}",
            f"{r.build_time_seconds:.3f}",
            str(r.k),
            str(r.seed),
        ]
        for r in items
    ]
    return format_table(SUMMARY_COLUMNS, rows)


def render_reference(accuracy: Dict[Algorithm, Tuple[float, float]], algorithms: Sequence[Algorithm]) -> str:
    rows = []
    for algorithm in algorithms:
        if algorithm in accuracy:
            correct, incorrect = accuracy[algorithm]
            rows.append([str(algorithm), f"{correct:.4f}", f"{incorrect:.4f}", f"{100.0 - correct - incorrect:.4f}"])
    return format_table(("algorithm", "correct_pct", "incorrect_pct", "unclassified_pct"), rows)


def render_confusion(report: EvaluationReport) -> str:
    """实际 × 预测矩阵，附 unclassified 列与逐类精确率列"""
    matrix = report.matrix
    headers = ["actual \\ predicted", *matrix.labels, "unclassified", "precision_pct"]
    rows = []
    for i, label in enumerate(matrix.labels):
        precision = report.per_class_precision[i]
        rows.append(
            [
                label,
                *(str(c) for c in matrix.cells[i]),
                str(matrix.unclassified_per_actual[i]),
                "-" if precision is None else f"{precision:.1f}",
            ]
        )
    title = f"{report.algorithm} confusion matrix (k={report.k}, seed={report.seed})\n"
    return title + format_table(headers, rows)


def render_timings(reports: Reports, reference: Optional[Dict[Algorithm, float]] = None) -> str:
    items = _as_list(reports)
    headers = ["algorithm", "build_time_s"] + (["reference_s"] if reference else [])
    rows = []
    for r in items:
        row = [str(r.algorithm), f"{r.build_time_seconds:.3f}"]
        if reference:
            value = reference.get(r.algorithm)
            row.append("-" if value is None else f"{value:.2f}")
        rows.append(row)
    return format_table(headers, rows)


def render_chart_svg(reports: Reports) -> str:
    """按算法分组的 correct/incorrect/unclassified 柱状图，800×480，无外部资源"""
    items = _as_list(reports)
    width_px, height_px = CHART_SIZE
    with matplotlib.rc_context({"svg.hashsalt": "edutree", "svg.fonttype": "path"}):
        fig = Figure(figsize=(width_px / 72, height_px / 72), dpi=72)
        ax = fig.subplots()
        x = np.arange(len(items))
        bar = 0.8 / len(CHART_SERIES)
        for i, (name, field, color) in enumerate(CHART_SERIES):
            values = [getattr(r, field) for r in items]
            offset = (i - (len(CHART_SERIES) - 1) / 2) * bar
            ax.bar(x + offset, values, bar, label=name, color=color)
        ax.set_xticks(x, [str(r.algorithm) for r in items])
        ax.set_ylim(0, 100)
        ax.set_ylabel("% of instances")
        ax.set_title("Comparison of classifiers")
        ax.legend(loc="upper right")
        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def report_document(reports: Reports) -> str:
    """结构化文档，字段名与 EvaluationReport 一致"""
    return safe_json_dumps({"reports": [r.model_dump(mode="json") for r in _as_list(reports)]})


def render_compare_text(
    reports: Sequence[EvaluationReport],
    reference_accuracy: Optional[Dict[Algorithm, Tuple[float, float]]] = None,
    reference_times: Optional[Dict[Algorithm, float]] = None,
) -> str:
    """compare 的文本报告：汇总表、参考值、各算法混淆矩阵、建模时间"""
    sections = ["== accuracy ==\n" + report_summary(reports)]
    if reference_accuracy:
        algorithms = [r.algorithm for r in reports]
        sections.append("== published accuracy ==\n" + render_reference(reference_accuracy, algorithms))
    sections.extend(render_confusion(r) for r in reports)
    sections.append("== build time ==\n" + render_timings(reports, reference_times))
    return "\n".join(sections)


def _branch_labels(node: TreeNode, tree: DecisionTree) -> List[str]:
    header = tree.header
    if isinstance(node, MultiwaySplit):
        return [format_condition(Condition.equals(node.attribute, v)) for v in header.attribute(node.attribute).values]
    if isinstance(node, SubsetSplit):
        rest = tuple(v for v in header.attribute(node.attribute).values if v not in node.subset)
        return [
            format_condition(Condition.member_of(node.attribute, node.subset)),
            format_condition(Condition.member_of(node.attribute, rest)),
        ]
    t = format_threshold(node.threshold)
    return [f"{node.attribute} <= {t}", f"{node.attribute} > {t}"]


def _leaf_text(node: TreeNode, tree: DecisionTree) -> str:
    if isinstance(node, EmptyLeaf):
        return f"{UNCLASSIFIED} (0)"
    errors = node.n - node.counts[tree.header.class_values.index(node.label)] if node.n else 0
    return f"{node.label} ({node.n}/{errors})"


def render_tree(tree: DecisionTree) -> str:
    """缩进文本形式，叶节点写作 label (实例数/错分数)"""
    lines = [
        f"{tree.algorithm} tree for {tree.header.class_attribute.name}: "
        f"{tree.node_count} nodes, {tree.leaf_count} leaves, depth {tree.depth}",
    ]

    def walk(node: TreeNode, depth: int) -> None:
        prefix = "|   " * depth
        for label, child in zip(_branch_labels(node, tree), node.children):
            if child.is_leaf:
                lines.append(f"{prefix}{label}: {_leaf_text(child, tree)}")
            else:
                lines.append(f"{prefix}{label}")
                walk(child, depth + 1)

    if tree.root.is_leaf:
        lines.append(_leaf_text(tree.root, tree))
    else:
        walk(tree.root, 0)
    return "\n".join(lines) + "\n"


def render_predictions(
    dataset: Dataset, predictions: Sequence[Prediction], fmt: ReportFormat = ReportFormat.TEXT
) -> str:
    """每个输入行一条预测：标签或 UNCLASSIFIED，加类别分布"""
    class_values = dataset.header.class_values
    if fmt == ReportFormat.JSON:
        return safe_json_dumps(
            {
                "predictions": [
                    {
                        "row": i,
                        "label": p.label,
                        "distribution": dict(zip(class_values, p.distribution)) if p.is_classified else None,
                    }
                    for i, p in enumerate(predictions, start=1)
                ]
            }
        )
    headers = ["row", "prediction", *class_values]
    rows = []
    for i, p in enumerate(predictions, start=1):
        dist = [f"{d:.4f}" for d in p.distribution] if p.is_classified else [""] * len(class_values)
        rows.append([str(i), p.label or UNCLASSIFIED, *dist])
    if fmt == ReportFormat.CSV:
        return _csv(headers, rows)
    return format_table(headers, rows)
