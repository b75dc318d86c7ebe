"""
命令行子命令：train / predict / rules / compare

每个子命令先生成全部产物（路径 -> 文本），全部成功后再统一原子写出，失败时不会留下半成品。
"""

import asyncio
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import click

from edutree.algorithms.rules import extract_rules, render_rules, rules_to_csv
from edutree.controllers import evaluation_controller, model_controller
from edutree.controllers.model import load_dataset
from edutree.core.codes import EMBEDDED_SENTINEL
from edutree.datasets.reference import REFERENCE_ACCURACY, REFERENCE_BUILD_TIME
from edutree.io.reports import (
    render_chart_svg,
    render_compare_text,
    render_predictions,
    render_tree,
    report_document,
    report_summary,
)
from edutree.models.enums import Algorithm, ReportFormat, Subcommand
from edutree.schemas.run_config import RunConfig, build_run_config
from edutree.settings import settings
from edutree.utils.files import write_artifacts
from edutree.utils.json_encoder import safe_json_dumps
from edutree.utils.log_control import init_logging, logger

from .group import ToolkitGroup

Artifacts = Dict[str, str]

# 参考结果只对应 10 折的嵌入数据
REFERENCE_K = 10

FORMAT_CHOICE = click.Choice(ReportFormat.get_member_values())
ALGORITHM_CHOICE = click.Choice(Algorithm.get_member_values())


def sibling(output: str, suffix: str) -> str:
    path = Path(output)
    return str(path.with_name(path.stem + suffix))


def parse_algorithms(ctx: click.Context, param: click.Parameter, value: Tuple[str, ...]) -> Tuple[str, ...]:
    """--algorithms 支持逗号分隔与重复出现"""
    names = [name.strip() for item in value for name in item.split(",") if name.strip()]
    return tuple(names) if names else tuple(Algorithm.get_member_values())


def cmd_compare(config: RunConfig) -> Artifacts:
    dataset = load_dataset(config.data_path)
    reports = asyncio.run(
        evaluation_controller.compare(config.algorithms, dataset, config.learner_params(), config.k, config.seed)
    )

    if config.format == ReportFormat.CSV:
        return {config.output: report_summary(reports, ReportFormat.CSV)}
    if config.format == ReportFormat.JSON:
        return {config.output: report_document(reports)}

    with_reference = config.is_embedded and config.k == REFERENCE_K
    text = render_compare_text(
        reports,
        REFERENCE_ACCURACY if with_reference else None,
        REFERENCE_BUILD_TIME if with_reference else None,
    )
    if config.format == ReportFormat.TEXT:
        return {config.output: text}

    artifacts = {config.output: render_chart_svg(reports)}
    if config.output != "-":
        artifacts[sibling(config.output, ".txt")] = text
    return artifacts


def cmd_train(config: RunConfig) -> Artifacts:
    dataset = load_dataset(config.data_path)
    tree = model_controller.train(config.algorithm, dataset, config.learner_params())
    artifacts = {config.output: model_controller.dumps(tree)}
    if config.output != "-":
        artifacts[sibling(config.output, ".tree.txt")] = render_tree(tree)
    return artifacts


def cmd_predict(config: RunConfig) -> Artifacts:
    tree = model_controller.load(config.model_path)
    dataset = model_controller.load_instances(config.data_path, tree)
    predictions = model_controller.predict(tree, dataset)
    return {config.output: render_predictions(dataset, predictions, config.format)}


def cmd_rules(config: RunConfig) -> Artifacts:
    dataset = load_dataset(config.data_path)
    tree = model_controller.train(config.algorithm, dataset, config.learner_params())
    rules = extract_rules(tree)
    logger.info("{} 抽取规则 {} 条", config.algorithm, len(rules))
    if config.format == ReportFormat.CSV:
        return {config.output: rules_to_csv(rules, config.merge_siblings)}
    if config.format == ReportFormat.JSON:
        return {config.output: safe_json_dumps(rules.model_dump(mode="json"))}
    return {config.output: render_rules(rules, config.merge_siblings)}


commands = {
    Subcommand.COMPARE: cmd_compare,
    Subcommand.TRAIN: cmd_train,
    Subcommand.PREDICT: cmd_predict,
    Subcommand.RULES: cmd_rules,
}


def run(config: RunConfig) -> None:
    artifacts = commands[config.subcommand](config)
    write_artifacts(artifacts)
    logger.debug("{} 完成，写出 {}", config.subcommand, ", ".join(artifacts))


def data_argument(f):
    return click.argument("data", required=False, default=EMBEDDED_SENTINEL)(f)


def learner_options(f):
    f = click.option("--seed", type=int, default=1, show_default=True, help="random seed")(f)
    f = click.option(
        "--pruning", type=click.Choice(["on", "off"]), default="on", show_default=True, help="prune the grown tree"
    )(f)
    return f


def output_option(f):
    return click.option("--output", "-o", default="-", show_default=True, help="output path, - for stdout")(f)


@click.group(cls=ToolkitGroup)
@click.version_option(settings.VERSION, prog_name=settings.APP_TITLE)
def cli() -> None:
    """Decision trees (ID3, C4.5, CART) for student performance data."""
    logger.enable("edutree")
    init_logging()


@cli.command()
@data_argument
@click.option("--algorithms", "algorithms", multiple=True, callback=parse_algorithms, help="comma-separated subset of id3,c45,cart")
@click.option("--k", type=int, default=10, show_default=True, help="number of cross-validation folds")
@learner_options
@output_option
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="text", show_default=True)
def compare(data: str, algorithms: Tuple[str, ...], k: int, seed: int, pruning: str, output: str, fmt: str) -> None:
    """Compare algorithms by stratified k-fold cross-validation."""
    run(
        build_run_config(
            subcommand=Subcommand.COMPARE,
            data_path=data,
            algorithms=algorithms,
            k=k,
            seed=seed,
            pruning=pruning == "on",
            output=output,
            format=fmt,
        )
    )


@cli.command()
@data_argument
@click.option("--algorithm", type=ALGORITHM_CHOICE, required=True)
@learner_options
@output_option
def train(data: str, algorithm: str, seed: int, pruning: str, output: str) -> None:
    """Train a tree and write the model (plus <stem>.tree.txt when writing to a file)."""
    run(
        build_run_config(
            subcommand=Subcommand.TRAIN,
            data_path=data,
            algorithms=(algorithm,),
            seed=seed,
            pruning=pruning == "on",
            output=output,
            format=ReportFormat.JSON,
        )
    )


@cli.command()
@data_argument
@click.option("--model", "model_path", type=str, default=None, help="model file written by train")
@output_option
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="text", show_default=True)
def predict(data: str, model_path: Optional[str], output: str, fmt: str) -> None:
    """Predict a label (or UNCLASSIFIED) and class distribution for each row."""
    run(
        build_run_config(
            subcommand=Subcommand.PREDICT,
            data_path=data,
            model_path=model_path,
            output=output,
            format=fmt,
        )
    )


@cli.command()
@data_argument
@click.option("--algorithm", type=ALGORITHM_CHOICE, required=True)
@learner_options
@output_option
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="text", show_default=True)
@click.option("--merge-siblings", is_flag=True, default=False, help="merge sibling rules with the same conclusion")
def rules(data: str, algorithm: str, seed: int, pruning: str, output: str, fmt: str, merge_siblings: bool) -> None:
    """Train a tree and print its IF-THEN rules."""
    run(
        build_run_config(
            subcommand=Subcommand.RULES,
            data_path=data,
            algorithms=(algorithm,),
            seed=seed,
            pruning=pruning == "on",
            output=output,
            format=fmt,
            merge_siblings=merge_siblings,
        )
    )


def main(args: Optional[List[str]] = None) -> None:
    cli.main(args=args, prog_name=settings.APP_TITLE)
