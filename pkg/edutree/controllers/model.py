"""
模型控制器：数据加载、训练、序列化与预测
"""

from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from edutree.algorithms.learners import train
from edutree.algorithms.predict import predict_dataset
from edutree.core.codes import EMBEDDED_SENTINEL
from edutree.core.exceptions import ConfigError, CsvParseError, DataError
from edutree.datasets.students import STUDENT_SCHEMA, load_embedded_students
from edutree.io.arff import load_arff
from edutree.io.csv_io import load_csv
from edutree.models.dataset import Dataset, Instance, Schema
from edutree.models.enums import Algorithm
from edutree.models.tree import DecisionTree, Prediction
from edutree.schemas.params import LearnerParams
from edutree.utils.json_encoder import safe_json_dumps
from edutree.utils.log_control import logger

# CSV 中属于模式不匹配（而不是数据损坏）的诊断
_SCHEMA_MISMATCH_PREFIXES = ("header mismatch", "undeclared nominal value")


def load_dataset(path: str, schema: Optional[Schema] = None) -> Dataset:
    """
    按路径加载数据集

    Args:
        path: @embedded、.arff 或 .csv 文件
        schema: CSV 使用的模式，默认学生数据模式
    """
    if path == EMBEDDED_SENTINEL:
        return load_embedded_students()
    if Path(path).suffix.lower() == ".csv":
        return load_csv(path, schema or STUDENT_SCHEMA)
    return load_arff(path)


class ModelController:
    """训练、保存、加载与预测"""

    def __init__(self):
        self.default_params = LearnerParams()

    def train(self, algorithm: Algorithm, dataset: Dataset, params: Optional[LearnerParams] = None) -> DecisionTree:
        tree = train(algorithm, dataset, params or self.default_params)
        logger.info(
            "{} 训练完成: {} 个节点, {} 个叶节点, 深度 {}", algorithm, tree.node_count, tree.leaf_count, tree.depth
        )
        return tree

    def dumps(self, tree: DecisionTree) -> str:
        """序列化为结构化文档（键有序，逐字节稳定）"""
        return safe_json_dumps(tree.model_dump(mode="json"))

    def loads(self, text: str) -> DecisionTree:
        """
        Raises:
            DataError: 文档不是有效的序列化模型
        """
        try:
            return DecisionTree.model_validate_json(text)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(p) for p in first.get("loc", ())) or "document"
            raise DataError(f"invalid model file: {where}: {first.get('msg')}")

    def load(self, path: str | Path) -> DecisionTree:
        return self.loads(Path(path).read_text(encoding="utf-8"))

    def load_instances(self, path: str, tree: DecisionTree) -> Dataset:
        """
        按模型的模式加载待预测实例

        Raises:
            ConfigError: 文件模式与模型不一致，消息指出具体属性
        """
        if path == EMBEDDED_SENTINEL:
            return align_to_schema(load_embedded_students(), tree.header)
        if Path(path).suffix.lower() == ".csv":
            try:
                return load_csv(path, tree.header)
            except CsvParseError as e:
                mismatch = [d for d in e.diagnostics if d.message.startswith(_SCHEMA_MISMATCH_PREFIXES)]
                if mismatch:
                    raise ConfigError(f"schema mismatch: line {mismatch[0].line}: {mismatch[0].message}")
                raise
        return align_to_schema(load_arff(path, tree.header.class_attribute.name), tree.header)

    def predict(self, tree: DecisionTree, dataset: Dataset) -> List[Prediction]:
        predictions = predict_dataset(tree, dataset)
        unclassified = sum(1 for p in predictions if not p.is_classified)
        logger.info("预测完成: {} 条, 其中 unclassified {} 条", len(predictions), unclassified)
        return predictions


def align_to_schema(dataset: Dataset, header: Schema) -> Dataset:
    """
    把数据集的名义下标重映射到模型的模式

    文件可以按不同顺序声明取值，也可以多声明，只要实际出现的取值都在模型中声明过。

    Raises:
        ConfigError: 属性名、顺序、类型不一致，或出现模型未声明的取值
    """
    source = dataset.header
    if source == header:
        return dataset
    if source.names != header.names:
        raise ConfigError(f"schema mismatch: expected attributes {header.names}, found {source.names}")
    for src, dst in zip(source.attributes, header.attributes):
        if src.kind != dst.kind:
            raise ConfigError(f"schema mismatch: attribute '{dst.name}' is {dst.kind} in the model, {src.kind} in the data")

    instances = []
    for row, inst in enumerate(dataset.instances, start=1):
        values = []
        for src, dst, v in zip(source.attributes, header.attributes, inst.values):
            if v is None or not dst.is_nominal:
                values.append(v)
                continue
            label = src.values[int(v)]
            if label not in dst.values:
                raise ConfigError(
                    f"schema mismatch: attribute '{dst.name}': value '{label}' (row {row}) is not declared by the model"
                )
            values.append(dst.values.index(label))
        instances.append(Instance(values=tuple(values)))
    return Dataset(relation=dataset.relation, header=header, instances=tuple(instances))


model_controller = ModelController()
