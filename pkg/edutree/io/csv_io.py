"""
CSV 导入/导出

首行必须与模式属性名逐一对应；数据行的校验规则与 ARFF 数据行相同。空单元格与 '?' 都视为缺失。
"""

import csv
import io
from pathlib import Path
from typing import List

from edutree.core.exceptions import CsvParseError, DomainError
from edutree.io.arff import MISSING_TOKEN, ParseDiagnostic, convert_value, format_number
from edutree.models.dataset import MISSING, Dataset, Instance, Schema, Value
from edutree.models.enums import Severity
from edutree.utils.log_control import logger


def _columns(row: List[str]) -> List[int]:
    """各字段的近似起始列（按未加引号计算）"""
    columns, col = [], 1
    for cell in row:
        columns.append(col)
        col += len(cell) + 1
    return columns


def parse_csv(text: str, schema: Schema, relation: str = "dataset") -> Dataset:
    """
    按给定模式解析 CSV

    Raises:
        CsvParseError: 表头不匹配或任一数据行无效
    """
    if text.startswith("\ufeff"):
        text = text[1:]
    diagnostics: List[ParseDiagnostic] = []
    instances: List[Instance] = []
    reader = csv.reader(io.StringIO(text, newline=""))
    header_seen = False

    try:
        for row in reader:
            number = reader.line_num
            if not row or all(cell.strip() == "" for cell in row):
                continue
            cells = [cell.strip() for cell in row]
            if not header_seen:
                header_seen = True
                if cells != schema.names:
                    diagnostics.append(
                        ParseDiagnostic(
                            line=number,
                            column=1,
                            message=f"header mismatch: expected {','.join(schema.names)}, found {','.join(cells)}",
                        )
                    )
                    break
                continue

            if len(cells) != len(schema.attributes):
                diagnostics.append(
                    ParseDiagnostic(
                        line=number,
                        column=1,
                        message=f"expected {len(schema.attributes)} values, found {len(cells)}",
                    )
                )
                continue
            values: List[Value] = []
            for spec, cell, column in zip(schema.attributes, cells, _columns(row)):
                if cell in ("", MISSING_TOKEN):
                    values.append(MISSING)
                    continue
                try:
                    values.append(convert_value(spec, cell, quoted=True))
                except DomainError as e:
                    diagnostics.append(ParseDiagnostic(line=number, column=column, message=e.detail))
            if len(values) != len(schema.attributes):
                continue
            if values[schema.class_index] is MISSING:
                diagnostics.append(
                    ParseDiagnostic(line=number, column=1, message="missing class value", severity=Severity.WARNING)
                )
            instances.append(Instance(values=tuple(values)))
    except csv.Error as e:
        diagnostics.append(ParseDiagnostic(line=max(reader.line_num, 1), column=1, message=f"malformed CSV: {e}"))

    if not header_seen:
        diagnostics.append(ParseDiagnostic(line=1, column=1, message="missing header row"))

    if any(d.severity == Severity.ERROR for d in diagnostics):
        raise CsvParseError(diagnostics)
    for warning in diagnostics:
        logger.warning("CSV {}", warning)
    logger.debug("CSV 解析完成: 实例 {} 个", len(instances))
    return Dataset(relation=relation, header=schema, instances=tuple(instances))


def load_csv(path: str | Path, schema: Schema) -> Dataset:
    target = Path(path)
    return parse_csv(target.read_text(encoding="utf-8"), schema, relation=target.stem)


def write_csv(dataset: Dataset) -> str:
    """
    parse_csv 的逆操作，缺失值写为 '?'

    CSV 单元格不保留引号信息，名义值 '?' 与空串读回时会变成缺失，所以拒绝写出。

    Raises:
        DomainError: 某个实例取了名义值 '?' 或空串
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(dataset.header.names)
    for inst in dataset.instances:
        row = []
        for spec, v in zip(dataset.header.attributes, inst.values):
            if v is MISSING:
                row.append(MISSING_TOKEN)
            elif spec.is_nominal:
                label = spec.values[int(v)]
                if label.strip() in ("", MISSING_TOKEN):
                    raise DomainError(
                        f"attribute '{spec.name}': nominal value '{label}' would read back from CSV as missing"
                    )
                row.append(label)
            else:
                row.append(format_number(v))
        writer.writerow(row)
    return buf.getvalue()
