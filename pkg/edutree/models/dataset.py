#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
数据模型：属性声明、模式、实例与数据集

名义值以声明列表中的下标保存，数值属性保存浮点数，缺失值用 None 表示。
所有模型构造后不可变。
"""

import math
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from edutree.core.exceptions import DomainError
from edutree.models.counts import ClassCounts
from edutree.models.enums import AttributeKind

# 缺失值标记
MISSING = None

Value = Optional[Union[int, float]]


class AttributeSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, description="属性名")
    kind: AttributeKind = Field(AttributeKind.NOMINAL, description="属性类型")
    values: Tuple[str, ...] = Field(default=(), description="名义属性的有序取值")

    @model_validator(mode="after")
    def validate_values(self) -> "AttributeSpec":
        if self.kind == AttributeKind.NOMINAL:
            if not self.values:
                raise ValueError(f"nominal attribute '{self.name}' declares no values")
            seen = set()
            for value in self.values:
                if value in seen:
                    raise ValueError(f"nominal attribute '{self.name}' declares value '{value}' twice")
                seen.add(value)
        elif self.values:
            raise ValueError(f"numeric attribute '{self.name}' cannot declare values")
        return self

    @classmethod
    def nominal(cls, name: str, values: Sequence[str]) -> "AttributeSpec":
        return cls(name=name, kind=AttributeKind.NOMINAL, values=tuple(values))

    @classmethod
    def numeric(cls, name: str) -> "AttributeSpec":
        return cls(name=name, kind=AttributeKind.NUMERIC)

    @property
    def is_nominal(self) -> bool:
        return self.kind == AttributeKind.NOMINAL

    def index_of(self, value: str) -> int:
        """名义值 -> 下标"""
        try:
            return self.values.index(value)
        except ValueError:
            raise DomainError(f"undeclared nominal value '{value}' for attribute '{self.name}'")


class Schema(BaseModel):
    model_config = ConfigDict(frozen=True)

    attributes: Tuple[AttributeSpec, ...] = Field(..., min_length=2, description="有序属性声明")
    class_index: int = Field(..., ge=0, description="类别属性位置")

    @model_validator(mode="after")
    def validate_schema(self) -> "Schema":
        names = [a.name for a in self.attributes]
        duplicated = sorted({n for n in names if names.count(n) > 1})
        if duplicated:
            raise ValueError(f"duplicate attribute name '{duplicated[0]}'")
        if self.class_index >= len(self.attributes):
            raise ValueError(f"class_index {self.class_index} out of range")
        if not self.attributes[self.class_index].is_nominal:
            raise ValueError(f"class attribute '{names[self.class_index]}' must be nominal")
        return self

    @classmethod
    def of(cls, attributes: Sequence[AttributeSpec], class_attribute: Optional[str] = None) -> "Schema":
        """按属性名指定类别属性，默认取最后一个"""
        attributes = tuple(attributes)
        if class_attribute is None:
            return cls(attributes=attributes, class_index=len(attributes) - 1)
        names = [a.name for a in attributes]
        if class_attribute not in names:
            raise DomainError(f"unknown class attribute '{class_attribute}'")
        return cls(attributes=attributes, class_index=names.index(class_attribute))

    @cached_property
    def attribute_positions(self) -> Dict[str, int]:
        return {a.name: i for i, a in enumerate(self.attributes)}

    @property
    def names(self) -> List[str]:
        return [a.name for a in self.attributes]

    @property
    def class_attribute(self) -> AttributeSpec:
        return self.attributes[self.class_index]

    @property
    def class_values(self) -> Tuple[str, ...]:
        return self.class_attribute.values

    @property
    def n_classes(self) -> int:
        return len(self.class_values)

    @property
    def predictor_indices(self) -> List[int]:
        return [i for i in range(len(self.attributes)) if i != self.class_index]

    def index_of(self, name: str) -> int:
        try:
            return self.attribute_positions[name]
        except KeyError:
            raise DomainError(f"unknown attribute '{name}'")

    def attribute(self, name: str) -> AttributeSpec:
        return self.attributes[self.index_of(name)]


class Instance(BaseModel):
    """一行数据，按模式属性顺序对齐"""

    model_config = ConfigDict(frozen=True)

    values: Tuple[Value, ...] = Field(..., description="名义下标 | 数值 | None")

    def __len__(self) -> int:
        return len(self.values)


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    row: int = Field(..., description="数据行号，从 1 开始")
    column: Optional[str] = Field(None, description="属性名，整行问题为 None")
    reason: str

    def __str__(self) -> str:
        where = f"row {self.row}" if self.column is None else f"row {self.row}, column '{self.column}'"
        return f"{where}: {self.reason}"


class Dataset(BaseModel):
    model_config = ConfigDict(frozen=True)

    relation: str = Field("dataset", description="关系名")
    header: Schema = Field(..., description="属性模式")
    instances: Tuple[Instance, ...] = Field(default=(), description="实例")

    def __len__(self) -> int:
        return len(self.instances)

    @classmethod
    def from_labels(
        cls,
        header: Schema,
        rows: Iterable[Sequence[Union[str, float, None]]],
        relation: str = "dataset",
    ) -> "Dataset":
        """
        由取值标签构造数据集，名义标签转为下标

        Raises:
            DomainError: 任一行有违规，消息为第一条违规
        """
        rows = [tuple(row) for row in rows]
        violations = validate_label_rows(header, rows)
        if violations:
            raise DomainError(str(violations[0]))
        instances = []
        for row in rows:
            values: List[Value] = []
            for spec, raw in zip(header.attributes, row):
                if raw is None:
                    values.append(MISSING)
                elif spec.is_nominal:
                    values.append(spec.index_of(str(raw)))
                else:
                    values.append(float(raw))
            instances.append(Instance(values=tuple(values)))
        return cls(relation=relation, header=header, instances=tuple(instances))

    def _build_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        n_attr = len(self.header.attributes)
        X = np.full((len(self.instances), n_attr), np.nan, dtype=float)
        for i, inst in enumerate(self.instances):
            for j, v in enumerate(inst.values):
                if v is not None:
                    X[i, j] = v
        y_col = X[:, self.header.class_index]
        y = np.where(np.isnan(y_col), -1, np.nan_to_num(y_col, nan=-1)).astype(int)
        return X, y

    def to_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """(X, y)：X 含全部属性列（缺失为 NaN），y 为类别下标（缺失为 -1）"""
        return self._build_arrays()

    def class_codes(self) -> np.ndarray:
        return self._build_arrays()[1]

    def class_counts(self) -> ClassCounts:
        y = self._build_arrays()[1]
        return ClassCounts.of(np.bincount(y[y >= 0], minlength=self.header.n_classes))

    def subset(self, indices: Iterable[int]) -> "Dataset":
        return Dataset(
            relation=self.relation,
            header=self.header,
            instances=tuple(self.instances[i] for i in indices),
        )

    def label_of(self, instance: Instance) -> Optional[str]:
        code = instance.values[self.header.class_index]
        return None if code is None else self.header.class_values[int(code)]

    def labels(self, instance: Instance) -> List[Union[str, float, None]]:
        """实例的可读取值"""
        out: List[Union[str, float, None]] = []
        for spec, v in zip(self.header.attributes, instance.values):
            if v is None:
                out.append(None)
            elif spec.is_nominal:
                out.append(spec.values[int(v)])
            else:
                out.append(float(v))
        return out

    def value_tally(self, name: str) -> Dict[str, int]:
        """名义属性的取值计数，按声明顺序"""
        j = self.header.index_of(name)
        spec = self.header.attributes[j]
        if not spec.is_nominal:
            raise DomainError(f"attribute '{name}' is numeric")
        tally = {v: 0 for v in spec.values}
        for inst in self.instances:
            v = inst.values[j]
            if v is not None:
                tally[spec.values[int(v)]] += 1
        return tally


def validate_dataset(dataset: Dataset) -> List[Violation]:
    """
    检查数据集不变量，违规作为数据返回而不是抛出

    Returns:
        违规列表；为空当且仅当所有不变量成立
    """
    header = dataset.header
    n_attr = len(header.attributes)
    violations: List[Violation] = []

    for row, inst in enumerate(dataset.instances, start=1):
        if len(inst.values) != n_attr:
            violations.append(
                Violation(row=row, reason=f"arity: expected {n_attr} values, found {len(inst.values)}")
            )
            continue
        for j, (spec, v) in enumerate(zip(header.attributes, inst.values)):
            if v is None:
                if j == header.class_index:
                    violations.append(Violation(row=row, column=spec.name, reason="missing class value"))
                continue
            reason = _value_problem(spec, v)
            if reason:
                violations.append(Violation(row=row, column=spec.name, reason=reason))

    return violations


def validate_label_rows(header: Schema, rows: Iterable[Sequence[Union[str, float, None]]]) -> List[Violation]:
    """检查尚未编码的标签行：元数、未声明的名义值、非数值；None 为缺失"""
    n_attr = len(header.attributes)
    violations: List[Violation] = []
    for row, values in enumerate(rows, start=1):
        if len(values) != n_attr:
            violations.append(Violation(row=row, reason=f"arity: expected {n_attr} values, found {len(values)}"))
            continue
        for j, (spec, raw) in enumerate(zip(header.attributes, values)):
            if raw is None:
                if j == header.class_index:
                    violations.append(Violation(row=row, column=spec.name, reason="missing class value"))
                continue
            if spec.is_nominal:
                if str(raw) not in spec.values:
                    violations.append(Violation(row=row, column=spec.name, reason=f"undeclared nominal value '{raw}'"))
                continue
            try:
                number = float(raw)
            except (TypeError, ValueError):
                violations.append(Violation(row=row, column=spec.name, reason=f"non-numeric value {raw!r}"))
                continue
            if not math.isfinite(number):
                violations.append(Violation(row=row, column=spec.name, reason=f"non-finite numeric value {raw!r}"))
    return violations


def _value_problem(spec: AttributeSpec, v: object) -> Optional[str]:
    if spec.is_nominal:
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            return f"nominal value {v!r} is not an index"
        if not 0 <= int(v) < len(spec.values):
            return f"undeclared nominal value index {int(v)}"
        return None
    if isinstance(v, bool) or not isinstance(v, (int, float, np.integer, np.floating)):
        return f"non-numeric value {v!r}"
    if not math.isfinite(float(v)):
        return f"non-finite numeric value {v!r}"
    return None
