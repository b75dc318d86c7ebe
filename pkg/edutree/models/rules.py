from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from edutree.core.exceptions import UnsupportedMissingError
from edutree.models.dataset import Instance, Schema
from edutree.models.enums import ConditionOp


class Condition(BaseModel):
    model_config = ConfigDict(frozen=True)

    attribute: str
    op: ConditionOp
    values: Tuple[str, ...] = Field(default=(), description="eq 为单个取值，in 为取值集合")
    threshold: Optional[float] = Field(None, description="le/gt 的阈值")

    @model_validator(mode="after")
    def validate_test(self) -> "Condition":
        if self.op == ConditionOp.EQ and len(self.values) != 1:
            raise ValueError("eq condition takes exactly one value")
        if self.op == ConditionOp.IN and not self.values:
            raise ValueError("in condition takes at least one value")
        if self.op in (ConditionOp.LE, ConditionOp.GT) and self.threshold is None:
            raise ValueError(f"{self.op} condition requires a threshold")
        return self

    @classmethod
    def equals(cls, attribute: str, value: str) -> "Condition":
        return cls(attribute=attribute, op=ConditionOp.EQ, values=(value,))

    @classmethod
    def member_of(cls, attribute: str, values: Tuple[str, ...]) -> "Condition":
        return cls(attribute=attribute, op=ConditionOp.IN, values=tuple(values))

    def matches(self, instance: Instance, header: Schema) -> bool:
        j = header.index_of(self.attribute)
        value = instance.values[j]
        if value is None:
            raise UnsupportedMissingError(f"missing value for tested attribute '{self.attribute}'")
        if self.op in (ConditionOp.EQ, ConditionOp.IN):
            return header.attributes[j].values[int(value)] in self.values
        if self.op == ConditionOp.LE:
            return float(value) <= self.threshold
        return float(value) > self.threshold


class Rule(BaseModel):
    """条件按根到叶的顺序合取；consequent 为 None 表示 unclassified"""

    model_config = ConfigDict(frozen=True)

    conditions: Tuple[Condition, ...] = ()
    consequent: Optional[str] = None
    counts: Tuple[int, ...] = Field(default=(), description="叶节点的训练类别计数")

    def matches(self, instance: Instance, header: Schema) -> bool:
        return all(c.matches(instance, header) for c in self.conditions)


class RuleSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    header: Schema
    rules: Tuple[Rule, ...]

    def __len__(self) -> int:
        return len(self.rules)

    @property
    def class_attribute(self) -> str:
        return self.header.class_attribute.name
