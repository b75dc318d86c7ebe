"""
评估结果模型

字段名即 json-document 报告的字段名。
"""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from edutree.models.enums import Algorithm


class FoldAssignment(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=2, description="折数")
    fold_of: Tuple[int, ...] = Field(..., description="每个实例所属折，取值 [0, k)")

    @model_validator(mode="after")
    def validate_folds(self) -> "FoldAssignment":
        if any(not 0 <= f < self.k for f in self.fold_of):
            raise ValueError(f"fold index outside [0, {self.k})")
        return self

    def test_indices(self, fold: int) -> Tuple[int, ...]:
        return tuple(i for i, f in enumerate(self.fold_of) if f == fold)

    def train_indices(self, fold: int) -> Tuple[int, ...]:
        return tuple(i for i, f in enumerate(self.fold_of) if f != fold)

    def fold_sizes(self) -> Tuple[int, ...]:
        sizes = [0] * self.k
        for f in self.fold_of:
            sizes[f] += 1
        return tuple(sizes)


class ConfusionMatrix(BaseModel):
    """实际 × 预测的计数表，只统计被分类的实例；unclassified 按实际类别单独计数"""

    model_config = ConfigDict(frozen=True)

    labels: Tuple[str, ...] = Field(..., min_length=1)
    cells: Tuple[Tuple[int, ...], ...] = Field(..., description="cells[actual][predicted]")
    unclassified_per_actual: Tuple[int, ...]

    @model_validator(mode="after")
    def validate_shape(self) -> "ConfusionMatrix":
        n = len(self.labels)
        if len(self.cells) != n or any(len(row) != n for row in self.cells):
            raise ValueError(f"cells must be {n}x{n}")
        if len(self.unclassified_per_actual) != n:
            raise ValueError(f"unclassified_per_actual must have {n} entries")
        return self

    @computed_field
    @property
    def classified(self) -> int:
        return sum(sum(row) for row in self.cells)

    @computed_field
    @property
    def correct(self) -> int:
        return sum(self.cells[i][i] for i in range(len(self.labels)))

    @computed_field
    @property
    def unclassified(self) -> int:
        return sum(self.unclassified_per_actual)

    @property
    def total(self) -> int:
        return self.classified + self.unclassified

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self.cells)

    def column_sums(self) -> Tuple[int, ...]:
        return tuple(sum(row[j] for row in self.cells) for j in range(len(self.labels)))


class EvaluationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    algorithm: Algorithm
    matrix: ConfusionMatrix
    n_instances: int = Field(..., ge=1)
    correct: int = Field(..., ge=0)
    incorrect: int = Field(..., ge=0)
    unclassified: int = Field(..., ge=0)
    correct_pct: float
    incorrect_pct: float
    unclassified_pct: float
    per_class_precision: Tuple[Optional[float], ...] = Field(..., description="与 matrix.labels 对齐，预测列为空时为 None")
    build_time_seconds: float = Field(..., ge=0.0, description="全量训练一次的墙钟时间")
    k: int
    seed: int

    @model_validator(mode="after")
    def validate_totals(self) -> "EvaluationReport":
        if self.correct + self.incorrect + self.unclassified != self.n_instances:
            raise ValueError("correct + incorrect + unclassified must equal n_instances")
        if abs(self.correct_pct + self.incorrect_pct + self.unclassified_pct - 100.0) > 1e-9:
            raise ValueError("percentages must sum to 100")
        return self
