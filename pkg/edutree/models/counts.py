from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator


class ClassCounts(BaseModel):
    """按类别声明顺序排列的类别计数"""

    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...] = Field(..., min_length=1, description="每个类别的实例数")

    @field_validator("counts")
    @classmethod
    def validate_counts(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(c < 0 for c in v):
            raise ValueError("class counts must be non-negative")
        return v

    @computed_field
    @property
    def total(self) -> int:
        return sum(self.counts)

    @classmethod
    def of(cls, counts: Sequence[int]) -> "ClassCounts":
        return cls(counts=tuple(int(c) for c in counts))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=float)
