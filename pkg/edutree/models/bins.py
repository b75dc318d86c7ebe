"""
成绩分箱：百分比 -> 等级名称

区间一律左闭右开 [lo, hi)，阈值本身归入上一级（"≥ X" 语义）；最高一级包含 100。
"""

import bisect
import math
from typing import Dict, Mapping, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from edutree.core.exceptions import DomainError


class GradeBins(BaseModel):
    model_config = ConfigDict(frozen=True)

    variable: str = Field(..., description="变量名，如 PSM/ESM/CTG/ATT")
    categories: Tuple[str, ...] = Field(..., min_length=1, description="由低到高的等级名称")
    boundaries: Tuple[float, ...] = Field(default=(), description="categories[1:] 各自的下界")

    @model_validator(mode="after")
    def validate_bins(self) -> "GradeBins":
        if len(self.boundaries) != len(self.categories) - 1:
            raise ValueError("need exactly one boundary between consecutive categories")
        if len(set(self.categories)) != len(self.categories):
            raise ValueError("category names must be unique")
        edges = (0.0, *self.boundaries, 100.0)
        if any(not (lo < hi) for lo, hi in zip(edges, edges[1:])):
            raise ValueError("boundaries must be strictly increasing inside (0, 100)")
        return self


def discretize_marks(percent: float, bins: GradeBins) -> str:
    """
    把百分比映射到所在半开区间的等级

    Raises:
        DomainError: percent 不在 [0, 100] 内
    """
    if percent is None or not isinstance(percent, (int, float)) or math.isnan(percent):
        raise DomainError(f"percent must be a number in [0, 100], got {percent!r}")
    if not 0.0 <= percent <= 100.0:
        raise DomainError(f"percent {percent} outside [0, 100] for {bins.variable}")
    return bins.categories[bisect.bisect_right(bins.boundaries, percent)]


# PSM/ESM: First ≥ 60, Second ≥ 45 & < 60, Third ≥ 36 & < 45, Fail < 36
PSM_BINS = GradeBins(variable="PSM", categories=("Fail", "Third", "Second", "First"), boundaries=(36.0, 45.0, 60.0))
ESM_BINS = GradeBins(variable="ESM", categories=("Fail", "Third", "Second", "First"), boundaries=(36.0, 45.0, 60.0))
# CTG: Poor < 40, Average ≥ 40 & < 60, Good ≥ 60
CTG_BINS = GradeBins(variable="CTG", categories=("Poor", "Average", "Good"), boundaries=(40.0, 60.0))
# ATT: Poor < 60, Average ≥ 60 & < 80, Good ≥ 80
ATT_BINS = GradeBins(variable="ATT", categories=("Poor", "Average", "Good"), boundaries=(60.0, 80.0))

STUDENT_BINS: Dict[str, GradeBins] = {b.variable: b for b in (PSM_BINS, CTG_BINS, ATT_BINS, ESM_BINS)}


def discretize_row(record: Mapping[str, object]) -> Dict[str, str]:
    """
    原始记录 -> 表格风格的名义行

    有分箱定义的变量（PSM/CTG/ATT/ESM）传入百分比；SEM/ASS/LW 只有定性定义，原样保留。
    """
    row: Dict[str, str] = {}
    for name, raw in record.items():
        bins = STUDENT_BINS.get(name)
        row[name] = discretize_marks(float(raw), bins) if bins is not None else str(raw)
    return row
