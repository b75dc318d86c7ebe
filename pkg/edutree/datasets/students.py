"""
内置的 48 名学生数据集

变量：PSM 上学期成绩、CTG 课堂测验、SEM 研讨表现、ASS 作业、ATT 出勤、LW 实验、ESM 期末成绩（类别）。
行数据逐字保留；原表头 "ASSS" 更正为 "ASS"。
"""

from functools import lru_cache
from typing import Tuple

from edutree.models.dataset import AttributeSpec, Dataset, Schema

GRADES = ("First", "Second", "Third", "Fail")
LEVELS = ("Poor", "Average", "Good")
YES_NO = ("Yes", "No")

STUDENT_SCHEMA = Schema.of(
    [
        AttributeSpec.nominal("PSM", GRADES),
        AttributeSpec.nominal("CTG", LEVELS),
        AttributeSpec.nominal("SEM", LEVELS),
        AttributeSpec.nominal("ASS", YES_NO),
        AttributeSpec.nominal("ATT", LEVELS),
        AttributeSpec.nominal("LW", YES_NO),
        AttributeSpec.nominal("ESM", GRADES),
    ],
    class_attribute="ESM",
)

# PSM, CTG, SEM, ASS, ATT, LW, ESM
STUDENT_ROWS: Tuple[Tuple[str, ...], ...] = (
    ("First", "Good", "Good", "Yes", "Good", "Yes", "First"),
    ("First", "Good", "Average", "Yes", "Good", "Yes", "First"),
    ("First", "Good", "Average", "No", "Average", "No", "First"),
    ("First", "Average", "Good", "No", "Good", "Yes", "First"),
    ("First", "Average", "Average", "No", "Good", "Yes", "First"),
    ("First", "Poor", "Average", "No", "Average", "Yes", "First"),
    ("First", "Poor", "Average", "No", "Poor", "Yes", "Second"),
    ("First", "Average", "Poor", "Yes", "Average", "No", "First"),
    ("First", "Poor", "Poor", "No", "Poor", "No", "Third"),
    ("First", "Average", "Average", "Yes", "Good", "No", "First"),
    ("Second", "Good", "Good", "Yes", "Good", "Yes", "First"),
    ("Second", "Good", "Average", "Yes", "Good", "Yes", "First"),
    ("Second", "Good", "Average", "Yes", "Good", "No", "First"),
    ("Second", "Average", "Good", "Yes", "Good", "No", "First"),
    ("Second", "Good", "Average", "Yes", "Average", "Yes", "First"),
    ("Second", "Good", "Average", "Yes", "Poor", "Yes", "Second"),
    ("Second", "Average", "Average", "Yes", "Good", "Yes", "Second"),
    ("Second", "Average", "Average", "Yes", "Poor", "Yes", "Second"),
    ("Second", "Poor", "Average", "No", "Good", "Yes", "Second"),
    ("Second", "Average", "Poor", "Yes", "Average", "Yes", "Second"),
    ("Second", "Poor", "Average", "No", "Poor", "No", "Third"),
    ("Second", "Poor", "Poor", "Yes", "Average", "Yes", "Third"),
    ("Second", "Poor", "Poor", "No", "Average", "Yes", "Third"),
    ("Second", "Poor", "Poor", "Yes", "Good", "Yes", "Second"),
    ("Second", "Poor", "Poor", "Yes", "Poor", "Yes", "Third"),
    ("Second", "Poor", "Poor", "No", "Poor", "Yes", "Fail"),
    ("Third", "Good", "Good", "Yes", "Good", "Yes", "First"),
    ("Third", "Average", "Good", "Yes", "Good", "Yes", "Second"),
    ("Third", "Good", "Average", "Yes", "Good", "Yes", "Second"),
    ("Third", "Good", "Good", "Yes", "Average", "Yes", "Second"),
    ("Third", "Good", "Good", "No", "Good", "Yes", "Second"),
    ("Third", "Average", "Average", "Yes", "Good", "Yes", "Second"),
    ("Third", "Average", "Average", "No", "Average", "Yes", "Third"),
    ("Third", "Average", "Good", "No", "Good", "Yes", "Third"),
    ("Third", "Good", "Average", "No", "Average", "Yes", "Third"),
    ("Third", "Average", "Poor", "No", "Average", "Yes", "Third"),
    ("Third", "Poor", "Average", "Yes", "Average", "Yes", "Third"),
    ("Third", "Poor", "Average", "No", "Poor", "Yes", "Fail"),
    ("Third", "Average", "Average", "No", "Poor", "Yes", "Third"),
    ("Third", "Poor", "Poor", "No", "Good", "No", "Third"),
    ("Third", "Poor", "Poor", "No", "Poor", "Yes", "Fail"),
    ("Third", "Poor", "Poor", "No", "Poor", "No", "Fail"),
    ("Fail", "Good", "Good", "Yes", "Good", "Yes", "Second"),
    ("Fail", "Good", "Good", "Yes", "Average", "Yes", "Second"),
    ("Fail", "Average", "Good", "Yes", "Average", "Yes", "Third"),
    ("Fail", "Poor", "Poor", "Yes", "Average", "No", "Fail"),
    ("Fail", "Good", "Poor", "No", "Poor", "Yes", "Fail"),
    ("Fail", "Poor", "Poor", "No", "Poor", "Yes", "Fail"),
)


@lru_cache(maxsize=1)
def load_embedded_students() -> Dataset:
    """48 行学生数据，ESM 为类别属性"""
    return Dataset.from_labels(STUDENT_SCHEMA, STUDENT_ROWS, relation="students")
