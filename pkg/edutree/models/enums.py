from enum import Enum


class StrEnum(str, Enum):
    """Python 3.10 兼容的 StrEnum 实现"""

    def __str__(self) -> str:
        return str(self.value)

    @classmethod
    def get_member_values(cls):
        return [item.value for item in cls]


class AttributeKind(StrEnum):
    NOMINAL = "nominal"
    NUMERIC = "numeric"


class Algorithm(StrEnum):
    """决策树算法，顺序即输出顺序"""

    ID3 = "id3"
    C45 = "c45"
    CART = "cart"


class NodeKind(StrEnum):
    LEAF = "leaf"
    EMPTY = "empty"
    MULTIWAY = "multiway"
    SUBSET = "subset"
    THRESHOLD = "threshold"


class Criterion(StrEnum):
    INFORMATION_GAIN = "information_gain"
    GAIN_RATIO = "gain_ratio"
    GINI_DECREASE = "gini_decrease"


class ConditionOp(StrEnum):
    EQ = "eq"
    IN = "in"
    LE = "le"
    GT = "gt"


class Severity(StrEnum):
    ERROR = "error"
    WARNING = "warning"


class ReportFormat(StrEnum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json-document"
    SVG = "svg"


class Subcommand(StrEnum):
    TRAIN = "train"
    PREDICT = "predict"
    RULES = "rules"
    COMPARE = "compare"
