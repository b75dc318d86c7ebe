"""
已发表的参考结果（10 折交叉验证，同一 48 行数据）

compare 命令把这些数字打印在计算结果旁边；测试用混淆矩阵校验精确率公式。
"""

from typing import Dict, Optional, Tuple

from edutree.datasets.students import GRADES
from edutree.models.enums import Algorithm
from edutree.schemas.reports import ConfusionMatrix

# (correct %, incorrect %)，ID3 两者之和为 87.5，差额是 unclassified
REFERENCE_ACCURACY: Dict[Algorithm, Tuple[float, float]] = {
    Algorithm.ID3: (52.0833, 35.4167),
    Algorithm.C45: (45.8333, 54.1667),
    Algorithm.CART: (56.25, 43.75),
}

REFERENCE_BUILD_TIME: Dict[Algorithm, float] = {
    Algorithm.ID3: 0.0,
    Algorithm.C45: 0.02,
    Algorithm.CART: 0.05,
}

# 每个实际类别的行和补足到类别计数 {14, 14, 13, 7} 的差额即 unclassified
REFERENCE_MATRICES: Dict[Algorithm, ConfusionMatrix] = {
    Algorithm.ID3: ConfusionMatrix(
        labels=GRADES,
        cells=((8, 3, 0, 0), (4, 6, 2, 0), (0, 4, 7, 2), (0, 1, 1, 4)),
        unclassified_per_actual=(3, 2, 0, 1),
    ),
    # 对角线为 21/48 = 43.75%，与发表的正确率 45.8333% 不一致
    Algorithm.C45: ConfusionMatrix(
        labels=GRADES,
        cells=((8, 4, 2, 0), (3, 8, 2, 1), (4, 4, 4, 1), (0, 1, 5, 1)),
        unclassified_per_actual=(0, 0, 0, 0),
    ),
    Algorithm.CART: ConfusionMatrix(
        labels=GRADES,
        cells=((9, 3, 2, 0), (2, 10, 2, 0), (2, 4, 5, 2), (0, 1, 3, 3)),
        unclassified_per_actual=(0, 0, 0, 0),
    ),
}

# 按发表值原样记录；C4.5 的 First 印为 55.31，由矩阵重算为 53.3
REFERENCE_PRECISION: Dict[Algorithm, Tuple[Optional[float], ...]] = {
    Algorithm.ID3: (66.7, 42.9, 70.0, 66.7),
    Algorithm.C45: (55.31, 47.1, 30.8, 33.3),
    Algorithm.CART: (69.2, 55.6, 41.7, 60.0),
}
