EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA = 2

# 嵌入数据集的哨兵路径
EMBEDDED_SENTINEL = "@embedded"

# 浮点并列判定的绝对容差
TIE_TOLERANCE = 1e-12
