from .c45 import C45Learner, build_c45, c45_learner
from .cart import CARTLearner, build_cart, cart_learner
from .evaluation import confusion_from_pairs, cross_validate, precision_per_class
from .folds import stratified_folds
from .id3 import ID3Learner, build_id3, id3_learner
from .learners import get_learner, learners, train
from .predict import classify, predict_dataset, resubstitution
from .pruning import (
    cost_complexity_sequence,
    pessimistic_upper_bound,
    prune_cost_complexity,
    prune_pessimistic,
    prune_to_alpha,
)
from .rules import UNCLASSIFIED, extract_rules, render_rules, rules_classify, rules_to_csv
from .split_metrics import (
    SplitStatistics,
    binary_gini_decrease,
    enumerate_binary_partitions,
    entropy,
    gain_ratio,
    gini,
    information_gain,
    split_info,
)

__all__ = [
    "C45Learner",
    "CARTLearner",
    "ID3Learner",
    "build_c45",
    "build_cart",
    "build_id3",
    "c45_learner",
    "cart_learner",
    "id3_learner",
    "get_learner",
    "learners",
    "train",
    "classify",
    "predict_dataset",
    "resubstitution",
    "stratified_folds",
    "confusion_from_pairs",
    "cross_validate",
    "precision_per_class",
    "cost_complexity_sequence",
    "pessimistic_upper_bound",
    "prune_cost_complexity",
    "prune_pessimistic",
    "prune_to_alpha",
    "UNCLASSIFIED",
    "extract_rules",
    "render_rules",
    "rules_classify",
    "rules_to_csv",
    "SplitStatistics",
    "binary_gini_decrease",
    "enumerate_binary_partitions",
    "entropy",
    "gain_ratio",
    "gini",
    "information_gain",
    "split_info",
]
