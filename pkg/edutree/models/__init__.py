from .bins import ATT_BINS, CTG_BINS, ESM_BINS, PSM_BINS, GradeBins, discretize_marks, discretize_row
from .counts import ClassCounts
from .dataset import MISSING, AttributeSpec, Dataset, Instance, Schema, Violation, validate_dataset, validate_label_rows
from .enums import Algorithm, AttributeKind, NodeKind
from .tree import DecisionTree, EmptyLeaf, Leaf, MultiwaySplit, Prediction, SubsetSplit, ThresholdSplit, TreeNode

__all__ = [
    "ATT_BINS",
    "CTG_BINS",
    "ESM_BINS",
    "PSM_BINS",
    "GradeBins",
    "discretize_marks",
    "discretize_row",
    "ClassCounts",
    "MISSING",
    "AttributeSpec",
    "Dataset",
    "Instance",
    "Schema",
    "Violation",
    "validate_dataset",
    "validate_label_rows",
    "Algorithm",
    "AttributeKind",
    "NodeKind",
    "DecisionTree",
    "EmptyLeaf",
    "Leaf",
    "MultiwaySplit",
    "Prediction",
    "SubsetSplit",
    "ThresholdSplit",
    "TreeNode",
]
