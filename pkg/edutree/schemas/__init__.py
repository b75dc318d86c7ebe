from .params import LearnerParams
from .reports import ConfusionMatrix, EvaluationReport, FoldAssignment
from .run_config import RunConfig, build_run_config

__all__ = [
    "LearnerParams",
    "ConfusionMatrix",
    "EvaluationReport",
    "FoldAssignment",
    "RunConfig",
    "build_run_config",
]
